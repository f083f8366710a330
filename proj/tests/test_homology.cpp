#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace polymir;
using namespace testutil;

TEST_CASE("simplicial chain complexes") {
    auto edge = SimplicialComplex::from_facets({0, 1}, {{0, 1}});
    auto C = chain_complex_of_simplicial(edge);
    CHECK(C.cell_count(0) == 2);
    CHECK(C.cell_count(1) == 1);
    auto M = C.boundary_matrix(1);
    CHECK(M[0][0] == -1);
    CHECK(M[1][0] == 1);

    CHECK_NOTHROW(chain_complex_of_simplicial(triangle_boundary()).validate());
    CHECK_NOTHROW(chain_complex_of_simplicial(projective_plane_6()).validate());
}

TEST_CASE("smith normal form basics") {
    SmithNormalForm id3 = smith_normal_form({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id3.divisors == std::vector<BigInt>{1, 1, 1});
    CHECK(id3.rank() == 3);

    SmithNormalForm d = smith_normal_form({{2, 0}, {0, 0}});
    CHECK(d.divisors == std::vector<BigInt>{2});
    CHECK(d.rank() == 1);
}

TEST_CASE("smith normal form against the minor-gcd and rank oracles") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 6;
        IntMatrix M(n, std::vector<BigInt>(n));
        for (auto& row : M)
            for (auto& x : row) x = entry(rng);
        auto snf = smith_normal_form(M);
        CHECK(snf.rank() == rational_rank(M));
        // d1*...*dk = gcd of k x k minors, for every k.
        BigInt prod = 1;
        for (std::size_t k = 1; k <= snf.rank(); ++k) {
            prod *= snf.divisors[k - 1];
            CHECK(prod == gcd_of_minors(M, k));
        }
        if (snf.rank() < n) CHECK(gcd_of_minors(M, snf.rank() + 1) == 0);
        // Divisibility chain.
        for (std::size_t k = 1; k < snf.divisors.size(); ++k)
            CHECK(snf.divisors[k] % snf.divisors[k - 1] == 0);
    }
}

TEST_CASE("smith normal form is invariant under unimodular moves") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 5;
        IntMatrix M(n, std::vector<BigInt>(n));
        for (auto& row : M)
            for (auto& x : row) x = entry(rng);
        auto before = smith_normal_form(M);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int moves = 0; moves < 12; ++moves) {
            std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            int c = coef(rng);
            if (moves % 2 == 0)
                for (std::size_t j = 0; j < n; ++j) M[a][j] += c * M[b][j];
            else
                for (std::size_t i = 0; i < n; ++i) M[i][a] += c * M[i][b];
        }
        auto after = smith_normal_form(M);
        CHECK(before.divisors == after.divisors);
    }
}

TEST_CASE("fast SNF path agrees with the exact path") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < 30; ++t) {
        std::size_t rows = 7, cols = 5;
        std::vector<std::vector<long long>> Mi(rows, std::vector<long long>(cols));
        IntMatrix Mb(rows, std::vector<BigInt>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                int v = entry(rng);
                Mi[i][j] = v;
                Mb[i][j] = v;
            }
        auto fast = smith_normal_form_i64(Mi);
        REQUIRE(fast.has_value());
        CHECK(fast->divisors == smith_normal_form(Mb).divisors);
    }
}

TEST_CASE("homology profiles") {
    auto oct = homology(octahedron(), true);
    CHECK(oct.betti == std::vector<long long>{0, 0, 1});
    for (const auto& t : oct.torsion) CHECK(t.empty());

    auto rp2 = homology(projective_plane_6(), false);
    CHECK(rp2.betti == std::vector<long long>{1, 0, 0});
    REQUIRE(rp2.torsion.size() == 3);
    CHECK(rp2.torsion[1] == std::vector<BigInt>{2});
    CHECK(rp2.torsion[0].empty());
    CHECK(rp2.torsion[2].empty());

    std::mt19937 rng(37);
    for (int t = 0; t < 10; ++t) {
        auto L = random_complex(rng, 6);
        auto apex = SimplicialComplex::from_facets({100}, {});
        CHECK(is_acyclic(chain_complex_of_simplicial(join(L, apex))));
    }
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(octahedron()) == 2);
    CHECK(euler_characteristic(real_toric(four_cycle())) == 0);
    std::mt19937 rng(41);
    for (int t = 0; t < 15; ++t) {
        auto L = random_complex(rng, 6);
        CHECK(euler_characteristic(barycentric_subdivision(L).complex) ==
              euler_characteristic(L));
        // Alternating Betti sum equals the Euler characteristic.
        auto h = homology(L);
        long long chi = 0;
        for (std::size_t d = 0; d < h.betti.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * h.betti[d];
        CHECK(chi == euler_characteristic(L));
    }
}

TEST_CASE("acyclicity and sphere profiles") {
    auto pt = chain_complex_of_simplicial(SimplicialComplex::from_facets({0}, {}));
    CHECK(is_acyclic(pt));
    CHECK(is_homology_sphere_profile(chain_complex_of_simplicial(triangle_boundary()), 1));
    CHECK_FALSE(is_homology_sphere_profile(chain_complex_of_simplicial(triangle_boundary()), 2));
    // Z_{bd Delta^2}(D1, S0) is the boundary of the 3-cube.
    auto bd_cube = real_toric(triangle_boundary());
    CHECK(is_homology_sphere_profile(bd_cube, 2));
    CHECK_FALSE(is_acyclic(bd_cube));
}

TEST_CASE("homology is invariant under barycentric subdivision") {
    std::mt19937 rng(43);
    for (int t = 0; t < 12; ++t) {
        auto L = random_complex(rng, 6);
        CHECK(homology(L, true) == homology(barycentric_subdivision(L).complex, true));
    }
}

TEST_CASE("join Euler identity") {
    // Reduced Euler characteristics multiply with a sign under joins.
    std::mt19937 rng(47);
    for (int t = 0; t < 15; ++t) {
        auto L1 = random_complex(rng, 5);
        auto L2 = random_complex(rng, 5);
        auto r = join_relabeled(L1, L2);
        long long chi1 = euler_characteristic(L1) - 1;
        long long chi2 = euler_characteristic(L2) - 1;
        long long chij = euler_characteristic(r.complex) - 1;
        CHECK(chij == -chi1 * chi2);
    }
}
