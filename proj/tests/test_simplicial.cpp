#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace polymir;
using namespace testutil;

TEST_CASE("from_facets closes downward") {
    auto d2 = full_triangle();
    CHECK(d2.simplex_count() == 7);
    CHECK(d2.has_simplex({1, 3}));
    auto bd2 = triangle_boundary();
    CHECK(bd2.simplex_count() == 6);
    CHECK_FALSE(bd2.has_simplex({1, 2, 3}));
    auto pt = SimplicialComplex::from_facets({1}, {});
    CHECK(pt.simplex_count() == 1);
    CHECK(pt.has_simplex({1}));
}

TEST_CASE("from_facets rejects bad input") {
    CHECK_THROWS_AS(SimplicialComplex::from_facets({1, 2}, {{1, 3}}), input_error);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({1, 2}, {{1, 1}}), input_error);
    CHECK_THROWS_AS(SimplicialComplex::from_facets({-1}, {}), input_error);
}

TEST_CASE("downward closure after random constructions") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto L = random_complex(rng, 8);
        for (const auto& s : L.simplices())
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + k);
                if (!f.empty()) REQUIRE(L.has_simplex(f));
            }
    }
}

TEST_CASE("flagness") {
    CHECK_FALSE(is_flag(triangle_boundary()));
    CHECK(flag_witness(triangle_boundary()).value() == Simplex{1, 2, 3});
    CHECK(is_flag(four_cycle()));
    CHECK(is_flag(full_triangle()));
}

TEST_CASE("flag iff clique complex of the one-skeleton") {
    std::mt19937 rng(11);
    for (int t = 0; t < 60; ++t) {
        auto L = random_complex(rng, 8);
        CHECK(is_flag(L) == (L == clique_complex(one_skeleton(L))));
    }
}

TEST_CASE("clique complex") {
    CHECK(clique_complex(complete_graph(3)) ==
          SimplicialComplex::from_facets({0, 1, 2}, {{0, 1, 2}}));
    auto c4 = four_cycle();
    CHECK(clique_complex(one_skeleton(c4)) == c4);
    CHECK_THROWS_AS(clique_complex(full_triangle()), input_error);
}

TEST_CASE("clique complex matches brute-force clique enumeration") {
    // Oracle: subset enumeration; expected counts frozen from it.
    for (int n = 1; n <= 8; ++n) {
        auto kn = complete_graph(n);
        auto oracle = brute_force_cliques(kn);
        REQUIRE(oracle.size() == (std::size_t(1) << n) - 1);
        auto cx = clique_complex(kn);
        CHECK(cx.simplex_count() == oracle.size());
        CHECK(std::set<Simplex>(cx.simplices().begin(), cx.simplices().end()) == oracle);
    }
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto g = one_skeleton(random_complex(rng, 7));
        auto cx = clique_complex(g);
        CHECK(std::set<Simplex>(cx.simplices().begin(), cx.simplices().end()) ==
              brute_force_cliques(g));
        CHECK(is_flag(cx));
    }
}

TEST_CASE("one skeleton") {
    CHECK(one_skeleton(full_triangle()) ==
          SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(one_skeleton(four_cycle()) == four_cycle());
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto L = random_complex(rng, 7);
        auto flagification = clique_complex(one_skeleton(L));
        for (const auto& s : L.simplices()) CHECK(flagification.has_simplex(s));
    }
}

TEST_CASE("order complex") {
    Poset chain({10, 20}, {{10, 20}});
    CHECK(order_complex(chain) ==
          SimplicialComplex::from_facets({10, 20}, {{10, 20}}));
    Poset antichain({10, 20}, {});
    CHECK(order_complex(antichain) == two_points(10, 20));
    // Face poset of a single edge: two vertices below one edge.
    Poset facep({0, 1, 2}, {{0, 2}, {1, 2}});
    auto oc = order_complex(facep);
    CHECK(oc.simplices_of_dimension(0).size() == 3);
    CHECK(oc.simplices_of_dimension(1).size() == 2);
    CHECK(is_flag(oc));
    CHECK_THROWS_AS(Poset({0, 1}, {{0, 1}, {1, 0}}), input_error);
}

TEST_CASE("barycentric subdivision") {
    auto edge = SimplicialComplex::from_facets({0, 1}, {{0, 1}});
    auto b = barycentric_subdivision(edge);
    CHECK(b.complex.vertices().size() == 3);
    CHECK(b.complex.simplices_of_dimension(1).size() == 2);

    auto b2 = barycentric_subdivision(triangle_boundary());
    CHECK(b2.complex.vertices().size() == 6);
    CHECK(b2.complex.simplices_of_dimension(1).size() == 6);
    CHECK(b2.complex.dimension() == 1);

    std::mt19937 rng(13);
    for (int t = 0; t < 30; ++t) {
        auto L = random_complex(rng, 7);
        auto bs = barycentric_subdivision(L);
        CHECK(is_flag(bs.complex));
        CHECK(euler_characteristic(bs.complex) == euler_characteristic(L));
    }
}

TEST_CASE("links") {
    auto c4 = four_cycle();
    auto lk = link(c4, {0});
    CHECK(lk.vertices().size() == 2);
    CHECK(lk.dimension() == 0);
    CHECK(link(full_triangle(), {1, 2}) ==
          SimplicialComplex::from_facets({3}, {}));
    CHECK_THROWS_AS(link(c4, {0, 2}), input_error);

    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
        auto L = random_flag_complex(rng, 7);
        for (const auto& s : L.simplices()) CHECK(is_flag(link(L, s)));
    }
}

TEST_CASE("joins") {
    auto s1 = join(two_points(0, 1), two_points(2, 3));
    CHECK(s1.vertices().size() == 4);
    CHECK(s1.simplices_of_dimension(1).size() == 4);
    CHECK(s1.dimension() == 1);

    auto cone = join(SimplicialComplex::from_facets({9}, {}), four_cycle());
    CHECK(cone.simplices_of_dimension(2).size() == 4);

    auto oct = octahedron();
    CHECK(oct.simplices_of_dimension(0).size() == 6);
    CHECK(oct.simplices_of_dimension(1).size() == 12);
    CHECK(oct.simplices_of_dimension(2).size() == 8);

    CHECK_THROWS_AS(join(two_points(0, 1), two_points(1, 2)), input_error);
    auto rel = join_relabeled(two_points(0, 1), two_points(0, 1));
    CHECK(rel.offset == 2);
    CHECK(rel.complex.vertices().size() == 4);
}

TEST_CASE("full subcomplexes") {
    CHECK(full_subcomplex(full_triangle(), {1, 2}) ==
          SimplicialComplex::from_facets({1, 2}, {{1, 2}}));
    auto c4 = four_cycle();
    CHECK(full_subcomplex(c4, {0, 1, 2, 3}) == c4);
    CHECK(full_subcomplex(c4, {0, 2}) == two_points(0, 2));
    CHECK_THROWS_AS(full_subcomplex(c4, {9}), input_error);

    std::mt19937 rng(19);
    for (int t = 0; t < 20; ++t) {
        auto L = random_complex(rng, 7);
        std::vector<int> half;
        for (int v : L.vertices())
            if (v % 2 == 0) half.push_back(v);
        auto sub = full_subcomplex(L, half);
        for (const auto& s : L.simplices()) {
            bool inside = true;
            for (int v : s) inside = inside && v % 2 == 0;
            if (inside) CHECK(sub.has_simplex(s));
        }
    }
}

TEST_CASE("nondegenerate maps and colorings") {
    auto dn = SimplicialComplex::full_simplex({0, 1, 2});
    SimplicialMap id{dn, dn, {{0, 0}, {1, 1}, {2, 2}}};
    CHECK(is_nondegenerate(id));
    CHECK(is_coloring(id));

    auto edge = SimplicialComplex::from_facets({0, 1}, {{0, 1}});
    SimplicialMap constant{edge, SimplicialComplex::full_simplex({5}), {{0, 5}, {1, 5}}};
    CHECK_FALSE(is_nondegenerate(constant));

    // Dimension labeling of a barycentric subdivision colors onto a simplex.
    auto L = full_triangle();
    auto b = barycentric_subdivision(L);
    auto labels = b.dimension_labels();
    SimplicialMap d{b.complex, SimplicialComplex::full_simplex({0, 1, 2}), labels};
    CHECK(is_coloring(d));

    // 2-coloring of the 4-cycle.
    SimplicialMap two{four_cycle(), SimplicialComplex::full_simplex({0, 1}),
                      {{0, 0}, {1, 1}, {2, 0}, {3, 1}}};
    CHECK(is_coloring(two));
}

TEST_CASE("conelike vertices") {
    auto cone = join(SimplicialComplex::from_facets({9}, {}), four_cycle());
    CHECK(is_conelike(cone, 9));
    CHECK_FALSE(is_conelike(cone, 0));
    auto c4 = four_cycle();
    for (int v : c4.vertices()) CHECK_FALSE(is_conelike(c4, v));
    auto dn = SimplicialComplex::full_simplex({0, 1, 2, 3});
    for (int v : dn.vertices()) CHECK(is_conelike(dn, v));
    CHECK_THROWS_AS(is_conelike(dn, 17), input_error);
}
