#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace polymir;
using namespace testutil;

namespace {

/// Product of intervals with both endpoints mirrored pairwise: the corner
/// of Example-3.3 type used as the standard valid fixture, plus its
/// unpaired version as cover data.
MirroredComplex interval_product_corner(int n1) {
    SimplicialComplex pts;
    std::vector<int> verts;
    for (int i = 0; i < n1; ++i) verts.push_back(i);
    auto L = SimplicialComplex::full_simplex(verts);
    MirroredComplex X;
    X.space = real_toric(L); // the full product of D1 factors
    for (int i = 0; i < n1; ++i) {
        X.mirror_index.push_back(i);
        X.mirrors[i] = {};
    }
    for (auto c : X.space.all_cells()) {
        const std::string& name = X.space.cell(c).name;
        int coord = 0;
        std::size_t k = 1;
        for (; k < name.size(); ++k) {
            if (name[k] == ',' || name[k] == ')') {
                ++coord;
            } else if (name[k] == '-' || name[k] == '+') {
                X.mirrors[coord].insert(c);
            }
        }
    }
    X.validate();
    return X;
}

CoverData interval_product_cover(int n1) {
    MirroredComplex base = interval_product_corner(n1);
    CoverData cd;
    cd.cover.space = base.space;
    // Split each paired mirror into its two facets: indices 2i and 2i+1.
    for (int i = 0; i < n1; ++i) {
        cd.cover.mirror_index.push_back(2 * i);
        cd.cover.mirror_index.push_back(2 * i + 1);
        cd.cover.mirrors[2 * i] = {};
        cd.cover.mirrors[2 * i + 1] = {};
        cd.projection[2 * i] = i;
        cd.projection[2 * i + 1] = i;
    }
    for (auto c : cd.cover.space.all_cells()) {
        const std::string& name = cd.cover.space.cell(c).name;
        int coord = 0;
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (name[k] == ',' || name[k] == ')') ++coord;
            else if (name[k] == '-') cd.cover.mirrors[2 * coord].insert(c);
            else if (name[k] == '+') cd.cover.mirrors[2 * coord + 1].insert(c);
        }
    }
    cd.cover.validate();
    return cd;
}

} // namespace

TEST_CASE("corner validation") {
    CHECK_NOTHROW(make_corner(interval_product_corner(2)));
    CHECK_NOTHROW(cube_corner(1, CubeConvention::one_face));

    // Two disjoint mirrors on the same interval: J = {0,1} is empty.
    CellComplexBuilder b;
    b.add_cell(0, "a");
    b.add_cell(0, "b");
    b.add_cell(1, "e", {{"b", 1}, {"a", -1}});
    MirroredComplex bad;
    bad.space = b.finalize();
    bad.mirror_index = {0, 1};
    bad.mirrors[0] = {bad.space.id_of("a")};
    bad.mirrors[1] = {bad.space.id_of("b")};
    auto witness = corner_violation(bad);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<int>{0, 1});
    CHECK_THROWS_AS(make_corner(bad), input_error);

    // Mirror index must be contiguous from zero.
    MirroredComplex shifted = interval_product_corner(1);
    shifted.mirror_index = {1};
    shifted.mirrors[1] = shifted.mirrors[0];
    shifted.mirrors.erase(0);
    CHECK_THROWS_AS(make_corner(shifted), input_error);
}

TEST_CASE("cube corners") {
    auto c0 = cube_corner(0, CubeConvention::one_face);
    CHECK(c0.mirrored.space.cell_counts() == std::vector<std::size_t>{2, 1});
    CHECK(c0.mirrored.mirrors.at(0).size() == 1);

    auto c1 = cube_corner(1, CubeConvention::one_face);
    CHECK(c1.mirrored.space.total_cells() == 9);
    // The two mirror edges meet in the corner vertex (1,1).
    auto inter = mirror_intersection(c1.mirrored, {0, 1});
    REQUIRE(inter.size() == 1);
    CHECK(c1.mirrored.space.cell(*inter.begin()).name == "11");

    // Zero-face mirrors: the face over J has dimension n+1-|J|.
    auto z2 = cube_corner(2, CubeConvention::zero_face);
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> J;
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b)) J.push_back(b);
        auto cells = mirror_intersection(z2.mirrored, J);
        int maxdim = -1;
        for (auto c : cells) maxdim = std::max(maxdim, c.first);
        CHECK(maxdim == 3 - int(J.size()));
    }

    CHECK_THROWS_AS(cube_corner(11, CubeConvention::one_face), cap_exceeded);
    CHECK_NOTHROW(cube_corner(11, CubeConvention::one_face, 12));
}

TEST_CASE("pullback of the cube is the chamber") {
    std::mt19937 rng(107);
    for (int t = 0; t < 10; ++t) {
        auto L = random_complex(rng, 5);
        auto colored = tautological_coloring(L);
        auto corner = cube_corner(colored.num_colors - 1, CubeConvention::one_face);
        auto pb = pullback(colored, corner);
        auto ch = chamber(L);
        REQUIRE(pb.complex.cell_counts() == ch.cell_counts());
        // Explicit graded bijection: cube coordinates match the interval
        // coordinates ('0') -> 0, '*' -> 01, '1' -> 1 on the simplex J.
        std::vector<int> verts(L.vertices().begin(), L.vertices().end());
        std::map<std::string, std::string> name_map;
        for (auto c : pb.complex.all_cells()) {
            auto [J, base] = PullbackComplex::parse_label(pb.complex.cell(c).label);
            std::string to = "(";
            for (std::size_t k = 0; k < verts.size(); ++k) {
                if (k) to += ',';
                char ch2 = base[colored.color.at(verts[k])];
                bool in_J = std::binary_search(J.begin(), J.end(), verts[k]);
                if (!in_J) {
                    to += '1';
                } else {
                    to += (ch2 == '0') ? "0" : (ch2 == '*' ? "01" : "1");
                }
            }
            to += ')';
            name_map[pb.complex.cell(c).name] = to;
        }
        CHECK(boundary_isomorphic(pb.complex, ch, name_map, true));
        CHECK(homology(pb.complex, true) == homology(ch, true));
    }

    // Identity coloring on a simplex returns the corner itself.
    auto dn = SimplicialComplex::full_simplex({0, 1, 2});
    auto corner = cube_corner(2, CubeConvention::one_face);
    auto pb = pullback(tautological_coloring(dn), corner);
    CHECK(pb.complex.cell_counts() == corner.mirrored.space.cell_counts());
}

TEST_CASE("pullback input validation") {
    auto c4 = four_cycle();
    // Not a coloring: adjacent vertices with equal colors.
    ColoredSimplicialComplex bad;
    bad.complex = c4;
    bad.color = {{0, 0}, {1, 0}, {2, 1}, {3, 1}};
    bad.num_colors = 2;
    CHECK_THROWS_AS(pullback(bad, cube_corner(1, CubeConvention::one_face)), input_error);
    // Rank mismatch.
    ColoredSimplicialComplex two;
    two.complex = c4;
    two.color = {{0, 0}, {1, 1}, {2, 0}, {3, 1}};
    two.num_colors = 2;
    CHECK_THROWS_AS(pullback(two, cube_corner(2, CubeConvention::one_face)), input_error);
    CHECK_NOTHROW(pullback(two, cube_corner(1, CubeConvention::one_face)));
}

TEST_CASE("pullback over Coxeter complexes is the basic construction") {
    // Remark-style identification: L the Coxeter complex of W, f the type
    // coloring, X a cube corner; f*(X) and U(W, X) agree.
    for (int n : {2, 3}) {
        auto T = enumerate_finite_group(CoxeterSystem{rank_n_all_twos(n)});
        auto colored = coxeter_complex_simplicial(T);
        auto corner = cube_corner(n - 1, CubeConvention::one_face);
        auto pb = pullback(colored, corner);
        auto U = basic_construction(T, corner.mirrored);
        CHECK(pb.complex.cell_counts() == U.cell_counts());
        CHECK(homology(pb.complex, true) == homology(U, true));
        CHECK_NOTHROW(pb.complex.validate());
    }
}

TEST_CASE("cubical vertex links") {
    // The corner vertex of a single cube has simplex links.
    auto cube = cube_corner(2, CubeConvention::one_face).mirrored.space;
    auto origin = cube.id_of("000");
    auto lk = cubical_vertex_link(cube, origin);
    CHECK(lk.vertices().size() == 3);
    CHECK(lk.has_simplex(sorted_simplex(
        std::vector<int>(lk.vertices().begin(), lk.vertices().end()))));

    // Every vertex of the boundary of the 3-cube has link the triangle
    // boundary: three squares pairwise meeting, no 3-cube.
    auto bd = real_toric(triangle_boundary());
    for (std::size_t v = 0; v < bd.cell_count(0); ++v) {
        auto link_v = cubical_vertex_link(bd, {0, int(v)});
        CHECK(link_v.vertices().size() == 3);
        CHECK(link_v.simplices_of_dimension(1).size() == 3);
        CHECK_FALSE(is_flag(link_v));
    }

    // Torus vertices have 4-cycle links: flag.
    auto torus = real_toric(four_cycle());
    for (std::size_t v = 0; v < torus.cell_count(0); ++v) {
        auto link_v = cubical_vertex_link(torus, {0, int(v)});
        CHECK(link_v.vertices().size() == 4);
        CHECK(link_v.simplices_of_dimension(1).size() == 4);
        CHECK(is_flag(link_v));
    }

    // Non-cubical complexes are rejected.
    auto simplex2 = chain_complex_of_simplicial(full_triangle());
    CHECK_THROWS_AS(cubical_vertex_link(simplex2, {0, 0}), input_error);
}

TEST_CASE("gromov check") {
    auto bd = real_toric(triangle_boundary());
    auto r = gromov_check(bd);
    CHECK(r.overall() == "FAIL");
    for (const auto& c : r.conditions) CHECK(c.verdict == "FAIL");

    CHECK(gromov_check(real_toric(four_cycle())).overall() == "PASS");
    CHECK(gromov_check(chamber(four_cycle())).overall() == "PASS");
    CHECK(gromov_check(chamber(clique_complex(one_skeleton(octahedron())))).overall() ==
          "PASS");
}

TEST_CASE("gromov check on pullbacks of chamber corners") {
    std::mt19937 rng(109);
    int done = 0;
    while (done < 5) {
        auto N = random_flag_complex(rng, 5);
        auto L = random_flag_complex(rng, 5);
        // Choose a common palette: color both properly onto the same rank.
        auto try_colors = [&](const SimplicialComplex& C, int colors)
            -> std::optional<std::map<int, int>> {
            try {
                return proper_coloring(C, colors);
            } catch (const input_error&) {
                return std::nullopt;
            }
        };
        int colors = 0;
        for (int c = 1; c <= 5; ++c) {
            if (try_colors(N, c) && try_colors(L, c)) { colors = c; break; }
        }
        if (!colors) continue;
        // The chamber corner needs a full-palette simplex in N; add a
        // disjoint fully-colored one.
        ColoredSimplicialComplex cn;
        {
            int base = N.vertices().empty() ? 0 : *N.vertices().rbegin() + 1;
            Simplex fresh;
            for (int c = 0; c < colors; ++c) fresh.push_back(base + c);
            std::vector<int> verts(N.vertices().begin(), N.vertices().end());
            std::vector<Simplex> facets = N.facets();
            for (int v : fresh) verts.push_back(v);
            facets.push_back(fresh);
            std::map<int, int> color = proper_coloring(N, colors);
            for (int c = 0; c < colors; ++c) color[base + c] = c;
            cn = ColoredSimplicialComplex{SimplicialComplex::from_facets(verts, facets),
                                          color, colors};
        }
        ColoredSimplicialComplex cl{L, proper_coloring(L, colors), colors};
        auto data = chamber_corner(cn);
        auto pb = pullback(cl, data.corner);
        CHECK(gromov_check(pb.complex).overall() == "PASS");
        ++done;
    }
}

TEST_CASE("link join decomposition") {
    std::mt19937 rng(113);
    int done = 0;
    while (done < 3) {
        auto N0 = random_flag_complex(rng, 4);
        auto L = random_flag_complex(rng, 4);
        auto try_colors = [&](const SimplicialComplex& C, int colors)
            -> std::optional<std::map<int, int>> {
            try {
                return proper_coloring(C, colors);
            } catch (const input_error&) {
                return std::nullopt;
            }
        };
        int colors = 0;
        for (int c = 1; c <= 4; ++c)
            if (try_colors(N0, c) && try_colors(L, c)) { colors = c; break; }
        if (!colors) continue;
        // Extend N with a full-palette simplex so the chamber is a corner.
        std::vector<int> verts(N0.vertices().begin(), N0.vertices().end());
        std::vector<Simplex> facets = N0.facets();
        int base = *N0.vertices().rbegin() + 1;
        Simplex fresh;
        for (int c = 0; c < colors; ++c) fresh.push_back(base + c);
        for (int v : fresh) verts.push_back(v);
        facets.push_back(fresh);
        auto N = SimplicialComplex::from_facets(verts, facets);
        std::map<int, int> ncolor = proper_coloring(N0, colors);
        for (int c = 0; c < colors; ++c) ncolor[base + c] = c;
        ColoredSimplicialComplex cn{N, ncolor, colors};
        ColoredSimplicialComplex cl{L, proper_coloring(L, colors), colors};
        auto data = chamber_corner(cn);
        auto pb = pullback(cl, data.corner);

        // The join decomposition holds cellwise at every face.
        for (auto f : pb.complex.all_cells()) {
            auto dec = link_join_decomposition(pb, data, f);
            CHECK(dec.verified);
        }
        // A maximal cube has an empty link.
        int top = pb.complex.dimension();
        if (pb.complex.cell_count(top) > 0) {
            auto dec = link_join_decomposition(pb, data, {top, 0});
            CHECK(dec.link.vertices().empty());
        }
        ++done;
    }
}

TEST_CASE("corner condition reports") {
    auto corner = make_corner(interval_product_corner(2));
    // No cover data: (ii)' and (iii)' unknown.
    auto r0 = corner_conditions_report(corner, true, std::nullopt);
    CHECK(r0.overall() == "UNKNOWN");
    CHECK(r0.conditions[1].verdict == "UNKNOWN");
    CHECK(r0.conditions[2].verdict == "UNKNOWN");

    // The interval-product cover: nerve is a join of S0 pairs (an
    // octahedron sphere) which is flag, and all intersections are faces of
    // the cube, hence acyclic.
    auto cover = interval_product_cover(2);
    auto r1 = corner_conditions_report(corner, true, cover);
    CHECK(r1.overall() == "PASS");

    // A cover whose nerve is an empty triangle fails (iii)'.
    CoverData hollow;
    hollow.cover.space = real_toric(triangle_boundary());
    hollow.cover.mirror_index = {0, 1, 2};
    for (int i : {0, 1, 2}) hollow.cover.mirrors[i] = {};
    // Mirror i = the subcomplex where coordinate i is the vertex '-'.
    for (auto c : hollow.cover.space.all_cells()) {
        const std::string& name = hollow.cover.space.cell(c).name;
        int coord = 0;
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (name[k] == ',' || name[k] == ')') ++coord;
            else if (name[k] == '-') hollow.cover.mirrors[coord].insert(c);
        }
    }
    // Use the boundary of the 3-cube with three pairwise-meeting facets: the
    // nerve of these mirrors is the empty triangle.
    auto corner3 = make_corner(interval_product_corner(3));
    hollow.projection = {{0, 0}, {1, 1}, {2, 2}};
    auto r2 = corner_conditions_report(corner3, true, hollow);
    CHECK(r2.conditions[2].verdict == "FAIL");

    // Mirror count mismatch in the projection is rejected.
    CoverData short_proj = interval_product_cover(2);
    short_proj.projection.erase(3);
    CHECK_THROWS_AS(corner_conditions_report(corner, true, short_proj), input_error);
}

TEST_CASE("closed manifold certificates") {
    CHECK(closed_manifold_certificate(real_toric(triangle_boundary()), 2).passed());
    CHECK(closed_manifold_certificate(real_toric(four_cycle()), 2).passed());

    auto r = closed_manifold_certificate(chamber(four_cycle()), 2);
    CHECK(r.overall() == "FAIL");
    bool witnessed = false;
    for (const auto& c : r.conditions)
        if (c.id == "two-sided" && c.verdict == "FAIL" && !c.detail.empty())
            witnessed = true;
    CHECK(witnessed);

    // Non-pure complexes are rejected outright.
    CellComplexBuilder b;
    b.add_cell(0, "a");
    b.add_cell(0, "b");
    b.add_cell(0, "c");
    b.add_cell(1, "e", {{"b", 1}, {"a", -1}});
    CHECK_THROWS_AS(closed_manifold_certificate(b.finalize(), 1), input_error);

    // Polyhedral products of (M, dM) pairs over sphere triangulations pass:
    // interval pairs give a surface, square pairs a closed 5-manifold.
    auto bd = triangle_boundary();
    std::map<int, CellPair> pairs;
    for (int v : bd.vertices()) pairs.emplace(v, d1_pair());
    CHECK(closed_manifold_certificate(polyhedral_product(bd, pairs), 2).passed());

    std::map<int, CellPair> sq;
    for (int v : bd.vertices()) sq.emplace(v, square_pair());
    CHECK(closed_manifold_certificate(polyhedral_product(bd, sq), 5).passed());
}
