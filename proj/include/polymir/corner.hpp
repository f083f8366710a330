#ifndef POLYMIR_CORNER_HPP
#define POLYMIR_CORNER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polymir/cell_complex.hpp"
#include "polymir/homology.hpp"
#include "polymir/mirrored.hpp"
#include "polymir/polyprod.hpp"
#include "polymir/report.hpp"
#include "polymir/simplicial.hpp"

namespace polymir {

/// A corner of spaces: a connected mirrored complex over I(n) = {0,...,n}
/// with every mirror intersection nonempty (the nerve is the full simplex).
struct CornerStructure {
    MirroredComplex mirrored;

    int top_index() const { return int(mirrored.mirror_index.size()) - 1; }
};

/// A witness subset J with empty X_J, if any.
inline std::optional<std::vector<int>> corner_violation(const MirroredComplex& X) {
    std::size_t n = X.mirror_index.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> J;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) J.push_back(X.mirror_index[i]);
        if (mirror_intersection(X, J).empty()) return J;
    }
    return std::nullopt;
}

inline CornerStructure make_corner(MirroredComplex X) {
    X.validate();
    for (std::size_t i = 0; i < X.mirror_index.size(); ++i)
        if (X.mirror_index[i] != int(i))
            throw input_error("corner mirror index must be {0,...,n}");
    if (X.mirror_index.empty()) throw input_error("corner needs at least one mirror");
    if (!X.space.is_connected()) throw input_error("corner base space must be connected");
    if (auto J = corner_violation(X))
        throw input_error("empty mirror intersection at J = {" + simplex_cell_name(*J) + "}");
    return CornerStructure{std::move(X)};
}

enum class CubeConvention { one_face, zero_face };

namespace detail {

/// The (n+1)-cube as a cell complex: cells are strings over {0,1,*}, one
/// character per coordinate; * marks a free coordinate.
inline CellComplex cube_complex(int coords) {
    CellComplexBuilder b;
    // Enumerate by dimension to keep faces-first order.
    std::vector<std::string> cells{""};
    for (int i = 0; i < coords; ++i) {
        std::vector<std::string> next;
        for (const auto& c : cells)
            for (char ch : {'0', '1', '*'}) next.push_back(c + ch);
        cells = std::move(next);
    }
    std::stable_sort(cells.begin(), cells.end(), [](const std::string& a, const std::string& b) {
        return std::count(a.begin(), a.end(), '*') < std::count(b.begin(), b.end(), '*');
    });
    for (const auto& c : cells) {
        std::vector<std::pair<std::string, int>> boundary;
        int sign = 1;
        for (int i = 0; i < coords; ++i) {
            if (c[i] == '*') {
                std::string hi = c, lo = c;
                hi[i] = '1';
                lo[i] = '0';
                boundary.push_back({hi, sign});
                boundary.push_back({lo, -sign});
                sign = -sign;
            }
        }
        b.add_cell(int(std::count(c.begin(), c.end(), '*')), c, boundary);
    }
    return b.finalize();
}

} // namespace detail

/// The (n+1)-cube with mirrors x_i = 1 (one-face) or x_i = 0 (zero-face).
inline CornerStructure cube_corner(int n, CubeConvention convention, int cap = 10) {
    if (n < 0) throw input_error("cube_corner needs n >= 0");
    if (n > cap) throw cap_exceeded("cube_corner dimension over cap");
    MirroredComplex X;
    X.space = detail::cube_complex(n + 1);
    char face = convention == CubeConvention::one_face ? '1' : '0';
    for (int i = 0; i <= n; ++i) X.mirror_index.push_back(i);
    for (int i = 0; i <= n; ++i) X.mirrors[i] = {};
    for (auto c : X.space.all_cells()) {
        const std::string& name = X.space.cell(c).name;
        for (int i = 0; i <= n; ++i)
            if (name[i] == face) X.mirrors[i].insert(c);
    }
    return make_corner(std::move(X));
}

/// The cubical chamber Z_L([0,1],1) with its canonical mirror structure:
/// mirror i consists of the cells whose i-th coordinate is the vertex 0.
inline MirroredComplex chamber_mirrored(const SimplicialComplex& L) {
    MirroredComplex X;
    X.space = chamber(L);
    X.mirror_index.assign(L.vertices().begin(), L.vertices().end());
    for (int i : X.mirror_index) X.mirrors[i] = {};
    std::vector<int> I = X.mirror_index;
    for (auto c : X.space.all_cells()) {
        const std::string& name = X.space.cell(c).name; // "(x0,x1,...)"
        std::size_t pos = 1, coord = 0;
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (name[k] == ',' || name[k] == ')') {
                std::string part = name.substr(pos, k - pos);
                if (part == "0") X.mirrors[I[coord]].insert(c);
                pos = k + 1;
                ++coord;
            }
        }
    }
    X.validate();
    return X;
}

/// Chamber corner data: K(N) with the mirror over color i the union of the
/// canonical mirrors K_e over the vertices e of color i.
struct ChamberCornerData {
    CornerStructure corner;
    SimplicialComplex N;
    std::map<int, int> iota; // vertex of N -> color in I(n)
};

inline ChamberCornerData chamber_corner(const ColoredSimplicialComplex& colored) {
    MirroredComplex K = chamber_mirrored(colored.complex);
    SimplicialMap f = colored.coloring_map();
    if (!is_coloring(f)) throw input_error("chamber_corner needs a coloring of N");
    MirroredComplex X;
    X.space = K.space;
    for (int i = 0; i < colored.num_colors; ++i) {
        X.mirror_index.push_back(i);
        X.mirrors[i] = {};
    }
    for (const auto& [e, i] : colored.color) {
        const auto& cells = K.mirrors.at(e);
        X.mirrors[i].insert(cells.begin(), cells.end());
    }
    ChamberCornerData out;
    out.corner = make_corner(std::move(X));
    out.N = colored.complex;
    out.iota = colored.color;
    return out;
}

/// The pullback f^*(X) of a corner along a coloring f : L -> Delta^n.
/// Cells are canonically labeled pairs (J, c) with J in S(L) (the empty
/// simplex included) and f(J) the complement of the mirror set of c.
struct PullbackComplex {
    CellComplex complex; // labels "<dotted J or {}>:<base cell name>"
    ColoredSimplicialComplex coloring;

    /// Parse a cell label back into (J, base cell name).
    static std::pair<Simplex, std::string> parse_label(const std::string& label) {
        auto colon = label.find(':');
        std::string jpart = label.substr(0, colon);
        Simplex J;
        if (jpart != "{}") {
            std::size_t pos = 0;
            while (pos < jpart.size()) {
                auto dot = jpart.find('.', pos);
                if (dot == std::string::npos) dot = jpart.size();
                J.push_back(std::stoi(jpart.substr(pos, dot - pos)));
                pos = dot + 1;
            }
        }
        return {J, label.substr(colon + 1)};
    }
};

inline PullbackComplex pullback(const ColoredSimplicialComplex& colored,
                                const CornerStructure& X) {
    SimplicialMap f = colored.coloring_map();
    if (!is_coloring(f)) throw input_error("pullback requires a coloring");
    if (colored.num_colors != int(X.mirrored.mirror_index.size()))
        throw input_error("coloring rank does not match the corner mirror index");

    const SimplicialComplex& L = colored.complex;
    int n1 = colored.num_colors;

    // Complement of the mirror set, as a sorted color list, per cell.
    auto cell_cocolors = [&](CellId c) {
        std::vector<int> I = X.mirrored.mirror_set(c);
        std::vector<int> out;
        for (int i = 0; i < n1; ++i)
            if (!std::binary_search(I.begin(), I.end(), i)) out.push_back(i);
        return out;
    };

    std::vector<Simplex> simplices{{}};
    for (const auto& s : L.simplices()) simplices.push_back(s);

    auto f_image = [&](const Simplex& J) {
        std::vector<int> img;
        for (int v : J) img.push_back(colored.color.at(v));
        std::sort(img.begin(), img.end());
        return img;
    };
    auto jname = [](const Simplex& J) {
        return J.empty() ? std::string("{}") : simplex_cell_name(J);
    };
    auto cell_name = [&](const Simplex& J, const std::string& base) {
        return "J{" + jname(J) + "}|" + base;
    };

    // Group base cells by their color complement.
    std::map<std::vector<int>, std::vector<CellId>> by_cocolors;
    for (auto c : X.mirrored.space.all_cells()) by_cocolors[cell_cocolors(c)].push_back(c);

    struct PendingCell {
        int dim;
        std::string name;
        std::vector<std::pair<std::string, int>> boundary;
        std::string label;
    };
    std::vector<PendingCell> pending;
    for (const auto& J : simplices) {
        std::vector<int> img = f_image(J);
        auto it = by_cocolors.find(img);
        if (it == by_cocolors.end()) continue;
        for (CellId c : it->second) {
            const Cell& base = X.mirrored.space.cell(c);
            PendingCell pc;
            pc.dim = c.first;
            pc.name = cell_name(J, base.name);
            pc.label = jname(J) + ":" + base.name;
            for (auto [fi, coeff] : base.boundary) {
                CellId fc{c.first - 1, fi};
                std::vector<int> fimg = cell_cocolors(fc);
                // The face's canonical simplex: the vertices of J whose
                // colors survive in the face's color complement.
                Simplex Jf;
                for (int v : J)
                    if (std::binary_search(fimg.begin(), fimg.end(), colored.color.at(v)))
                        Jf.push_back(v);
                pc.boundary.push_back(
                    {cell_name(Jf, X.mirrored.space.cell(fc).name), coeff});
            }
            pending.push_back(std::move(pc));
        }
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const PendingCell& a, const PendingCell& b) { return a.dim < b.dim; });
    CellComplexBuilder builder;
    for (const auto& pc : pending) builder.add_cell(pc.dim, pc.name, pc.boundary, pc.label);

    PullbackComplex out;
    out.complex = builder.finalize();
    out.coloring = colored;
    return out;
}

/// Check that every cell of Y is a combinatorial cube: a k-cell has exactly
/// 2k facets, all incidences +-1, and 2^k vertices.
inline std::optional<std::string> cubical_violation(const CellComplex& Y) {
    for (auto c : Y.all_cells()) {
        const Cell& cell = Y.cell(c);
        int k = c.first;
        std::set<int> faces;
        for (auto [i, coeff] : cell.boundary) {
            if (coeff != 1 && coeff != -1)
                return "cell " + cell.name + " has incidence coefficient != +-1";
            if (!faces.insert(i).second)
                return "cell " + cell.name + " repeats a facet";
        }
        if (int(faces.size()) != 2 * k && k > 0)
            return "cell " + cell.name + " has " + std::to_string(faces.size()) +
                   " facets, expected " + std::to_string(2 * k);
        if (std::size_t(1) << k != Y.vertices_of(c).size())
            return "cell " + cell.name + " does not have 2^k vertices";
    }
    return std::nullopt;
}

/// The link of a cell in a cubical complex: one (j-1)-simplex per cube of
/// dimension dim(F)+j containing F; vertices are the (dim+1)-cofaces.
/// Vertex ids are the indices of those cofaces.  Errors when two cubes span
/// the same simplex (the link is not simplicial) or the complex is not
/// cubical around F.
inline SimplicialComplex cubical_face_link(const CellComplex& Y, CellId F) {
    int k = F.first;
    std::set<CellId> above = Y.open_star_above(F);
    std::vector<int> verts;
    std::map<CellId, int> vertex_id;
    for (auto c : above)
        if (c.first == k + 1) {
            vertex_id[c] = c.second;
            verts.push_back(c.second);
        }
    std::vector<Simplex> facets;
    std::set<Simplex> seen;
    for (auto c : above) {
        std::set<CellId> cl = Y.closure(c);
        Simplex s;
        for (const auto& [d, id] : vertex_id)
            if (cl.count(d)) s.push_back(id);
        std::sort(s.begin(), s.end());
        if (int(s.size()) != c.first - k)
            throw input_error("cell " + Y.cell(c).name + " is not a cube above " +
                              Y.cell(F).name);
        if (!seen.insert(s).second)
            throw input_error("non-simplicial link at " + Y.cell(F).name +
                              ": two cubes span {" + simplex_cell_name(s) + "}");
        facets.push_back(std::move(s));
    }
    return SimplicialComplex::from_facets(verts, facets);
}

inline SimplicialComplex cubical_vertex_link(const CellComplex& Y, CellId v) {
    if (v.first != 0) throw input_error("cubical_vertex_link needs a 0-cell");
    if (auto bad = cubical_violation(Y)) throw input_error("not a cubical complex: " + *bad);
    return cubical_face_link(Y, v);
}

/// Gromov link condition: PASS iff the link of every vertex is flag.
inline Report gromov_check(const CellComplex& Y) {
    if (auto bad = cubical_violation(Y)) throw input_error("not a cubical complex: " + *bad);
    Report r;
    r.note = "Gromov link condition (locally CAT(0) cubical metric)";
    for (std::size_t i = 0; i < Y.cell_count(0); ++i) {
        CellId v{0, int(i)};
        SimplicialComplex lk = cubical_face_link(Y, v);
        auto w = flag_witness(lk);
        std::string id = "vertex " + Y.cell(v).name;
        if (w) {
            std::string names;
            for (int e : *w)
                names += (names.empty() ? "" : ",") + Y.cells(1)[e].name;
            r.conditions.push_back({id, "FAIL", "link not flag; witness edges {" + names + "}"});
        } else {
            r.conditions.push_back({id, "PASS", "link is flag"});
        }
    }
    return r;
}

/// The join decomposition Lk(F', Y) = Lk(J, L) * Lk(Supp(F), N) for a face
/// of a pullback over a chamber corner, verified cellwise through the
/// explicit vertex bijection.
struct LinkJoinDecomposition {
    Simplex J;            // simplex of L carried by the face
    Simplex supp;         // Supp(F) in N
    SimplicialComplex link;       // the cubical link in Y
    SimplicialComplex link_in_L;  // Lk(J, L)
    SimplicialComplex link_in_N;  // Lk(Supp, N)
    bool verified = false;
};

inline LinkJoinDecomposition link_join_decomposition(const PullbackComplex& Y,
                                                     const ChamberCornerData& chamber_data,
                                                     CellId face) {
    const CellComplex& C = Y.complex;
    if (C.cell(face).label.find(':') == std::string::npos)
        throw input_error("pullback face lacks chamber labels");
    auto [J, base] = PullbackComplex::parse_label(C.cell(face).label);

    // Parse the chamber cell "(x0,...)" into zero-set and free-set over N.
    std::vector<int> NV(chamber_data.N.vertices().begin(), chamber_data.N.vertices().end());
    Simplex zero, free_set;
    {
        std::size_t pos = 1, coord = 0;
        for (std::size_t k = 1; k < base.size(); ++k) {
            if (base[k] == ',' || base[k] == ')') {
                std::string part = base.substr(pos, k - pos);
                if (part == "0") zero.push_back(NV[coord]);
                if (part == "01") free_set.push_back(NV[coord]);
                pos = k + 1;
                ++coord;
            }
        }
    }
    LinkJoinDecomposition out;
    out.J = J;
    out.supp = zero;
    out.supp.insert(out.supp.end(), free_set.begin(), free_set.end());
    std::sort(out.supp.begin(), out.supp.end());

    out.link = cubical_face_link(C, face);
    out.link_in_L = link(Y.coloring.complex, J);
    out.link_in_N = link(chamber_data.N, out.supp);

    // Vertex bijection: a (dim+1)-coface with the same J corresponds to a
    // vertex of Lk(Supp, N) (a one-coordinate freed from 1); a coface with
    // J extended by w corresponds to the vertex w of Lk(J, L).
    std::map<int, std::pair<bool, int>> classify; // link vertex -> (is_L_side, vertex)
    for (int lv : std::vector<int>(out.link.vertices().begin(), out.link.vertices().end())) {
        CellId coface{face.first + 1, lv};
        auto [J2, base2] = PullbackComplex::parse_label(C.cell(coface).label);
        if (J2 == J) {
            // Find the coordinate freed from the one-set.
            Simplex zero2, free2;
            std::size_t pos = 1, coord = 0;
            for (std::size_t k = 1; k < base2.size(); ++k) {
                if (base2[k] == ',' || base2[k] == ')') {
                    std::string part = base2.substr(pos, k - pos);
                    if (part == "0") zero2.push_back(NV[coord]);
                    if (part == "01") free2.push_back(NV[coord]);
                    pos = k + 1;
                    ++coord;
                }
            }
            std::vector<int> added;
            std::set_difference(free2.begin(), free2.end(), free_set.begin(), free_set.end(),
                                std::back_inserter(added));
            if (added.size() != 1 || zero2 != zero)
                throw input_error("unexpected coface shape in link decomposition");
            classify[lv] = {false, added[0]};
        } else {
            std::vector<int> added;
            std::set_difference(J2.begin(), J2.end(), J.begin(), J.end(),
                                std::back_inserter(added));
            if (added.size() != 1)
                throw input_error("unexpected coface simplex in link decomposition");
            classify[lv] = {true, added[0]};
        }
    }

    // The bijection must cover both factors exactly.
    std::set<int> lside, nside;
    for (auto& [lv, tag] : classify)
        (tag.first ? lside : nside).insert(tag.second);
    if (lside != out.link_in_L.vertices() || nside != out.link_in_N.vertices())
        return out; // verified stays false

    // Compare simplex sets through the bijection against the join.
    std::set<Simplex> mapped;
    for (const auto& s : out.link.simplices()) {
        Simplex lpart, npart;
        for (int v : s) {
            auto [isl, w] = classify.at(v);
            (isl ? lpart : npart).push_back(w);
        }
        std::sort(lpart.begin(), lpart.end());
        std::sort(npart.begin(), npart.end());
        // Encode as a join simplex over disjoint ids: L-side ids doubled,
        // N-side ids doubled plus one.
        Simplex enc;
        for (int w : lpart) enc.push_back(2 * w);
        for (int e : npart) enc.push_back(2 * e + 1);
        std::sort(enc.begin(), enc.end());
        mapped.insert(enc);
    }
    std::set<Simplex> joined;
    auto encode = [](const Simplex& lpart, const Simplex& npart) {
        Simplex enc;
        for (int w : lpart) enc.push_back(2 * w);
        for (int e : npart) enc.push_back(2 * e + 1);
        std::sort(enc.begin(), enc.end());
        return enc;
    };
    std::vector<Simplex> lsimps{{}}, nsimps{{}};
    for (const auto& s : out.link_in_L.simplices()) lsimps.push_back(s);
    for (const auto& s : out.link_in_N.simplices()) nsimps.push_back(s);
    for (const auto& a : lsimps)
        for (const auto& b : nsimps) {
            if (a.empty() && b.empty()) continue;
            joined.insert(encode(a, b));
        }
    out.verified = mapped == joined;
    return out;
}

/// Caller-supplied finite model of the induced mirror structure on the
/// universal cover, with the projection of its mirror index onto I(n).
struct CoverData {
    MirroredComplex cover;
    std::map<int, int> projection; // cover mirror index -> I(n)
};

/// Certify conditions (i)', (ii)', (iii)' for a corner: asphericity of the
/// base is declared, acyclicity and flagness are computed on the supplied
/// cover data.  Without cover data the last two are UNKNOWN; universal
/// covers are never computed here.
inline Report corner_conditions_report(const CornerStructure& X, bool declared_aspherical,
                                       const std::optional<CoverData>& cover) {
    Report r;
    r.note = "relative to supplied cover data";
    r.conditions.push_back({"(i)'", declared_aspherical ? "PASS" : "FAIL",
                            declared_aspherical ? "base declared aspherical"
                                                : "base not declared aspherical"});
    if (!cover) {
        r.conditions.push_back({"(ii)'", "UNKNOWN", "no cover data supplied"});
        r.conditions.push_back({"(iii)'", "UNKNOWN", "no cover data supplied"});
        return r;
    }
    cover->cover.validate();
    {
        std::set<int> hit;
        for (const auto& [e, i] : cover->projection) {
            if (!cover->cover.mirrors.count(e))
                throw input_error("cover projection references unknown mirror");
            hit.insert(i);
        }
        for (int e : cover->cover.mirror_index)
            if (!cover->projection.count(e))
                throw input_error("cover mirror missing a projection entry");
        std::set<int> expect(X.mirrored.mirror_index.begin(), X.mirrored.mirror_index.end());
        if (hit != expect)
            throw input_error("cover projection does not cover the corner index (mirror count mismatch)");
    }
    // (ii)': the cover and every nonempty mirror intersection are acyclic.
    {
        std::string bad;
        if (!is_acyclic(cover->cover.space)) bad = "whole cover";
        // Nonempty intersections are downward closed; grow from singletons.
        std::vector<std::vector<int>> frontier;
        for (int e : cover->cover.mirror_index)
            if (!cover->cover.mirrors.at(e).empty()) frontier.push_back({e});
        std::set<std::vector<int>> seen(frontier.begin(), frontier.end());
        while (!frontier.empty() && bad.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& J : frontier) {
                auto cells = mirror_intersection(cover->cover, J);
                if (cells.empty()) continue;
                CellComplex sub = cover->cover.space.restrict_to(cells);
                if (!is_acyclic(sub)) {
                    bad = "mirror intersection {" + simplex_cell_name(J) + "}";
                    break;
                }
                for (int e : cover->cover.mirror_index) {
                    if (e <= J.back()) continue;
                    auto K = J;
                    K.push_back(e);
                    if (!seen.insert(K).second) continue;
                    if (!mirror_intersection(cover->cover, K).empty()) next.push_back(K);
                }
            }
            frontier = std::move(next);
        }
        r.conditions.push_back({"(ii)'", bad.empty() ? "PASS" : "FAIL",
                                bad.empty() ? "all nonempty mirror intersections acyclic"
                                            : "not acyclic: " + bad});
    }
    // (iii)': the nerve of the supplied structure is flag.
    {
        SimplicialComplex nerve = nerve_of_mirrors(cover->cover);
        auto w = flag_witness(nerve);
        r.conditions.push_back({"(iii)'", w ? "FAIL" : "PASS",
                                w ? "nerve not flag; witness {" + simplex_cell_name(*w) + "}"
                                  : "nerve is flag"});
    }
    return r;
}

/// Homology-manifold certificate: Y is pure n-dimensional, connected, every
/// (n-1)-cell bounds exactly two n-cells, and the order complex of the
/// strict cofaces of every cell has the reduced homology of the complement
/// sphere.
inline Report closed_manifold_certificate(const CellComplex& Y, int n) {
    if (Y.dimension() != n)
        throw input_error("complex dimension " + std::to_string(Y.dimension()) +
                          " does not match n = " + std::to_string(n));
    for (auto c : Y.all_cells())
        if (c.first < n && Y.cofacets_of(c).empty())
            throw input_error("complex is not pure: maximal cell " + Y.cell(c).name +
                              " has dimension " + std::to_string(c.first));
    Report r;
    r.note = "homology-manifold certificate";
    r.conditions.push_back({"connected", Y.is_connected() ? "PASS" : "FAIL", ""});
    {
        std::string bad;
        for (std::size_t i = 0; i < Y.cell_count(n - 1) && bad.empty(); ++i) {
            long long incidence = 0;
            for (const auto& top : Y.cells(n))
                for (auto [fi, coeff] : top.boundary)
                    if (fi == int(i)) incidence += std::abs(coeff);
            if (incidence != 2)
                bad = "cell " + Y.cells(n - 1)[i].name + " lies in " +
                      std::to_string(incidence) + " top cells";
        }
        r.conditions.push_back({"two-sided", bad.empty() ? "PASS" : "FAIL", bad});
    }
    {
        std::string bad;
        for (auto c : Y.all_cells()) {
            if (c.first == n) continue;
            std::set<CellId> above = Y.open_star_above(c);
            std::vector<int> ids;
            std::map<CellId, int> id_of;
            for (auto d : above) {
                id_of[d] = int(ids.size());
                ids.push_back(int(ids.size()));
            }
            std::vector<std::pair<int, int>> less;
            for (auto d : above) {
                std::set<CellId> cl = Y.closure(d);
                for (auto e : above)
                    if (e != d && cl.count(e)) less.push_back({id_of[e], id_of[d]});
            }
            SimplicialComplex lk = order_complex(Poset(ids, less));
            if (!is_homology_sphere_profile(chain_complex_of_simplicial(lk), n - c.first - 1)) {
                bad = "link of " + Y.cell(c).name + " is not a homology S^" +
                      std::to_string(n - c.first - 1);
                break;
            }
        }
        r.conditions.push_back({"sphere-links", bad.empty() ? "PASS" : "FAIL", bad});
    }
    return r;
}

} // namespace polymir

#endif
