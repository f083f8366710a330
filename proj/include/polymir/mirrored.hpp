#ifndef POLYMIR_MIRRORED_HPP
#define POLYMIR_MIRRORED_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polymir/cell_complex.hpp"
#include "polymir/coxeter.hpp"
#include "polymir/homology.hpp"
#include "polymir/simplicial.hpp"

namespace polymir {

/// A cell complex with a family of closed subcomplexes (mirrors) indexed by
/// a finite set.
struct MirroredComplex {
    CellComplex space;
    std::vector<int> mirror_index;            // sorted distinct ids
    std::map<int, std::set<CellId>> mirrors;  // each a closed subcomplex

    void validate() const {
        std::set<int> seen;
        for (int i : mirror_index)
            if (!seen.insert(i).second) throw input_error("duplicate mirror index");
        for (const auto& [i, cells] : mirrors) {
            if (!seen.count(i)) throw input_error("mirror with unknown index");
            if (!space.is_closed_subcomplex(cells))
                throw input_error("mirror " + std::to_string(i) + " is not closed");
        }
        for (int i : mirror_index)
            if (!mirrors.count(i)) throw input_error("missing mirror for index");
    }

    bool in_mirror(int i, CellId c) const { return mirrors.at(i).count(c) != 0; }

    /// I(c) = the set of mirror indices whose mirror contains c.
    std::vector<int> mirror_set(CellId c) const {
        std::vector<int> out;
        for (int i : mirror_index)
            if (in_mirror(i, c)) out.push_back(i);
        return out;
    }
};

/// X_J: intersection of the mirrors over J; the whole space for J = {}.
inline std::set<CellId> mirror_intersection(const MirroredComplex& X,
                                            const std::vector<int>& J) {
    for (int i : J)
        if (!X.mirrors.count(i)) throw input_error("unknown mirror index");
    if (J.empty()) {
        std::set<CellId> all;
        for (auto c : X.space.all_cells()) all.insert(c);
        return all;
    }
    std::set<CellId> acc = X.mirrors.at(J[0]);
    for (std::size_t k = 1; k < J.size(); ++k) {
        std::set<CellId> next;
        for (auto c : acc)
            if (X.in_mirror(J[k], c)) next.insert(c);
        acc = std::move(next);
    }
    return acc;
}

/// X^J: union of the mirrors over J; empty for J = {}.
inline std::set<CellId> mirror_union(const MirroredComplex& X, const std::vector<int>& J) {
    std::set<CellId> acc;
    for (int i : J) {
        if (!X.mirrors.count(i)) throw input_error("unknown mirror index");
        acc.insert(X.mirrors.at(i).begin(), X.mirrors.at(i).end());
    }
    return acc;
}

/// Nerve of the mirror structure: J spans a simplex iff X_J is nonempty.
/// Indices with empty mirrors contribute no vertex.
inline SimplicialComplex nerve_of_mirrors(const MirroredComplex& X) {
    std::vector<int> verts;
    for (int i : X.mirror_index)
        if (!X.mirrors.at(i).empty()) verts.push_back(i);
    // Nonempty intersections are downward closed; grow from singletons.
    std::set<Simplex> simplices;
    std::vector<Simplex> frontier;
    for (int i : verts) {
        simplices.insert({i});
        frontier.push_back({i});
    }
    while (!frontier.empty()) {
        std::vector<Simplex> next;
        for (const auto& J : frontier)
            for (int v : verts) {
                if (v <= J.back()) continue;
                Simplex K = J;
                K.push_back(v);
                if (simplices.count(K)) continue;
                if (mirror_intersection(X, K).empty()) continue;
                simplices.insert(K);
                next.push_back(std::move(K));
            }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_facets(verts,
                                          std::vector<Simplex>(simplices.begin(), simplices.end()));
}

namespace detail {

inline std::string poset_vertex_name(const Simplex& s) {
    return "{" + simplex_cell_name(s) + "}";
}

inline std::string chain_cell_name(const std::vector<Simplex>& chain) {
    std::string name;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) name += '<';
        name += poset_vertex_name(chain[i]);
    }
    return name;
}

} // namespace detail

/// K(L): the order complex of S(L) including the empty simplex (a cone with
/// apex {}), with mirror i the chains whose members all contain i.
inline MirroredComplex canonical_chamber(const SimplicialComplex& L) {
    std::vector<Simplex> elements;
    elements.push_back({}); // the empty simplex, the cone point
    for (const auto& s : L.simplices()) elements.push_back(s);

    // Chains, grown by extension; element order is (size, lex) so nested
    // chains list their members in inclusion order.
    std::vector<std::vector<int>> chains; // indices into elements
    std::map<std::string, CellId> chain_of_name;
    auto contains = [&](int small, int big) {
        const Simplex& a = elements[small];
        const Simplex& b = elements[big];
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    CellComplexBuilder builder;
    std::vector<std::vector<std::vector<int>>> by_dim; // chains per dimension
    for (int i = 0; i < int(elements.size()); ++i) by_dim.push_back({});
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < int(elements.size()); ++i) frontier.push_back({i});
    std::vector<std::vector<int>> all = frontier;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier)
            for (int j = 0; j < int(elements.size()); ++j) {
                if (!contains(c.back(), j)) continue;
                std::vector<int> d = c;
                d.push_back(j);
                all.push_back(d);
                next.push_back(std::move(d));
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    auto name_of = [&](const std::vector<int>& chain) {
        std::vector<Simplex> members;
        for (int i : chain) members.push_back(elements[i]);
        return detail::chain_cell_name(members);
    };
    for (const auto& chain : all) {
        std::vector<std::pair<std::string, int>> boundary;
        if (chain.size() > 1) {
            for (std::size_t k = 0; k < chain.size(); ++k) {
                std::vector<int> f = chain;
                f.erase(f.begin() + k);
                boundary.push_back({name_of(f), k % 2 == 0 ? 1 : -1});
            }
        }
        builder.add_cell(int(chain.size()) - 1, name_of(chain), boundary);
    }

    MirroredComplex out;
    out.space = builder.finalize();
    out.mirror_index.assign(L.vertices().begin(), L.vertices().end());
    for (int i : out.mirror_index) out.mirrors[i] = {};
    // A nested chain lies in mirror i iff its smallest member contains i.
    for (const auto& chain : all) {
        const Simplex& least = elements[chain[0]];
        CellId id = out.space.id_of(name_of(chain));
        for (int i : least) out.mirrors[i].insert(id);
    }
    out.validate();
    return out;
}

/// Davis chamber K(W,S) = K(L(W,S)).
inline MirroredComplex davis_chamber(const CoxeterSystem& system) {
    return canonical_chamber(system.nerve());
}

/// The simplex on the given ids with mirror i the codimension-one face
/// opposite the vertex i.
inline MirroredComplex simplex_with_face_mirrors(const std::vector<int>& ids) {
    SimplicialComplex D = SimplicialComplex::full_simplex(ids);
    MirroredComplex out;
    out.space = chain_complex_of_simplicial(D);
    out.mirror_index.assign(D.vertices().begin(), D.vertices().end());
    for (int i : out.mirror_index) out.mirrors[i] = {};
    for (const auto& s : D.simplices()) {
        CellId id = out.space.id_of(simplex_cell_name(s));
        for (int i : out.mirror_index)
            if (!std::binary_search(s.begin(), s.end(), i)) out.mirrors[i].insert(id);
    }
    out.validate();
    return out;
}

namespace detail {

inline std::string word_string(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

} // namespace detail

/// The basic construction U(W, X): one copy of X per element of W, glued
/// along mirrors; cells are (coset w W_I(c), c) with the inherited boundary.
/// Cell labels record "<coset rep element>:<base cell name>".
inline CellComplex basic_construction(const FiniteGroupTable& W, const MirroredComplex& X) {
    X.validate();
    if (std::vector<int>(W.index) != X.mirror_index)
        throw input_error("mirror index does not match the generator index");

    std::map<std::vector<int>, CosetSpace> coset_cache;
    auto cosets_for = [&](const std::vector<int>& J) -> const CosetSpace& {
        auto it = coset_cache.find(J);
        if (it == coset_cache.end())
            it = coset_cache.emplace(J, coset_space(W, J)).first;
        return it->second;
    };

    auto cell_name = [&](int rep, const std::string& base) {
        return "g" + detail::word_string(W.words[rep]) + "|" + base;
    };

    CellComplexBuilder builder;
    for (int d = 0; d <= X.space.dimension(); ++d) {
        for (std::size_t ci = 0; ci < X.space.cell_count(d); ++ci) {
            CellId c{d, int(ci)};
            const Cell& base = X.space.cell(c);
            std::vector<int> J = X.mirror_set(c);
            const CosetSpace& cs = cosets_for(J);
            // Face coset spaces, resolved per boundary entry.
            for (std::size_t k = 0; k < cs.size(); ++k) {
                int rep = cs.rep[k];
                std::vector<std::pair<std::string, int>> boundary;
                for (auto [fi, coeff] : base.boundary) {
                    CellId f{d - 1, fi};
                    const CosetSpace& fcs = cosets_for(X.mirror_set(f));
                    int frep = fcs.rep[fcs.coset_of[rep]];
                    boundary.push_back({cell_name(frep, X.space.cell(f).name), coeff});
                }
                builder.add_cell(d, cell_name(rep, base.name), boundary,
                                 std::to_string(rep) + ":" + base.name);
            }
        }
    }
    return builder.finalize();
}

/// A product of rank-one buildings: chambers are tuples with one entry per
/// factor, i-adjacency is equality away from coordinate i.
struct RankOneBuildingProduct {
    std::vector<std::vector<std::string>> factors; // element labels, per factor

    static RankOneBuildingProduct from_sizes(const std::vector<int>& sizes) {
        RankOneBuildingProduct B;
        for (int s : sizes) {
            if (s < 1) throw input_error("building factor must be nonempty");
            std::vector<std::string> labels;
            for (int k = 0; k < s; ++k) labels.push_back(std::to_string(k));
            B.factors.push_back(std::move(labels));
        }
        return B;
    }

    std::size_t rank() const { return factors.size(); }

    /// A factor of size one is permitted but flagged (a building proper
    /// requires panels of at least two chambers).
    bool degenerate() const {
        for (const auto& f : factors)
            if (f.size() < 2) return true;
        return false;
    }

    std::size_t chamber_count() const {
        std::size_t n = 1;
        for (const auto& f : factors) n *= f.size();
        return n;
    }

    /// Weyl distance in type (C2)^I: the set of coordinates where the two
    /// chambers differ.
    std::vector<int> weyl_distance(const std::vector<int>& c, const std::vector<int>& d) const {
        if (c.size() != rank() || d.size() != rank())
            throw input_error("chamber tuple of wrong rank");
        std::vector<int> diff;
        for (std::size_t i = 0; i < rank(); ++i)
            if (c[i] != d[i]) diff.push_back(int(i));
        return diff;
    }
};

/// U(C, X) for a product of rank-one buildings: cells are (J-residue, c)
/// with J = I(c); residues are partial tuples over the coordinates off J.
/// For X = the mirrored simplex this is the classical realization; for
/// X = K(L) the standard (K(L)-) realization.
inline CellComplex building_construction(const RankOneBuildingProduct& B,
                                         const MirroredComplex& X) {
    X.validate();
    if (B.rank() != X.mirror_index.size())
        throw input_error("factor count does not match the mirror count");

    std::map<int, int> position;
    for (std::size_t p = 0; p < X.mirror_index.size(); ++p)
        position[X.mirror_index[p]] = int(p);

    // Residue name: entries for coordinates outside J, '*' where forgotten.
    auto residue_name = [&](const std::vector<int>& tuple, const std::vector<bool>& keep) {
        std::string s = "r(";
        for (std::size_t p = 0; p < tuple.size(); ++p) {
            if (p) s += ',';
            s += keep[p] ? B.factors[p][tuple[p]] : std::string("*");
        }
        return s + ")";
    };
    auto cell_name = [&](const std::vector<int>& tuple, const std::vector<bool>& keep,
                         const std::string& base) {
        return residue_name(tuple, keep) + "|" + base;
    };

    std::size_t n = B.rank();
    CellComplexBuilder builder;
    for (int d = 0; d <= X.space.dimension(); ++d) {
        for (std::size_t ci = 0; ci < X.space.cell_count(d); ++ci) {
            CellId c{d, int(ci)};
            const Cell& base = X.space.cell(c);
            std::vector<bool> keep(n, true);
            for (int i : X.mirror_set(c)) keep[position.at(i)] = false;
            // Enumerate partial tuples over the kept coordinates.
            std::vector<int> tuple(n, 0);
            while (true) {
                std::vector<std::pair<std::string, int>> boundary;
                for (auto [fi, coeff] : base.boundary) {
                    CellId f{d - 1, fi};
                    std::vector<bool> fkeep(n, true);
                    for (int i : X.mirror_set(f)) fkeep[position.at(i)] = false;
                    boundary.push_back(
                        {cell_name(tuple, fkeep, X.space.cell(f).name), coeff});
                }
                builder.add_cell(d, cell_name(tuple, keep, base.name), boundary,
                                 residue_name(tuple, keep) + ":" + base.name);
                // Odometer over kept coordinates only.
                std::size_t p = 0;
                while (p < n) {
                    if (!keep[p]) { ++p; continue; }
                    if (++tuple[p] < int(B.factors[p].size())) break;
                    tuple[p] = 0;
                    ++p;
                }
                if (p == n) break;
            }
        }
    }
    return builder.finalize();
}

/// The Coxeter complex U(W, Delta) of a finite Coxeter group.
inline CellComplex coxeter_complex(const FiniteGroupTable& W) {
    return basic_construction(W, simplex_with_face_mirrors(W.index));
}

/// A coloring-ready simplicial model of the Coxeter complex: vertex colors
/// are the simplex coordinates of the underlying Davis mirrors.
struct ColoredSimplicialComplex {
    SimplicialComplex complex;
    std::map<int, int> color; // vertex -> color in 0..n
    int num_colors = 0;

    SimplicialMap coloring_map() const {
        std::vector<int> cverts;
        for (int c = 0; c < num_colors; ++c) cverts.push_back(c);
        SimplicialMap f;
        f.domain = complex;
        f.codomain = SimplicialComplex::full_simplex(cverts);
        f.vertex_map = color;
        return f;
    }
};

/// The Coxeter complex as an abstract simplicial complex, with the natural
/// projection to the fundamental simplex as a vertex coloring.
inline ColoredSimplicialComplex coxeter_complex_simplicial(const FiniteGroupTable& W) {
    CellComplex U = coxeter_complex(W);
    ColoredSimplicialComplex out;
    out.num_colors = int(W.rank());
    // 0-cells of U carry labels "<rep>:<delta vertex name>".
    std::map<int, int> color_of_vertex_cell;
    std::map<int, int> new_id; // 0-cell index -> vertex id
    for (std::size_t i = 0; i < U.cell_count(0); ++i) {
        const std::string& label = U.cells(0)[i].label;
        auto colon = label.find(':');
        int base_id = std::stoi(label.substr(colon + 1));
        int pos = 0;
        for (std::size_t p = 0; p < W.index.size(); ++p)
            if (W.index[p] == base_id) pos = int(p);
        new_id[int(i)] = int(i);
        color_of_vertex_cell[int(i)] = pos;
    }
    std::vector<int> verts;
    for (auto& [i, v] : new_id) verts.push_back(v);
    std::vector<Simplex> facets;
    for (auto c : U.all_cells()) {
        Simplex s;
        for (auto v : U.vertices_of(c)) s.push_back(new_id.at(v.second));
        std::sort(s.begin(), s.end());
        facets.push_back(s);
    }
    out.complex = SimplicialComplex::from_facets(verts, facets);
    for (auto& [i, v] : new_id) out.color[v] = color_of_vertex_cell.at(i);
    return out;
}

} // namespace polymir

#endif
