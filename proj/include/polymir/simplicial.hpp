#ifndef POLYMIR_SIMPLICIAL_HPP
#define POLYMIR_SIMPLICIAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "polymir/base.hpp"

namespace polymir {

/// A simplex is a sorted list of distinct non-negative vertex ids.
using Simplex = std::vector<int>;

inline Simplex sorted_simplex(Simplex s) {
    std::sort(s.begin(), s.end());
    return s;
}

/// Finite abstract simplicial complex.  Stores the full set of nonempty
/// simplices (downward closed).  Every listed vertex is a 0-simplex; the
/// empty simplex is not stored but poset-style operations treat it as the
/// minimum element.  All enumeration orders are lexicographic on sorted
/// vertex lists.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of the given facets.  Facets need not be maximal.
    static SimplicialComplex from_facets(const std::vector<int>& vertices,
                                         const std::vector<Simplex>& facets) {
        SimplicialComplex L;
        for (int v : vertices) {
            if (v < 0) throw input_error("vertex ids must be non-negative");
            L.vertices_.insert(v);
        }
        for (const Simplex& f : facets) {
            Simplex s = sorted_simplex(f);
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] == s[i + 1])
                    throw input_error("duplicate vertex in facet");
            for (int v : s)
                if (!L.vertices_.count(v))
                    throw input_error("facet references unknown vertex " + std::to_string(v));
            L.insert_closed(s);
        }
        for (int v : L.vertices_) L.simplices_.insert({v});
        return L;
    }

    static SimplicialComplex empty_complex() { return SimplicialComplex(); }

    /// Full simplex on the given vertex ids.
    static SimplicialComplex full_simplex(const std::vector<int>& vertices) {
        std::vector<int> vs = vertices;
        std::sort(vs.begin(), vs.end());
        return from_facets(vs, {vs});
    }

    const std::set<int>& vertices() const { return vertices_; }
    const std::set<Simplex>& simplices() const { return simplices_; }

    bool has_vertex(int v) const { return vertices_.count(v) != 0; }
    bool has_simplex(const Simplex& s) const {
        return simplices_.count(sorted_simplex(s)) != 0;
    }

    std::size_t simplex_count() const { return simplices_.size(); }

    /// -1 for the empty complex.
    int dimension() const {
        int d = -1;
        for (const auto& s : simplices_) d = std::max<int>(d, int(s.size()) - 1);
        return d;
    }

    bool has_edge(int u, int v) const {
        if (u == v) return has_vertex(u);
        return has_simplex({std::min(u, v), std::max(u, v)});
    }

    std::vector<Simplex> simplices_of_dimension(int d) const {
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (int(s.size()) == d + 1) out.push_back(s);
        return out;
    }

    /// Maximal simplices, lexicographic.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (const auto& s : simplices_) {
            bool maximal = true;
            for (int v : vertices_) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                Simplex t = s;
                t.insert(std::lower_bound(t.begin(), t.end(), v), v);
                if (simplices_.count(t)) { maximal = false; break; }
            }
            if (maximal) out.push_back(s);
        }
        return out;
    }

    bool operator==(const SimplicialComplex& o) const {
        return vertices_ == o.vertices_ && simplices_ == o.simplices_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    void insert_closed(const Simplex& s) {
        if (s.empty()) return;
        // Insert all nonempty subsets of s.
        std::size_t n = s.size();
        if (simplices_.size() + (std::size_t(1) << n) > limits::max_simplices() + 1)
            throw cap_exceeded("simplex budget exceeded");
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            Simplex t;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) t.push_back(s[i]);
            simplices_.insert(std::move(t));
            if (simplices_.size() > limits::max_simplices())
                throw cap_exceeded("simplex budget exceeded");
        }
    }

    std::set<int> vertices_;
    std::set<Simplex> simplices_;

    friend SimplicialComplex clique_complex(const SimplicialComplex&);
    friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);
};

/// Vertex map between complexes.  Valid iff the image of every simplex is a
/// simplex of the codomain.
struct SimplicialMap {
    SimplicialComplex domain;
    SimplicialComplex codomain;
    std::map<int, int> vertex_map;

    Simplex image(const Simplex& s) const {
        std::set<int> img;
        for (int v : s) {
            auto it = vertex_map.find(v);
            if (it == vertex_map.end())
                throw input_error("vertex map misses vertex " + std::to_string(v));
            img.insert(it->second);
        }
        return Simplex(img.begin(), img.end());
    }

    void validate() const {
        for (int v : domain.vertices())
            if (!vertex_map.count(v))
                throw input_error("vertex map misses vertex " + std::to_string(v));
        for (const auto& [v, w] : vertex_map)
            if (!codomain.has_vertex(w))
                throw input_error("vertex map hits unknown codomain vertex");
        for (const auto& s : domain.simplices())
            if (!codomain.has_simplex(image(s)))
                throw input_error("map sends a simplex outside the codomain");
    }
};

/// Finite poset over opaque integer ids.  The stored relation may be any
/// generating set of strict order pairs; queries use the transitive closure.
class Poset {
public:
    Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& less_pairs)
        : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
        std::size_t n = elements_.size();
        closure_.assign(n, std::vector<bool>(n, false));
        for (auto [a, b] : less_pairs) {
            auto ia = index_.find(a), ib = index_.find(b);
            if (ia == index_.end() || ib == index_.end())
                throw input_error("relation pair references unknown poset element");
            closure_[ia->second][ib->second] = true;
        }
        // Floyd-Warshall closure.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (closure_[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (closure_[k][j]) closure_[i][j] = true;
        for (std::size_t i = 0; i < n; ++i)
            if (closure_[i][i]) throw input_error("poset relation has a cycle");
    }

    const std::vector<int>& elements() const { return elements_; }

    bool less(int a, int b) const {
        return closure_[index_.at(a)][index_.at(b)];
    }

private:
    std::vector<int> elements_;
    std::map<int, std::size_t> index_;
    std::vector<std::vector<bool>> closure_;
};

/// True iff every set of pairwise-adjacent vertices spans a simplex.
/// Witness (when not flag): a minimal pairwise-adjacent non-simplex.
inline std::optional<Simplex> flag_witness(const SimplicialComplex& L) {
    // A complex is flag iff every (k+1)-clique among the k-simplices spans.
    // Search cliques by extending simplices: if sigma is a simplex and v is
    // adjacent to all of sigma but sigma+v is not a simplex, that set is a
    // minimal witness (all proper subsets are simplices).
    std::vector<int> verts(L.vertices().begin(), L.vertices().end());
    for (const Simplex& s : L.simplices()) {
        if (s.size() < 2) continue;
        for (int v : verts) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            bool adjacent_all = true;
            for (int u : s)
                if (!L.has_edge(u, v)) { adjacent_all = false; break; }
            if (!adjacent_all) continue;
            Simplex t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), v), v);
            if (!L.has_simplex(t)) return t;
        }
    }
    return std::nullopt;
}

inline bool is_flag(const SimplicialComplex& L) { return !flag_witness(L).has_value(); }

/// Flag complex of a graph: simplices are the cliques.
inline SimplicialComplex clique_complex(const SimplicialComplex& graph) {
    if (graph.dimension() > 1)
        throw input_error("clique_complex input must be a graph (dimension <= 1)");
    SimplicialComplex L;
    L.vertices_ = graph.vertices();
    for (int v : graph.vertices()) L.simplices_.insert({v});
    // Extend cliques one vertex at a time; every clique's prefix is a clique.
    std::vector<Simplex> frontier;
    for (int v : graph.vertices()) frontier.push_back({v});
    while (!frontier.empty()) {
        std::vector<Simplex> next;
        for (const Simplex& c : frontier) {
            for (int v : graph.vertices()) {
                if (v <= c.back()) continue;
                bool adj = true;
                for (int u : c)
                    if (!graph.has_edge(u, v)) { adj = false; break; }
                if (!adj) continue;
                Simplex d = c;
                d.push_back(v);
                L.simplices_.insert(d);
                if (L.simplices_.size() > limits::max_simplices())
                    throw cap_exceeded("simplex budget exceeded");
                next.push_back(std::move(d));
            }
        }
        frontier = std::move(next);
    }
    return L;
}

/// Vertices and edges of L.
inline SimplicialComplex one_skeleton(const SimplicialComplex& L) {
    std::vector<Simplex> edges;
    for (const auto& s : L.simplices())
        if (s.size() == 2) edges.push_back(s);
    return SimplicialComplex::from_facets(
        std::vector<int>(L.vertices().begin(), L.vertices().end()), edges);
}

/// Order complex: simplices are the nonempty chains of P.  Always flag.
inline SimplicialComplex order_complex(const Poset& P) {
    std::vector<Simplex> facets;
    // Chains = cliques of the comparability graph; emit maximal chains via DFS.
    const auto& el = P.elements();
    std::vector<Simplex> stack;
    for (int a : el) stack.push_back({a});
    while (!stack.empty()) {
        Simplex c = stack.back();
        stack.pop_back();
        bool extended = false;
        for (int b : el) {
            if (P.less(c.back(), b)) {
                Simplex d = c;
                d.push_back(b);
                stack.push_back(std::move(d));
                extended = true;
            }
        }
        if (!extended) facets.push_back(c);
    }
    return SimplicialComplex::from_facets(el, facets);
}

/// Barycentric subdivision data: the subdivided complex plus, per new vertex
/// id, the original simplex it is the barycenter of (in lexicographic order).
struct BarycentricSubdivision {
    SimplicialComplex complex;
    std::vector<Simplex> barycenter_of; // new vertex id -> original simplex

    /// The dimension labeling d(v): new vertex -> dim of its original cell.
    std::map<int, int> dimension_labels() const {
        std::map<int, int> d;
        for (std::size_t i = 0; i < barycenter_of.size(); ++i)
            d[int(i)] = int(barycenter_of[i].size()) - 1;
        return d;
    }
};

/// Order complex of the poset of nonempty simplices of L.  Always flag and
/// Euler-characteristic preserving.
inline BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& L) {
    BarycentricSubdivision out;
    std::map<Simplex, int> id_of;
    for (const auto& s : L.simplices()) {
        id_of[s] = int(out.barycenter_of.size());
        out.barycenter_of.push_back(s);
    }
    std::vector<int> elements;
    for (std::size_t i = 0; i < out.barycenter_of.size(); ++i) elements.push_back(int(i));
    std::vector<std::pair<int, int>> less;
    for (const auto& [s, i] : id_of)
        for (const auto& [t, j] : id_of)
            if (s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                less.push_back({i, j});
    out.complex = order_complex(Poset(elements, less));
    return out;
}

/// Link of sigma: all tau disjoint from sigma with tau+sigma a simplex.
inline SimplicialComplex link(const SimplicialComplex& L, const Simplex& sigma_in) {
    Simplex sigma = sorted_simplex(sigma_in);
    if (!sigma.empty() && !L.has_simplex(sigma))
        throw input_error("link of a non-simplex");
    std::vector<int> verts;
    std::vector<Simplex> facets;
    for (const auto& t : L.simplices()) {
        Simplex inter, uni = sigma;
        std::set_intersection(t.begin(), t.end(), sigma.begin(), sigma.end(),
                              std::back_inserter(inter));
        if (!inter.empty()) continue;
        uni.insert(uni.end(), t.begin(), t.end());
        if (!L.has_simplex(uni)) continue;
        if (t.size() == 1) verts.push_back(t[0]);
        facets.push_back(t);
    }
    return SimplicialComplex::from_facets(verts, facets);
}

/// Join with disjoint vertex ids; throws on overlap.
inline SimplicialComplex join(const SimplicialComplex& L1, const SimplicialComplex& L2) {
    for (int v : L1.vertices())
        if (L2.has_vertex(v))
            throw input_error("join requires disjoint vertex ids (overlap at " +
                              std::to_string(v) + ")");
    SimplicialComplex J;
    J.vertices_ = L1.vertices();
    J.vertices_.insert(L2.vertices().begin(), L2.vertices().end());
    auto insert_union = [&J](const Simplex& a, const Simplex& b) {
        Simplex u;
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        J.simplices_.insert(std::move(u));
        if (J.simplices_.size() > limits::max_simplices())
            throw cap_exceeded("simplex budget exceeded");
    };
    for (const auto& a : L1.simplices()) insert_union(a, {});
    for (const auto& b : L2.simplices()) insert_union({}, b);
    for (const auto& a : L1.simplices())
        for (const auto& b : L2.simplices()) insert_union(a, b);
    return J;
}

/// Join after relabeling L2's vertices by a fixed offset (max id of L1 + 1).
/// Returns the joined complex and the offset used for L2's ids.
struct RelabeledJoin {
    SimplicialComplex complex;
    int offset;
};

inline RelabeledJoin join_relabeled(const SimplicialComplex& L1, const SimplicialComplex& L2) {
    int offset = 0;
    if (!L1.vertices().empty()) offset = *L1.vertices().rbegin() + 1;
    std::vector<int> verts;
    std::vector<Simplex> facets;
    for (int v : L2.vertices()) verts.push_back(v + offset);
    for (const auto& s : L2.facets()) {
        Simplex t = s;
        for (int& v : t) v += offset;
        facets.push_back(t);
    }
    return {join(L1, SimplicialComplex::from_facets(verts, facets)), offset};
}

/// Simplices of L with all vertices in the given subset.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& L,
                                         const std::vector<int>& subset) {
    std::set<int> keep(subset.begin(), subset.end());
    for (int v : keep)
        if (!L.has_vertex(v))
            throw input_error("full_subcomplex: unknown vertex " + std::to_string(v));
    std::vector<Simplex> facets;
    for (const auto& s : L.simplices()) {
        bool inside = true;
        for (int v : s)
            if (!keep.count(v)) { inside = false; break; }
        if (inside) facets.push_back(s);
    }
    return SimplicialComplex::from_facets(std::vector<int>(keep.begin(), keep.end()), facets);
}

/// Injective on every simplex.
inline bool is_nondegenerate(const SimplicialMap& f) {
    f.validate();
    for (const auto& s : f.domain.simplices())
        if (f.image(s).size() != s.size()) return false;
    return true;
}

/// Nondegenerate, codomain a full simplex, and vertex-surjective.
inline bool is_coloring(const SimplicialMap& f) {
    if (!is_nondegenerate(f)) return false;
    Simplex all(f.codomain.vertices().begin(), f.codomain.vertices().end());
    if (all.empty() || !f.codomain.has_simplex(all)) return false;
    std::set<int> hit;
    for (const auto& [v, w] : f.vertex_map) hit.insert(w);
    return hit == f.codomain.vertices();
}

/// True iff v is joined by an edge to every other vertex.
inline bool is_conelike(const SimplicialComplex& L, int v) {
    if (!L.has_vertex(v)) throw input_error("is_conelike: unknown vertex");
    for (int w : L.vertices())
        if (w != v && !L.has_edge(v, w)) return false;
    return true;
}

} // namespace polymir

#endif
