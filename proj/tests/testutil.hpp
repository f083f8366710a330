// Shared test fixtures and independent oracles.  Everything here must stay
// independent of the library code paths it is used to check: the product
// oracle enumerates raw tuples, the SNF oracles work from minors and
// fraction-free elimination.
#ifndef POLYMIR_TESTS_TESTUTIL_HPP
#define POLYMIR_TESTS_TESTUTIL_HPP

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polymir/polymir.hpp"

namespace testutil {

using namespace polymir;

// ---- fixtures ---------------------------------------------------------------

inline SimplicialComplex triangle_boundary() {
    return SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
}

inline SimplicialComplex full_triangle() {
    return SimplicialComplex::from_facets({1, 2, 3}, {{1, 2, 3}});
}

inline SimplicialComplex four_cycle() {
    return SimplicialComplex::from_facets({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline SimplicialComplex two_points(int a = 0, int b = 1) {
    return SimplicialComplex::from_facets({a, b}, {});
}

inline SimplicialComplex complete_graph(int n) {
    std::vector<int> verts;
    std::vector<Simplex> edges;
    for (int v = 0; v < n; ++v) verts.push_back(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
    return SimplicialComplex::from_facets(verts, edges);
}

/// The standard 6-vertex triangulation of the projective plane.
inline SimplicialComplex projective_plane_6() {
    return SimplicialComplex::from_facets(
        {1, 2, 3, 4, 5, 6},
        {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
         {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

inline SimplicialComplex octahedron() {
    auto j1 = join(two_points(0, 1), two_points(2, 3));
    return join(j1, two_points(4, 5));
}

inline CoxeterMatrix rank_n_all_twos(int n) {
    std::vector<int> idx;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) {
        idx.push_back(i);
        m[i][i] = 1;
    }
    return CoxeterMatrix::validate(idx, m);
}

// ---- random generation --------------------------------------------------------

inline SimplicialComplex random_complex(std::mt19937& rng, int max_vertices,
                                        int max_facet = 4) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) verts.push_back(v);
    std::vector<Simplex> facets;
    std::uniform_int_distribution<int> nf(0, 2 * n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    int count = nf(rng);
    for (int f = 0; f < count; ++f) {
        std::set<int> s;
        std::uniform_int_distribution<int> sz(1, std::min(n, max_facet));
        int k = sz(rng);
        while (int(s.size()) < k) s.insert(pick(rng));
        facets.push_back(Simplex(s.begin(), s.end()));
    }
    return SimplicialComplex::from_facets(verts, facets);
}

/// Random flag complex: the clique complex of a random graph.
inline SimplicialComplex random_flag_complex(std::mt19937& rng, int max_vertices,
                                             double edge_p = 0.5) {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::vector<int> verts;
    std::vector<Simplex> edges;
    std::bernoulli_distribution coin(edge_p);
    for (int v = 0; v < n; ++v) verts.push_back(v);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) edges.push_back({a, b});
    return clique_complex(SimplicialComplex::from_facets(verts, edges));
}

/// Greedy proper coloring refined to exactly `colors` classes (requires
/// colors >= greedy count and <= vertex count).
inline std::map<int, int> proper_coloring(const SimplicialComplex& L, int colors) {
    std::map<int, int> color;
    int used = 0;
    for (int v : L.vertices()) {
        std::set<int> taken;
        for (int w : L.vertices())
            if (color.count(w) && L.has_edge(v, w)) taken.insert(color[w]);
        int c = 0;
        while (taken.count(c)) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    if (used > colors || colors > int(L.vertices().size()))
        throw input_error("cannot color with the requested number of colors");
    // Split classes until exactly `colors` are used: recolor a vertex from
    // any class with two members into a fresh color.
    while (used < colors) {
        std::map<int, int> class_size;
        for (auto& [v, c] : color) ++class_size[c];
        for (auto& [v, c] : color)
            if (class_size[c] >= 2) {
                color[v] = used++;
                break;
            }
    }
    return color;
}

inline ColoredSimplicialComplex tautological_coloring(const SimplicialComplex& L) {
    ColoredSimplicialComplex c;
    c.complex = L;
    int k = 0;
    for (int v : L.vertices()) c.color[v] = k++;
    c.num_colors = k;
    return c;
}

// ---- exhaustive enumeration of small complexes --------------------------------

/// All simplicial complexes on the vertex set {0,...,n-1} (every vertex
/// present as a 0-simplex).  Downward-closed families built by scanning
/// subsets in cardinality order.
inline std::vector<SimplicialComplex> all_complexes_on(int n) {
    std::vector<std::vector<int>> subsets; // as bitmasks, size >= 2, by card
    for (int k = 2; k <= n; ++k)
        for (int mask = 0; mask < (1 << n); ++mask)
            if (__builtin_popcount(mask) == k) subsets.push_back({mask});
    std::vector<std::set<int>> families{{}};
    for (auto& entry : subsets) {
        int mask = entry[0];
        std::vector<std::set<int>> next;
        for (const auto& fam : families) {
            next.push_back(fam); // skip this subset
            // Include it only when all its facets (cardinality-1 subsets of
            // size >= 2) are present.
            bool ok = true;
            for (int b = 0; b < n && ok; ++b) {
                if (!(mask & (1 << b))) continue;
                int sub = mask & ~(1 << b);
                if (__builtin_popcount(sub) >= 2 && !fam.count(sub)) ok = false;
            }
            if (ok) {
                auto with = fam;
                with.insert(mask);
                next.push_back(std::move(with));
            }
        }
        families = std::move(next);
    }
    std::vector<SimplicialComplex> out;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v) verts.push_back(v);
    for (const auto& fam : families) {
        std::vector<Simplex> facets;
        for (int mask : fam) {
            Simplex s;
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) s.push_back(b);
            facets.push_back(s);
        }
        out.push_back(SimplicialComplex::from_facets(verts, facets));
    }
    return out;
}

// ---- independent oracles -------------------------------------------------------

/// Brute-force clique enumeration over vertex subsets (exponential).
inline std::set<Simplex> brute_force_cliques(const SimplicialComplex& graph) {
    std::vector<int> verts(graph.vertices().begin(), graph.vertices().end());
    std::set<Simplex> cliques;
    int n = int(verts.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        Simplex s;
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) s.push_back(verts[b]);
        bool clique = true;
        for (std::size_t a = 0; a < s.size() && clique; ++a)
            for (std::size_t b = a + 1; b < s.size() && clique; ++b)
                if (!graph.has_edge(s[a], s[b])) clique = false;
        if (clique) cliques.insert(s);
    }
    return cliques;
}

/// Polyhedral-product oracle: enumerate every raw coordinate tuple of cells
/// of the ambients and keep those whose support lies in S(L).  Returns the
/// multiset of (dimension, support) cell counts and the total per dimension.
struct ProductOracleResult {
    std::map<int, std::size_t> cells_per_dim;
    std::map<std::pair<int, Simplex>, std::size_t> cells_per_dim_and_support;
};

inline ProductOracleResult product_oracle(const SimplicialComplex& L,
                                          const std::map<int, CellPair>& pairs) {
    std::vector<int> I(L.vertices().begin(), L.vertices().end());
    std::vector<const CellPair*> P;
    for (int i : I) P.push_back(&pairs.at(i));
    ProductOracleResult out;
    std::vector<std::vector<CellId>> cells;
    for (auto* p : P) {
        std::vector<CellId> cs = p->ambient.all_cells();
        cells.push_back(cs);
    }
    std::vector<std::size_t> pick(I.size(), 0);
    if (I.empty()) return out;
    while (true) {
        Simplex supp;
        int dim = 0;
        for (std::size_t i = 0; i < I.size(); ++i) {
            CellId c = cells[i][pick[i]];
            dim += c.first;
            if (!P[i]->in_sub(c)) supp.push_back(I[i]);
        }
        if (supp.empty() || L.has_simplex(supp)) {
            ++out.cells_per_dim[dim];
            ++out.cells_per_dim_and_support[{dim, supp}];
        }
        std::size_t p = 0;
        while (p < I.size() && ++pick[p] == cells[p].size()) pick[p++] = 0;
        if (p == I.size()) break;
    }
    return out;
}

/// Determinant by fraction-free (Bareiss) elimination; exact.
inline BigInt bareiss_determinant(IntMatrix M) {
    std::size_t n = M.size();
    if (n == 0) return 1;
    BigInt denom = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / denom;
        denom = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : BigInt(-M[n - 1][n - 1]);
}

inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> sel(k);
    for (std::size_t i = 0; i < k; ++i) sel[i] = i;
    while (true) {
        out.push_back(sel);
        std::size_t i = k;
        while (i > 0 && sel[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++sel[i - 1];
        for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
    return out;
}

/// gcd of all k x k minors (0 when all vanish).
inline BigInt gcd_of_minors(const IntMatrix& M, std::size_t k) {
    std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    if (k == 0) return 1;
    if (k > rows || k > cols) return 0;
    BigInt g = 0;
    for (const auto& rsel : k_subsets(rows, k))
        for (const auto& csel : k_subsets(cols, k)) {
            IntMatrix sub(k, std::vector<BigInt>(k));
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub[a][b] = M[rsel[a]][csel[b]];
            BigInt d = bareiss_determinant(sub);
            if (d < 0) d = -d;
            g = boost::multiprecision::gcd(g, d);
        }
    return g;
}

/// Rank over the rationals by fraction-free elimination (independent of the
/// library's Smith normal form path).
inline std::size_t rational_rank(IntMatrix M) {
    std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (M[i][col] == 0) continue;
            BigInt a = M[i][col], b = M[rank][col];
            for (std::size_t j = col; j < cols; ++j)
                M[i][j] = M[i][j] * b - a * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

// ---- comparison helpers --------------------------------------------------------

/// Graded cell counts equal.
inline bool same_cell_counts(const CellComplex& A, const CellComplex& B) {
    return A.cell_counts() == B.cell_counts();
}

/// Boundary matrices equal under a name translation A -> B.
inline bool boundary_isomorphic(const CellComplex& A, const CellComplex& B,
                                const std::map<std::string, std::string>& name_map,
                                bool signed_compare) {
    if (!same_cell_counts(A, B)) return false;
    for (int d = 0; d <= A.dimension(); ++d)
        for (const auto& cell : A.cells(d)) {
            auto it = name_map.find(cell.name);
            if (it == name_map.end()) return false;
            CellId bid = B.id_of(it->second);
            if (bid.first != d) return false;
            std::map<std::string, long long> ab, bb;
            for (auto [i, coeff] : cell.boundary)
                ab[name_map.at(A.cells(d - 1)[i].name)] +=
                    signed_compare ? coeff : std::abs(coeff);
            for (auto [i, coeff] : B.cell(bid).boundary)
                bb[B.cells(d - 1)[i].name] += signed_compare ? coeff : std::abs(coeff);
            if (ab != bb) return false;
        }
    return true;
}

} // namespace testutil

#endif
