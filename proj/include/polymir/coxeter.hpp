#ifndef POLYMIR_COXETER_HPP
#define POLYMIR_COXETER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "polymir/base.hpp"
#include "polymir/simplicial.hpp"

namespace polymir {

/// Bond value standing for infinity.
constexpr int infinite_bond = std::numeric_limits<int>::max();

/// Symmetric matrix over {1,2,3,...} with 1 exactly on the diagonal.
class CoxeterMatrix {
public:
    static CoxeterMatrix validate(const std::vector<int>& index,
                                  const std::vector<std::vector<int>>& entries) {
        CoxeterMatrix M;
        M.index_ = index;
        for (std::size_t i = 0; i + 1 < index.size(); ++i)
            if (index[i] >= index[i + 1]) throw input_error("index set must be strictly increasing");
        for (std::size_t i = 0; i < index.size(); ++i) M.pos_[index[i]] = int(i);
        if (entries.size() != index.size()) throw input_error("matrix size mismatch");
        for (const auto& row : entries)
            if (row.size() != index.size()) throw input_error("matrix not square");
        std::size_t n = index.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (entries[i][i] != 1) throw input_error("diagonal entry must be 1");
            for (std::size_t j = 0; j < n; ++j) {
                if (entries[i][j] != entries[j][i]) throw input_error("matrix not symmetric");
                if (i != j && entries[i][j] < 2)
                    throw input_error("off-diagonal entry must be >= 2 or infinity");
            }
        }
        M.m_ = entries;
        return M;
    }

    /// Right-angled matrix of a graph: 2 on edges, infinity off edges.
    static CoxeterMatrix right_angled(const SimplicialComplex& graph) {
        if (graph.dimension() > 1)
            throw input_error("right-angled matrix needs a graph (dimension <= 1)");
        std::vector<int> index(graph.vertices().begin(), graph.vertices().end());
        std::size_t n = index.size();
        std::vector<std::vector<int>> m(n, std::vector<int>(n, infinite_bond));
        for (std::size_t i = 0; i < n; ++i) {
            m[i][i] = 1;
            for (std::size_t j = i + 1; j < n; ++j)
                if (graph.has_edge(index[i], index[j])) m[i][j] = m[j][i] = 2;
        }
        return validate(index, m);
    }

    const std::vector<int>& index() const { return index_; }
    std::size_t rank() const { return index_.size(); }

    int bond(int i, int j) const { return m_[pos_.at(i)][pos_.at(j)]; }
    const std::vector<std::vector<int>>& entries() const { return m_; }

    bool has_generator(int i) const { return pos_.count(i) != 0; }

    CoxeterMatrix submatrix(const std::vector<int>& J) const {
        std::vector<int> idx = J;
        std::sort(idx.begin(), idx.end());
        std::size_t n = idx.size();
        std::vector<std::vector<int>> m(n, std::vector<int>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m[a][b] = bond(idx[a], idx[b]);
        return validate(idx, m);
    }

private:
    std::vector<int> index_;
    std::map<int, int> pos_;
    std::vector<std::vector<int>> m_;
};

/// Matrix induced along a nondegenerate simplicial map f : L -> L'
/// (entries pulled back over the edges of L, infinity elsewhere).
inline CoxeterMatrix induced_matrix(const SimplicialMap& f, const CoxeterMatrix& target) {
    if (!is_nondegenerate(f)) throw input_error("induced_matrix requires a nondegenerate map");
    for (const auto& [v, w] : f.vertex_map)
        if (!target.has_generator(w))
            throw input_error("map image outside the target matrix index");
    std::vector<int> index(f.domain.vertices().begin(), f.domain.vertices().end());
    std::size_t n = index.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, infinite_bond));
    for (std::size_t a = 0; a < n; ++a) {
        m[a][a] = 1;
        for (std::size_t b = a + 1; b < n; ++b)
            if (f.domain.has_edge(index[a], index[b]))
                m[a][b] = m[b][a] = target.bond(f.vertex_map.at(index[a]),
                                                f.vertex_map.at(index[b]));
    }
    return CoxeterMatrix::validate(index, m);
}

namespace detail {

constexpr std::uint64_t order_cap = std::uint64_t(1) << 62;

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > order_cap / b) return order_cap;
    return a * b;
}

inline std::uint64_t sat_factorial(std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t k = 2; k <= n; ++k) r = sat_mul(r, k);
    return r;
}

inline std::uint64_t sat_pow2(std::uint64_t n) {
    return n >= 62 ? order_cap : (std::uint64_t(1) << n);
}

/// Order of the group of one connected Coxeter diagram (edges = bonds >= 3),
/// or 0 when the diagram is not of finite type.  Matches the classification
/// of finite irreducible diagrams: A, B/C, D, E6, E7, E8, F4, H3, H4, I2(m).
inline std::uint64_t irreducible_order(const CoxeterMatrix& M,
                                       const std::vector<int>& comp) {
    std::size_t k = comp.size();
    if (k == 1) return 2;
    // Collect the component edges.
    std::vector<std::array<int, 3>> edges; // (a, b, label)
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            int m = M.bond(comp[a], comp[b]);
            if (m >= 3) {
                if (m == infinite_bond) return 0;
                edges.push_back({int(a), int(b), m});
            }
        }
    if (k == 2) return edges.empty() ? 0 : 2ull * std::uint64_t(edges[0][2]);
    if (edges.size() != k - 1) return 0; // a cycle is never finite type
    std::vector<std::vector<std::pair<int, int>>> adj(k);
    for (auto [a, b, m] : edges) {
        adj[a].push_back({b, m});
        adj[b].push_back({a, m});
    }
    int branch = -1;
    for (std::size_t a = 0; a < k; ++a) {
        if (adj[a].size() > 3) return 0;
        if (adj[a].size() == 3) {
            if (branch >= 0) return 0;
            branch = int(a);
        }
    }
    int big_edges = 0, big_label = 0;
    bool big_terminal = false, big_middle_of_4 = false;
    for (auto [a, b, m] : edges) {
        if (m == 3) continue;
        ++big_edges;
        big_label = m;
        big_terminal = adj[a].size() == 1 || adj[b].size() == 1;
        big_middle_of_4 = k == 4 && adj[a].size() == 2 && adj[b].size() == 2;
    }
    if (branch >= 0) {
        if (big_edges > 0) return 0;
        // Branch arm lengths, sorted.
        std::vector<std::uint64_t> arms;
        for (auto [next, m] : adj[branch]) {
            std::uint64_t len = 1;
            int prev = branch, cur = next;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (adj[cur].size() == 3) return 0; // second branch point on the arm
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
            return sat_mul(sat_pow2(k - 1), sat_factorial(k)); // D_k
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return 51840;     // E6
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return 2903040;   // E7
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) return 696729600; // E8
        return 0;
    }
    // Path diagram.
    if (big_edges == 0) return sat_factorial(k + 1); // A_k
    if (big_edges > 1) return 0;
    if (big_label == 4 && big_terminal) return sat_mul(sat_pow2(k), sat_factorial(k)); // B_k
    if (big_label == 4 && big_middle_of_4) return 1152;                                // F4
    if (big_label == 5 && big_terminal && k == 3) return 120;                          // H3
    if (big_label == 5 && big_terminal && k == 4) return 14400;                        // H4
    return 0;
}

inline std::vector<std::vector<int>> diagram_components(const CoxeterMatrix& M,
                                                        const std::vector<int>& J) {
    std::vector<std::vector<int>> comps;
    std::set<int> left(J.begin(), J.end());
    while (!left.empty()) {
        std::vector<int> comp{*left.begin()};
        left.erase(left.begin());
        for (std::size_t h = 0; h < comp.size(); ++h) {
            for (auto it = left.begin(); it != left.end();) {
                if (M.bond(comp[h], *it) >= 3) {
                    comp.push_back(*it);
                    it = left.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace detail

/// Order of W_J if finite (saturating at 2^62), 0 otherwise.  Decided by
/// matching diagram components against the finite-type classification, never
/// by enumeration.
inline std::uint64_t finite_order(const CoxeterMatrix& M, const std::vector<int>& J) {
    std::uint64_t order = 1;
    for (const auto& comp : detail::diagram_components(M, J)) {
        std::uint64_t o = detail::irreducible_order(M, comp);
        if (o == 0) return 0;
        order = detail::sat_mul(order, o);
    }
    return order;
}

/// Coxeter system: the matrix plus its spherical-subset combinatorics.
class CoxeterSystem {
public:
    explicit CoxeterSystem(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {}

    static CoxeterSystem right_angled(const SimplicialComplex& graph) {
        return CoxeterSystem(CoxeterMatrix::right_angled(graph));
    }

    const CoxeterMatrix& matrix() const { return matrix_; }

    bool is_spherical(const std::vector<int>& J) const {
        for (int i : J)
            if (!matrix_.has_generator(i))
                throw input_error("subset leaves the generator index set");
        return finite_order(matrix_, J) != 0;
    }

    std::uint64_t order_of_special_subgroup(const std::vector<int>& J) const {
        return finite_order(matrix_, J);
    }

    /// Nonempty spherical subsets (the simplices of the nerve), grown from
    /// singletons; downward closure makes this exhaustive.
    const std::set<Simplex>& spherical_subsets() const {
        if (!spherical_built_) {
            std::vector<Simplex> frontier;
            for (int i : matrix_.index()) {
                spherical_.insert({i});
                frontier.push_back({i});
            }
            while (!frontier.empty()) {
                std::vector<Simplex> next;
                for (const auto& J : frontier)
                    for (int v : matrix_.index()) {
                        if (v <= J.back()) continue;
                        Simplex K = J;
                        K.push_back(v);
                        if (finite_order(matrix_, K) == 0) continue;
                        if (spherical_.insert(K).second) {
                            if (spherical_.size() > limits::max_simplices())
                                throw cap_exceeded("spherical subset budget exceeded");
                            next.push_back(std::move(K));
                        }
                    }
                frontier = std::move(next);
            }
            spherical_built_ = true;
        }
        return spherical_;
    }

    /// The nerve L(W,S): vertex set I, simplices the nonempty spherical subsets.
    SimplicialComplex nerve() const {
        std::vector<Simplex> facets(spherical_subsets().begin(), spherical_subsets().end());
        return SimplicialComplex::from_facets(matrix_.index(), facets);
    }

private:
    CoxeterMatrix matrix_;
    mutable std::set<Simplex> spherical_;
    mutable bool spherical_built_ = false;
};

/// Complete multiplication data for a finite Coxeter group.  Element 0 is the
/// identity; element ids are in ShortLex order of their normal forms.
struct FiniteGroupTable {
    std::vector<int> index;                   // generator ids, sorted
    std::vector<std::vector<int>> right;      // right[e][g] = e * s_g (g = position)
    std::vector<std::vector<int>> left;       // left[e][g]  = s_g * e
    std::vector<std::vector<int>> words;      // ShortLex normal form (generator positions)

    std::size_t order() const { return right.size(); }
    std::size_t rank() const { return index.size(); }

    int generator_position(int id) const {
        auto it = std::lower_bound(index.begin(), index.end(), id);
        if (it == index.end() || *it != id)
            throw input_error("unknown generator id " + std::to_string(id));
        return int(it - index.begin());
    }

    int apply_word_right(int e, const std::vector<int>& positions) const {
        for (int g : positions) e = right[e][g];
        return e;
    }
};

namespace detail {

/// Plain coset enumeration over the trivial subgroup with the standard
/// Coxeter relators.  Scans every (coset, relator) pair until stable,
/// processing coincidences through a union-find merge queue.
class CosetEnumerator {
public:
    CosetEnumerator(std::size_t ngens, std::vector<std::vector<int>> relators,
                    std::size_t hard_cap)
        : ngens_(ngens), relators_(std::move(relators)), cap_(hard_cap) {
        new_coset();
    }

    std::size_t run() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < table_.size(); ++c) {
                if (parent_[c] != int(c)) continue;
                for (const auto& rel : relators_)
                    if (scan(int(c), rel)) changed = true;
                if (parent_[c] != int(c)) break; // c was merged away; restart pass
            }
        }
        compact();
        return live_.size();
    }

    const std::vector<std::vector<int>>& compact_table() const { return compacted_; }

private:
    int new_coset() {
        if (live_count_ >= cap_)
            throw cap_exceeded("group order cap exceeded during enumeration");
        table_.emplace_back(ngens_, -1);
        parent_.push_back(int(table_.size()) - 1);
        ++live_count_;
        return int(table_.size()) - 1;
    }

    int find(int c) {
        while (parent_[c] != c) {
            parent_[c] = parent_[parent_[c]];
            c = parent_[c];
        }
        return c;
    }

    int get(int c, int g) {
        int d = table_[c][g];
        if (d < 0) return -1;
        d = find(d);
        table_[c][g] = d;
        return d;
    }

    void define(int c, int g, int d) {
        table_[c][g] = d;
        table_[d][g] = c; // generators are involutions
    }

    void merge(int a, int b) {
        queue_.push({a, b});
        while (!queue_.empty()) {
            auto [x, y] = queue_.front();
            queue_.pop();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent_[y] = x;
            --live_count_;
            for (std::size_t g = 0; g < ngens_; ++g) {
                int dy = table_[y][g];
                if (dy < 0) continue;
                dy = find(dy);
                int dx = get(x, int(g));
                if (dx < 0)
                    define(x, int(g), dy);
                else if (dx != dy)
                    queue_.push({dx, dy});
            }
        }
    }

    // Returns true if the scan defined a coset or found a coincidence.
    bool scan(int c, const std::vector<int>& word) {
        c = find(c);
        int f = c;
        std::size_t fi = 0;
        while (fi < word.size()) {
            int nxt = get(f, word[fi]);
            if (nxt < 0) break;
            f = nxt;
            ++fi;
        }
        if (fi == word.size()) {
            if (f != c) { merge(f, c); return true; }
            return false;
        }
        int b = c;
        std::size_t bi = word.size();
        while (bi > fi + 1) {
            int nxt = get(b, word[bi - 1]);
            if (nxt < 0) break;
            b = nxt;
            --bi;
        }
        if (bi == fi + 1) {
            define(f, word[fi], b);
            return true;
        }
        while (fi < bi - 1) {
            int n = new_coset();
            define(f, word[fi], n);
            f = n;
            ++fi;
        }
        define(f, word[fi], b);
        return true;
    }

    void compact() {
        std::map<int, int> newid;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (find(int(c)) == int(c)) {
                int id = int(newid.size());
                newid[int(c)] = id;
                live_.push_back(int(c));
            }
        compacted_.assign(live_.size(), std::vector<int>(ngens_, -1));
        for (std::size_t i = 0; i < live_.size(); ++i)
            for (std::size_t g = 0; g < ngens_; ++g) {
                int d = get(live_[i], int(g));
                if (d < 0) throw input_error("coset table incomplete after enumeration");
                compacted_[i][g] = newid.at(d);
            }
    }

    std::size_t ngens_;
    std::vector<std::vector<int>> relators_;
    std::size_t cap_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
    std::queue<std::pair<int, int>> queue_;
    std::size_t live_count_ = 0;
    std::vector<int> live_;
    std::vector<std::vector<int>> compacted_;
};

} // namespace detail

/// Breadth-first closure of the group elements with ShortLex normal forms.
/// Requires the whole system to be spherical and the classification-predicted
/// order to fit under the cap.
inline FiniteGroupTable enumerate_finite_group(const CoxeterSystem& system,
                                               std::size_t cap = 0) {
    if (cap == 0) cap = limits::max_group_order();
    const CoxeterMatrix& M = system.matrix();
    std::uint64_t predicted = finite_order(M, M.index());
    if (predicted == 0) throw input_error("group is not spherical (infinite)");
    if (predicted > cap)
        throw cap_exceeded("predicted group order " + std::to_string(predicted) +
                           " exceeds cap " + std::to_string(cap));

    std::size_t n = M.rank();
    std::vector<std::vector<int>> relators;
    for (std::size_t i = 0; i < n; ++i) relators.push_back({int(i), int(i)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int m = M.bond(M.index()[i], M.index()[j]);
            if (m == infinite_bond) continue;
            std::vector<int> w;
            for (int t = 0; t < m; ++t) {
                w.push_back(int(i));
                w.push_back(int(j));
            }
            relators.push_back(std::move(w));
        }

    detail::CosetEnumerator tc(n, std::move(relators), 64 * cap + 1024);
    std::size_t order = tc.run();
    if (order != predicted)
        throw input_error("enumeration disagrees with the classification order");
    const auto& raw = tc.compact_table();

    // Renumber elements in ShortLex (breadth-first) order from the identity.
    std::vector<int> shortlex_of(order, -1);
    std::vector<int> bfs;
    bfs.push_back(0);
    shortlex_of[0] = 0;
    FiniteGroupTable T;
    T.index = M.index();
    T.words.resize(order);
    std::vector<int> parent(order, -1), via(order, -1);
    for (std::size_t h = 0; h < bfs.size(); ++h) {
        int c = bfs[h];
        for (std::size_t g = 0; g < n; ++g) {
            int d = raw[c][g];
            if (shortlex_of[d] < 0) {
                shortlex_of[d] = int(bfs.size());
                parent[d] = c;
                via[d] = int(g);
                bfs.push_back(d);
            }
        }
    }
    for (std::size_t h = 0; h < bfs.size(); ++h) {
        int c = bfs[h];
        if (parent[c] >= 0) {
            T.words[h] = T.words[shortlex_of[parent[c]]];
            T.words[h].push_back(via[c]);
        }
    }
    T.right.assign(order, std::vector<int>(n, -1));
    for (std::size_t c = 0; c < order; ++c)
        for (std::size_t g = 0; g < n; ++g)
            T.right[shortlex_of[c]][g] = shortlex_of[raw[c][g]];
    // left[e][g] = s_g * e, by prefix recursion over the ShortLex tree.
    T.left.assign(order, std::vector<int>(n, -1));
    for (std::size_t g = 0; g < n; ++g) T.left[0][g] = T.right[0][g];
    for (std::size_t h = 1; h < order; ++h) {
        const auto& w = T.words[h];
        int p = 0;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) p = T.right[p][w[k]];
        for (std::size_t g = 0; g < n; ++g) T.left[h][g] = T.right[T.left[p][g]][w.back()];
    }
    return T;
}

/// The coset space W / W_J with the left W-action.
struct CosetSpace {
    std::vector<int> rep;                 // ShortLex-minimal element per coset
    std::vector<int> coset_of;            // element -> coset id
    std::vector<std::vector<int>> action; // action[coset][g] = coset of s_g * rep

    std::size_t size() const { return rep.size(); }
};

inline CosetSpace coset_space(const FiniteGroupTable& T, const std::vector<int>& J) {
    std::vector<int> gpos;
    for (int id : J) gpos.push_back(T.generator_position(id));
    CosetSpace cs;
    cs.coset_of.assign(T.order(), -1);
    for (std::size_t e = 0; e < T.order(); ++e) {
        if (cs.coset_of[e] >= 0) continue;
        int id = int(cs.rep.size());
        cs.rep.push_back(int(e)); // first visit = ShortLex-minimal in the orbit
        std::vector<int> stack{int(e)};
        cs.coset_of[e] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int g : gpos) {
                int y = T.right[x][g];
                if (cs.coset_of[y] < 0) {
                    cs.coset_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    cs.action.assign(cs.size(), std::vector<int>(T.rank(), -1));
    for (std::size_t c = 0; c < cs.size(); ++c)
        for (std::size_t g = 0; g < T.rank(); ++g)
            cs.action[c][g] = cs.coset_of[T.left[cs.rep[c]][g]];
    return cs;
}

} // namespace polymir

#endif
