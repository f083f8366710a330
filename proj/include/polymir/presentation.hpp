#ifndef POLYMIR_PRESENTATION_HPP
#define POLYMIR_PRESENTATION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polymir/base.hpp"
#include "polymir/cell_complex.hpp"
#include "polymir/coxeter.hpp"
#include "polymir/simplicial.hpp"
#include "polymir/snf.hpp"

namespace polymir {

/// Finite group presentation.  Relator letters are signed 1-based generator
/// indices: +k for generator k-1, -k for its inverse.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;

    void validate() const {
        std::set<std::string> names(generators.begin(), generators.end());
        if (names.size() != generators.size())
            throw input_error("duplicate generator name");
        for (const auto& r : relators)
            for (int x : r)
                if (x == 0 || std::abs(x) > int(generators.size()))
                    throw input_error("relator references unknown generator");
    }

    int generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return int(i);
        throw input_error("unknown generator " + name);
    }

    static std::vector<int> free_reduce(const std::vector<int>& w) {
        std::vector<int> out;
        for (int x : w) {
            if (!out.empty() && out.back() == -x)
                out.pop_back();
            else
                out.push_back(x);
        }
        return out;
    }

    static std::vector<int> cyclic_reduce(std::vector<int> w) {
        w = free_reduce(w);
        while (w.size() >= 2 && w.front() == -w.back()) {
            w.erase(w.begin());
            w.pop_back();
        }
        return w;
    }
};

/// The free rank and elementary divisors of the abelianization.
struct AbelianInvariants {
    long long free_rank = 0;
    std::vector<BigInt> torsion; // each > 1, each dividing the next

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "Z^" + std::to_string(free_rank);
        for (const auto& t : torsion) s += " + Z/" + t.str();
        return s;
    }
};

/// SNF of the relator exponent-sum matrix.
inline AbelianInvariants abelian_invariants(const Presentation& P) {
    P.validate();
    std::size_t n = P.generators.size();
    // Deduplicated nonzero exponent rows keep the elimination small.
    std::set<std::vector<long long>> rows;
    for (const auto& r : P.relators) {
        std::vector<long long> row(n, 0);
        for (int x : r) row[std::abs(x) - 1] += x > 0 ? 1 : -1;
        bool zero = true;
        for (long long v : row) zero = zero && v == 0;
        if (!zero) rows.insert(std::move(row));
    }
    std::vector<std::vector<long long>> M(rows.begin(), rows.end());
    SmithNormalForm snf;
    if (auto fast = smith_normal_form_i64(M)) {
        snf = *fast;
    } else {
        IntMatrix big(M.size(), std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) big[i][j] = M[i][j];
        snf = smith_normal_form(big);
    }
    AbelianInvariants out;
    out.free_rank = (long long)n - (long long)snf.rank();
    for (const auto& d : snf.divisors)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

/// Graph product: disjoint union of the vertex presentations plus all
/// commutators across each edge.  Generators are relabeled "v<k>_<name>".
inline Presentation graph_product(const SimplicialComplex& graph,
                                  const std::map<int, Presentation>& verts) {
    if (graph.dimension() > 1) throw input_error("graph product needs a graph");
    Presentation out;
    std::map<int, int> offset;
    for (int v : graph.vertices()) {
        auto it = verts.find(v);
        if (it == verts.end())
            throw input_error("missing presentation for vertex " + std::to_string(v));
        it->second.validate();
        offset[v] = int(out.generators.size());
        for (const auto& g : it->second.generators)
            out.generators.push_back("v" + std::to_string(v) + "_" + g);
        for (const auto& r : it->second.relators) {
            std::vector<int> w;
            for (int x : r) w.push_back(x > 0 ? x + offset[v] : x - offset[v]);
            out.relators.push_back(std::move(w));
        }
    }
    for (const auto& s : graph.simplices()) {
        if (s.size() != 2) continue;
        const Presentation& A = verts.at(s[0]);
        const Presentation& B = verts.at(s[1]);
        for (std::size_t a = 0; a < A.generators.size(); ++a)
            for (std::size_t b = 0; b < B.generators.size(); ++b) {
                int x = int(a) + 1 + offset[s[0]];
                int y = int(b) + 1 + offset[s[1]];
                out.relators.push_back({x, y, -x, -y});
            }
    }
    return out;
}

/// Right-angled Coxeter group of a graph: involutions plus edge commutators.
inline Presentation racg(const SimplicialComplex& graph) {
    if (graph.dimension() > 1) throw input_error("racg needs a graph");
    Presentation out;
    std::map<int, int> idx;
    for (int v : graph.vertices()) {
        idx[v] = int(out.generators.size()) + 1;
        out.generators.push_back("s" + std::to_string(v));
    }
    for (int v : graph.vertices()) out.relators.push_back({idx[v], idx[v]});
    for (const auto& s : graph.simplices())
        if (s.size() == 2)
            out.relators.push_back({idx[s[0]], idx[s[1]], -idx[s[0]], -idx[s[1]]});
    return out;
}

/// Right-angled Artin group of a graph: edge commutators only.
inline Presentation raag(const SimplicialComplex& graph) {
    if (graph.dimension() > 1) throw input_error("raag needs a graph");
    Presentation out;
    std::map<int, int> idx;
    for (int v : graph.vertices()) {
        idx[v] = int(out.generators.size()) + 1;
        out.generators.push_back("a" + std::to_string(v));
    }
    for (const auto& s : graph.simplices())
        if (s.size() == 2)
            out.relators.push_back({idx[s[0]], idx[s[1]], -idx[s[0]], -idx[s[1]]});
    return out;
}

namespace detail {

/// Endpoints of a regular edge: (tail, head) with del e = head - tail.
inline std::pair<int, int> edge_endpoints(const Cell& e, const std::string& where) {
    int head = -1, tail = -1;
    for (auto [i, coeff] : e.boundary) {
        if (coeff == 1 && head < 0)
            head = i;
        else if (coeff == -1 && tail < 0)
            tail = i;
        else
            throw input_error(where + ": edge " + e.name + " is not regular");
    }
    if (head < 0 || tail < 0 || head == tail)
        throw input_error(where + ": edge " + e.name + " is not regular");
    return {tail, head};
}

} // namespace detail

/// Edge-path presentation of the fundamental group of the 2-skeleton:
/// spanning tree by breadth-first search from the base vertex, one generator
/// per non-tree edge, one relator per 2-cell boundary word.
inline Presentation pi1_from_two_skeleton(const CellComplex& C, int base_vertex = 0) {
    std::size_t nv = C.cell_count(0), ne = C.cell_count(1);
    if (nv == 0) throw input_error("pi1 needs a nonempty complex");
    if (base_vertex < 0 || std::size_t(base_vertex) >= nv)
        throw input_error("base vertex out of range");
    std::vector<std::pair<int, int>> ends(ne);
    std::vector<std::vector<std::pair<int, bool>>> adj(nv); // (edge, forward)
    for (std::size_t e = 0; e < ne; ++e) {
        ends[e] = detail::edge_endpoints(C.cells(1)[e], "pi1");
        adj[ends[e].first].push_back({int(e), true});
        adj[ends[e].second].push_back({int(e), false});
    }
    std::vector<bool> tree(ne, false), seen(nv, false);
    std::vector<int> bfs{base_vertex};
    seen[base_vertex] = true;
    for (std::size_t h = 0; h < bfs.size(); ++h)
        for (auto [e, fwd] : adj[bfs[h]]) {
            int other = fwd ? ends[e].second : ends[e].first;
            if (!seen[other]) {
                seen[other] = true;
                tree[e] = true;
                bfs.push_back(other);
            }
        }
    for (std::size_t v = 0; v < nv; ++v)
        if (!seen[v]) throw input_error("pi1: 1-skeleton is disconnected");

    Presentation out;
    std::vector<int> gen_of_edge(ne, 0);
    for (std::size_t e = 0; e < ne; ++e) {
        if (tree[e]) continue;
        out.generators.push_back(C.cells(1)[e].name);
        gen_of_edge[e] = int(out.generators.size());
    }

    for (std::size_t f = 0; f < C.cell_count(2); ++f) {
        const Cell& cell = C.cells(2)[f];
        if (cell.boundary.empty()) continue;
        // Reconstruct the polygon: directed edges, each vertex crossed once.
        std::vector<std::pair<int, int>> darts; // (edge, +1/-1)
        for (auto [e, coeff] : cell.boundary) {
            if (coeff != 1 && coeff != -1)
                throw input_error("pi1: 2-cell " + cell.name + " is not a polygon");
            darts.push_back({e, coeff});
        }
        std::vector<bool> used(darts.size(), false);
        std::vector<int> word;
        used[0] = true;
        auto dart_ends = [&](std::size_t d) {
            auto [t, h] = ends[darts[d].first];
            return darts[d].second > 0 ? std::pair<int, int>{t, h}
                                       : std::pair<int, int>{h, t};
        };
        int start = dart_ends(0).first;
        int at = dart_ends(0).second;
        if (gen_of_edge[darts[0].first])
            word.push_back(darts[0].second * gen_of_edge[darts[0].first]);
        for (std::size_t step = 1; step < darts.size(); ++step) {
            int found = -1;
            for (std::size_t d = 0; d < darts.size(); ++d) {
                if (used[d]) continue;
                if (dart_ends(d).first != at) continue;
                if (found >= 0)
                    throw input_error("pi1: 2-cell " + cell.name + " is not a simple polygon");
                found = int(d);
            }
            if (found < 0)
                throw input_error("pi1: 2-cell " + cell.name + " boundary does not close");
            used[found] = true;
            at = dart_ends(found).second;
            if (gen_of_edge[darts[found].first])
                word.push_back(darts[found].second * gen_of_edge[darts[found].first]);
        }
        if (at != start)
            throw input_error("pi1: 2-cell " + cell.name + " boundary does not close");
        word = Presentation::free_reduce(word);
        if (!word.empty()) out.relators.push_back(std::move(word));
    }
    return out;
}

/// Result of a Reidemeister-Schreier rewrite.
struct KernelPresentation {
    Presentation kernel;
    bool surjective = true;
    std::size_t index = 0; // size of the Schreier transversal
};

/// Presentation of the kernel of the homomorphism P -> T sending each
/// generator to the given word in T's generators.  The Schreier transversal
/// is breadth-first in generator declaration order; tree generators are
/// removed.  Non-surjective images give the kernel of the map onto the image
/// subgroup (flagged in the result).
inline KernelPresentation reidemeister_schreier(
    const Presentation& P, const FiniteGroupTable& T,
    const std::map<std::string, std::vector<int>>& images) {
    P.validate();
    std::vector<int> phi(P.generators.size()); // image element per generator
    for (std::size_t g = 0; g < P.generators.size(); ++g) {
        auto it = images.find(P.generators[g]);
        if (it == images.end())
            throw input_error("missing image for generator " + P.generators[g]);
        std::vector<int> positions;
        for (int id : it->second) positions.push_back(T.generator_position(id));
        phi[g] = T.apply_word_right(0, positions);
    }
    // Element inverse: reverse the (involutive-letter) normal form.
    auto inverse = [&](int x) {
        std::vector<int> w = T.words[x];
        std::reverse(w.begin(), w.end());
        return T.apply_word_right(0, w);
    };
    auto mul = [&](int a, int b) { return T.apply_word_right(a, T.words[b]); };

    // Relators must die in T.
    for (const auto& r : P.relators) {
        int x = 0;
        for (int s : r) x = mul(x, s > 0 ? phi[s - 1] : inverse(phi[-s - 1]));
        if (x != 0) throw input_error("images do not kill a relator");
    }

    // Image subgroup and Schreier transversal (breadth-first).
    std::map<int, int> coset_of; // element of T -> transversal index
    std::vector<int> rep;        // transversal index -> element of T
    coset_of[0] = 0;
    rep.push_back(0);
    std::vector<std::vector<int>> act; // act[i][g]
    std::vector<std::vector<bool>> tree_edge;
    for (std::size_t h = 0; h < rep.size(); ++h) {
        act.emplace_back(P.generators.size(), -1);
        tree_edge.emplace_back(P.generators.size(), false);
        for (std::size_t g = 0; g < P.generators.size(); ++g) {
            int to = mul(rep[h], phi[g]);
            auto it = coset_of.find(to);
            if (it == coset_of.end()) {
                int idx = int(rep.size());
                coset_of[to] = idx;
                rep.push_back(to);
                tree_edge[h][g] = true;
                act[h][g] = idx;
            } else {
                act[h][g] = it->second;
            }
        }
    }

    KernelPresentation out;
    out.index = rep.size();
    out.surjective = rep.size() == T.order();

    std::vector<std::vector<int>> schreier_gen(rep.size(),
                                               std::vector<int>(P.generators.size(), 0));
    for (std::size_t h = 0; h < rep.size(); ++h)
        for (std::size_t g = 0; g < P.generators.size(); ++g) {
            if (tree_edge[h][g]) continue;
            out.kernel.generators.push_back("x" + std::to_string(h) + "_" +
                                            P.generators[g]);
            schreier_gen[h][g] = int(out.kernel.generators.size());
        }

    // Rewrite each conjugated relator through the coset action.
    auto act_inv = [&](int h, int g) {
        int to = mul(rep[h], inverse(phi[g]));
        return coset_of.at(to);
    };
    for (std::size_t h = 0; h < rep.size(); ++h) {
        for (const auto& r : P.relators) {
            std::vector<int> word;
            int state = int(h);
            for (int s : r) {
                if (s > 0) {
                    int g = s - 1;
                    if (int k = schreier_gen[state][g]) word.push_back(k);
                    state = act[state][g];
                } else {
                    int g = -s - 1;
                    int prev = act_inv(state, g);
                    if (int k = schreier_gen[prev][g]) word.push_back(-k);
                    state = prev;
                }
            }
            if (state != int(h))
                throw input_error("rewriting did not return to the starting coset");
            word = Presentation::free_reduce(word);
            if (!word.empty()) out.kernel.relators.push_back(std::move(word));
        }
    }
    return out;
}

/// Length-reducing Tietze moves: free and cyclic reduction, duplicate and
/// empty relator removal, and elimination of generators that occur exactly
/// once in exactly one relator.
inline Presentation tietze_simplify(Presentation P, int effort = 8) {
    P.validate();
    for (int pass = 0; pass < effort; ++pass) {
        bool changed = false;
        // Normalize relators.
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> relators;
        for (auto& r : P.relators) {
            auto w = Presentation::cyclic_reduce(r);
            if (w.empty()) { changed = changed || !r.empty(); continue; }
            if (seen.insert(w).second)
                relators.push_back(w);
            else
                changed = true;
        }
        if (relators.size() != P.relators.size()) changed = true;
        P.relators = std::move(relators);

        // A generator whose total occurrence count is one can be eliminated:
        // its relator expresses it in the others.
        std::vector<int> count(P.generators.size(), 0);
        std::vector<int> home(P.generators.size(), -1);
        for (std::size_t ri = 0; ri < P.relators.size(); ++ri)
            for (int x : P.relators[ri]) {
                ++count[std::abs(x) - 1];
                home[std::abs(x) - 1] = int(ri);
            }
        int victim = -1;
        for (std::size_t g = 0; g < P.generators.size(); ++g)
            if (count[g] == 1) { victim = int(g); break; }
        if (victim >= 0) {
            // Remove the relator and the generator; no substitution is needed
            // elsewhere because the generator occurs nowhere else.
            P.relators.erase(P.relators.begin() + home[victim]);
            P.generators.erase(P.generators.begin() + victim);
            for (auto& r : P.relators)
                for (int& x : r) {
                    int g = std::abs(x) - 1;
                    if (g > victim) x = x > 0 ? x - 1 : x + 1;
                }
            changed = true;
        }
        if (!changed) break;
    }
    return P;
}

} // namespace polymir

#endif
