#ifndef POLYMIR_POLYPROD_HPP
#define POLYMIR_POLYPROD_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polymir/cell_complex.hpp"
#include "polymir/homology.hpp"
#include "polymir/report.hpp"
#include "polymir/simplicial.hpp"

namespace polymir {

/// A pair (A, B): a connected ambient cell complex with a nonempty closed
/// subcomplex.
struct CellPair {
    CellComplex ambient;
    std::set<CellId> sub;

    void validate() const {
        if (sub.empty()) throw input_error("pair subcomplex must be nonempty");
        if (!ambient.is_closed_subcomplex(sub))
            throw input_error("pair subcomplex is not closed");
        if (!ambient.is_connected()) throw input_error("pair ambient must be connected");
    }

    bool in_sub(CellId c) const { return sub.count(c) != 0; }

    std::size_t sub_count() const { return sub.size(); }
};

/// ([0,1], {1}): cells 0, 1, 01.
inline CellPair interval_pair() {
    CellComplexBuilder b;
    b.add_cell(0, "0");
    b.add_cell(0, "1");
    b.add_cell(1, "01", {{"1", 1}, {"0", -1}});
    CellPair p;
    p.ambient = b.finalize();
    p.sub = {p.ambient.id_of("1")};
    return p;
}

/// (D^1, S^0) with D^1 = [-1, 1]: cells -, +, e.
inline CellPair d1_pair() {
    CellComplexBuilder b;
    b.add_cell(0, "-");
    b.add_cell(0, "+");
    b.add_cell(1, "e", {{"+", 1}, {"-", -1}});
    CellPair p;
    p.ambient = b.finalize();
    p.sub = {p.ambient.id_of("-"), p.ambient.id_of("+")};
    return p;
}

/// (D^2, S^1) with the honest five-cell disk (two vertices p, q; two edges
/// a, b from p to q; one 2-cell f with boundary a - b) and S^1 = {p,q,a,b}.
inline CellPair d2_pair() {
    CellComplexBuilder b;
    b.add_cell(0, "p");
    b.add_cell(0, "q");
    b.add_cell(1, "a", {{"q", 1}, {"p", -1}});
    b.add_cell(1, "b", {{"q", 1}, {"p", -1}});
    b.add_cell(2, "f", {{"a", 1}, {"b", -1}});
    CellPair p;
    p.ambient = b.finalize();
    p.sub = {p.ambient.id_of("p"), p.ambient.id_of("q"), p.ambient.id_of("a"),
             p.ambient.id_of("b")};
    return p;
}

/// (Cone(E), E): apex o, a vertex and an edge per element of E.
inline CellPair cone_pair(const std::vector<std::string>& labels) {
    if (labels.empty()) throw input_error("cone over the empty set");
    CellComplexBuilder b;
    b.add_cell(0, "o");
    for (const auto& x : labels) b.add_cell(0, "v" + x);
    for (const auto& x : labels) b.add_cell(1, "e" + x, {{"v" + x, 1}, {"o", -1}});
    CellPair p;
    p.ambient = b.finalize();
    for (const auto& x : labels) p.sub.insert(p.ambient.id_of("v" + x));
    return p;
}

/// (M, dM) for the square M = [0,1]^2 (nine cells) - a 2-disk with its
/// boundary circle as the subcomplex.
inline CellPair square_pair() {
    CellComplexBuilder b;
    for (const char* v : {"00", "01", "10", "11"}) b.add_cell(0, v);
    b.add_cell(1, "0*", {{"01", 1}, {"00", -1}});
    b.add_cell(1, "1*", {{"11", 1}, {"10", -1}});
    b.add_cell(1, "*0", {{"10", 1}, {"00", -1}});
    b.add_cell(1, "*1", {{"11", 1}, {"01", -1}});
    b.add_cell(2, "**", {{"1*", 1}, {"0*", -1}, {"*1", -1}, {"*0", 1}});
    CellPair p;
    p.ambient = b.finalize();
    for (const char* c : {"00", "01", "10", "11", "0*", "1*", "*0", "*1"})
        p.sub.insert(p.ambient.id_of(c));
    return p;
}

namespace detail {

struct ProductCellKey {
    std::vector<CellId> coords;
};

inline std::string product_cell_name(const std::vector<const CellPair*>& pairs,
                                     const std::vector<CellId>& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ',';
        s += pairs[i]->ambient.cell(coords[i]).name;
    }
    return s + ")";
}

} // namespace detail

/// The polyhedral product Z_L(A, B): all coordinate tuples whose support
/// (coordinates outside B) spans a simplex of L; boundaries by the graded
/// Leibniz rule.  Cell labels record the support, "supp:<dotted J>".
inline CellComplex polyhedral_product(const SimplicialComplex& L,
                                      const std::map<int, CellPair>& pairs) {
    std::vector<int> I(L.vertices().begin(), L.vertices().end());
    if (pairs.size() != I.size())
        throw input_error("pair family does not match the vertex set");
    std::vector<const CellPair*> P;
    for (int i : I) {
        auto it = pairs.find(i);
        if (it == pairs.end())
            throw input_error("missing pair for vertex " + std::to_string(i));
        it->second.validate();
        P.push_back(&it->second);
    }
    std::size_t n = I.size();

    // Predicted size: sum over supports J of prod (|A|-|B|) * prod |B|.
    std::size_t predicted = 0;
    std::vector<Simplex> supports{{}};
    for (const auto& s : L.simplices()) supports.push_back(s);
    for (const auto& J : supports) {
        std::size_t cnt = 1;
        for (std::size_t i = 0; i < n; ++i) {
            bool in = std::binary_search(J.begin(), J.end(), I[i]);
            std::size_t a = P[i]->ambient.total_cells(), bsz = P[i]->sub_count();
            cnt *= in ? (a - bsz) : bsz;
        }
        predicted += cnt;
        if (predicted > limits::max_cells())
            throw cap_exceeded("polyhedral product exceeds the cell cap");
    }

    // Enumerate cells per support, dimension-major insert.
    struct PendingCell {
        int dim;
        std::string name;
        std::vector<std::pair<std::string, int>> boundary;
        std::string label;
    };
    std::vector<PendingCell> pending;
    for (const auto& J : supports) {
        std::vector<std::vector<CellId>> choices(n);
        bool empty = false;
        for (std::size_t i = 0; i < n; ++i) {
            bool in = std::binary_search(J.begin(), J.end(), I[i]);
            for (auto c : P[i]->ambient.all_cells())
                if (P[i]->in_sub(c) != in) choices[i].push_back(c);
            if (choices[i].empty()) empty = true;
        }
        if (empty) continue;
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<CellId> coords(n);
            int dim = 0;
            for (std::size_t i = 0; i < n; ++i) {
                coords[i] = choices[i][pick[i]];
                dim += coords[i].first;
            }
            PendingCell pc;
            pc.dim = dim;
            pc.name = detail::product_cell_name(P, coords);
            pc.label = "supp:" + simplex_cell_name(J);
            int sign = 1;
            for (std::size_t i = 0; i < n; ++i) {
                for (auto [fi, coeff] : P[i]->ambient.cell(coords[i]).boundary) {
                    std::vector<CellId> fcoords = coords;
                    fcoords[i] = {coords[i].first - 1, fi};
                    pc.boundary.push_back(
                        {detail::product_cell_name(P, fcoords), sign * coeff});
                }
                sign *= (coords[i].first % 2 == 0) ? 1 : -1;
            }
            pending.push_back(std::move(pc));
            std::size_t p = 0;
            while (p < n && ++pick[p] == choices[p].size()) pick[p++] = 0;
            if (p == n) break;
        }
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const PendingCell& a, const PendingCell& b) { return a.dim < b.dim; });
    CellComplexBuilder builder;
    for (const auto& pc : pending) builder.add_cell(pc.dim, pc.name, pc.boundary, pc.label);
    return builder.finalize();
}

inline CellComplex polyhedral_product(const SimplicialComplex& L, const CellPair& same) {
    std::map<int, CellPair> pairs;
    for (int i : L.vertices()) pairs.emplace(i, same);
    return polyhedral_product(L, pairs);
}

/// The chamber Z_L([0,1], 1): an acyclic cubical complex.
inline CellComplex chamber(const SimplicialComplex& L) {
    return polyhedral_product(L, interval_pair());
}

/// The real toric space Z_L(D^1, S^0); the per-coordinate sign flips act by
/// relabeling - and + in the coordinate names.
inline CellComplex real_toric(const SimplicialComplex& L) {
    return polyhedral_product(L, d1_pair());
}

/// The moment-angle complex Z_L(D^2, S^1).
inline CellComplex moment_angle(const SimplicialComplex& L) {
    return polyhedral_product(L, d2_pair());
}

/// Z_L(Cone(E), E) for a family of finite sets.
inline CellComplex cone_pair_product(const SimplicialComplex& L,
                                     const std::map<int, std::vector<std::string>>& E) {
    std::map<int, CellPair> pairs;
    for (int i : L.vertices()) {
        auto it = E.find(i);
        if (it == E.end())
            throw input_error("missing factor for vertex " + std::to_string(i));
        pairs.emplace(i, cone_pair(it->second));
    }
    return polyhedral_product(L, pairs);
}

/// A chain map between two complexes, one matrix per dimension
/// (rows = target cells, columns = source cells).
struct ChainMap {
    std::vector<IntMatrix> matrix;

    static ChainMap zero(const CellComplex& from, const CellComplex& to) {
        ChainMap f;
        int dim = std::max(from.dimension(), to.dimension());
        for (int d = 0; d <= dim; ++d)
            f.matrix.push_back(
                IntMatrix(to.cell_count(d), std::vector<BigInt>(from.cell_count(d), 0)));
        return f;
    }

    static ChainMap identity(const CellComplex& C) {
        ChainMap f = zero(C, C);
        for (int d = 0; d <= C.dimension(); ++d)
            for (std::size_t i = 0; i < C.cell_count(d); ++i) f.matrix[d][i][i] = 1;
        return f;
    }

    /// g after f (f first).
    static ChainMap compose(const ChainMap& g, const ChainMap& f) {
        ChainMap h;
        for (std::size_t d = 0; d < std::min(f.matrix.size(), g.matrix.size()); ++d) {
            std::size_t rows = g.matrix[d].size();
            std::size_t mid = f.matrix[d].size();
            std::size_t cols = mid ? f.matrix[d][0].size() : 0;
            IntMatrix M(rows, std::vector<BigInt>(cols, 0));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t k = 0; k < mid; ++k) {
                    if (g.matrix[d][i][k] == 0) continue;
                    for (std::size_t j = 0; j < cols; ++j)
                        M[i][j] += g.matrix[d][i][k] * f.matrix[d][k][j];
                }
            h.matrix.push_back(std::move(M));
        }
        return h;
    }

    bool equals(const ChainMap& o) const {
        for (std::size_t d = 0; d < std::max(matrix.size(), o.matrix.size()); ++d) {
            const IntMatrix* a = d < matrix.size() ? &matrix[d] : nullptr;
            const IntMatrix* b = d < o.matrix.size() ? &o.matrix[d] : nullptr;
            auto nonzero = [](const IntMatrix* m) {
                if (!m) return false;
                for (const auto& row : *m)
                    for (const auto& x : row)
                        if (x != 0) return true;
                return false;
            };
            if (!a || !b) {
                if (nonzero(a) || nonzero(b)) return false;
                continue;
            }
            if (*a != *b) return false;
        }
        return true;
    }
};

/// del o f == f o del in every degree.
inline bool is_chain_map(const CellComplex& from, const CellComplex& to, const ChainMap& f) {
    for (int d = 1; d <= from.dimension(); ++d) {
        IntMatrix df = from.boundary_matrix(d);
        IntMatrix dt = to.boundary_matrix(d);
        std::size_t rows = to.cell_count(d - 1), cols = from.cell_count(d);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                BigInt lhs = 0, rhs = 0;
                for (std::size_t k = 0; k < to.cell_count(d); ++k)
                    lhs += dt[i][k] * f.matrix[d][k][j];
                for (std::size_t k = 0; k < from.cell_count(d - 1); ++k)
                    rhs += f.matrix[d - 1][i][k] * df[k][j];
                if (lhs != rhs) return false;
            }
    }
    return true;
}

/// Retraction data onto the polyhedral product of a full subcomplex.
struct Retraction {
    CellComplex total;     // Z_L
    CellComplex restricted; // Z_{L'}
    ChainMap retraction;   // Z_L -> Z_{L'}
    ChainMap inclusion;    // Z_{L'} -> Z_L
};

/// The retraction of Z_L onto Z_{L'} for the full subcomplex L' on the given
/// vertices.  Basepoints default to the lexicographically-first 0-cell of
/// each dropped subcomplex.  r o i is the identity of Z_{L'}.
inline Retraction retraction_to_full_subcomplex(const SimplicialComplex& L,
                                                const std::map<int, CellPair>& pairs,
                                                const std::vector<int>& keep) {
    for (int v : keep)
        if (!L.has_vertex(v)) throw input_error("retraction onto unknown vertex");
    std::set<int> keepset(keep.begin(), keep.end());
    SimplicialComplex Lp = full_subcomplex(L, keep);
    Retraction out;
    out.total = polyhedral_product(L, pairs);
    std::map<int, CellPair> kept_pairs;
    for (int v : keep) kept_pairs.emplace(v, pairs.at(v));
    out.restricted = polyhedral_product(Lp, kept_pairs);

    std::vector<int> I(L.vertices().begin(), L.vertices().end());
    // Basepoint 0-cell name per dropped coordinate.
    std::map<int, std::string> base;
    for (int i : I) {
        if (keepset.count(i)) continue;
        const CellPair& P = pairs.at(i);
        std::string best;
        for (auto c : P.sub)
            if (c.first == 0) {
                const std::string& nm = P.ambient.cell(c).name;
                if (best.empty() || nm < best) best = nm;
            }
        if (best.empty()) throw input_error("pair subcomplex has no 0-cell for a basepoint");
        base[i] = best;
    }

    auto split_coords = [&](const std::string& name) {
        // "(a,b,c)" -> coordinate names.
        std::vector<std::string> out_parts;
        std::string cur;
        for (std::size_t k = 1; k + 1 < name.size(); ++k) {
            if (name[k] == ',') {
                out_parts.push_back(cur);
                cur.clear();
            } else {
                cur += name[k];
            }
        }
        out_parts.push_back(cur);
        return out_parts;
    };

    out.retraction = ChainMap::zero(out.total, out.restricted);
    out.inclusion = ChainMap::zero(out.restricted, out.total);
    for (int d = 0; d <= out.total.dimension(); ++d) {
        for (std::size_t j = 0; j < out.total.cell_count(d); ++j) {
            auto parts = split_coords(out.total.cells(d)[j].name);
            std::string image = "(";
            bool kills = false;
            bool first = true;
            for (std::size_t k = 0; k < I.size(); ++k) {
                if (!keepset.count(I[k])) {
                    // Dropped coordinate collapses to its basepoint: positive
                    // dimensional cells die, 0-cells land on the basepoint.
                    if (pairs.at(I[k]).ambient.id_of(parts[k]).first > 0) kills = true;
                    continue;
                }
                if (!first) image += ',';
                image += parts[k];
                first = false;
            }
            image += ")";
            if (kills) continue;
            CellId t = out.restricted.id_of(image);
            if (t.first != d) throw input_error("retraction image dimension mismatch");
            out.retraction.matrix[d][t.second][j] = 1;
        }
        for (std::size_t j = 0; j < out.restricted.cell_count(d); ++j) {
            auto parts = split_coords(out.restricted.cells(d)[j].name);
            std::string image = "(";
            std::size_t kk = 0;
            for (std::size_t k = 0; k < I.size(); ++k) {
                if (k) image += ',';
                image += keepset.count(I[k]) ? parts[kk++] : base[I[k]];
            }
            image += ")";
            CellId t = out.total.id_of(image);
            out.inclusion.matrix[d][t.second][j] = 1;
        }
    }
    return out;
}

/// Caller-declared asphericity facts about the pair over one vertex.
struct PairDeclaration {
    bool aspherical = false;      // A(i) is aspherical
    bool aspherical_pair = false; // (A(i), B(i)) is an aspherical pair
};

/// Certify the hypotheses for a polyhedral product to be aspherical:
/// (i) the ambients are declared aspherical, (ii) the pair condition holds at
/// every non-conelike vertex, (iii) L is flag.  Conelike vertices are exempt
/// from (ii).
inline Report asphericity_report(const SimplicialComplex& L,
                                 const std::map<int, PairDeclaration>& declared) {
    for (int v : L.vertices())
        if (!declared.count(v))
            throw input_error("missing declaration for vertex " + std::to_string(v));
    Report r;
    r.note = "certified relative to declared metadata";
    {
        std::string bad;
        for (int v : L.vertices())
            if (!declared.at(v).aspherical) bad += (bad.empty() ? "" : ",") + std::to_string(v);
        r.conditions.push_back({"(i)", bad.empty() ? "PASS" : "FAIL",
                                bad.empty() ? "all ambients declared aspherical"
                                            : "not declared aspherical at: " + bad});
    }
    {
        std::string bad;
        int exempt = 0;
        for (int v : L.vertices()) {
            if (is_conelike(L, v)) {
                ++exempt;
                continue;
            }
            if (!declared.at(v).aspherical_pair)
                bad += (bad.empty() ? "" : ",") + std::to_string(v);
        }
        r.conditions.push_back({"(ii)", bad.empty() ? "PASS" : "FAIL",
                                bad.empty()
                                    ? "aspherical pairs at all non-conelike vertices (" +
                                          std::to_string(exempt) + " conelike exempt)"
                                    : "missing aspherical pair at non-conelike: " + bad});
    }
    {
        auto w = flag_witness(L);
        r.conditions.push_back({"(iii)", w ? "FAIL" : "PASS",
                                w ? "nonsimplex clique {" + simplex_cell_name(*w) + "}"
                                  : "L is a flag complex"});
    }
    return r;
}

} // namespace polymir

#endif
