#ifndef POLYMIR_CELL_COMPLEX_HPP
#define POLYMIR_CELL_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "polymir/base.hpp"
#include "polymir/snf.hpp"

namespace polymir {

/// (dimension, index within that dimension)
using CellId = std::pair<int, int>;

struct Cell {
    std::string name;                            // unique within the complex
    std::vector<std::pair<int, int>> boundary;   // (index one dim down, coeff)
    std::string label;                           // optional provenance
};

/// Graded cells with signed integer boundary incidence.  The common carrier
/// for chambers, basic constructions, polyhedral products and pullbacks.
/// del(del(c)) = 0 is checked when the complex is finalized.
class CellComplex {
public:
    int dimension() const { return int(cells_.size()) - 1; }

    std::size_t cell_count(int dim) const {
        if (dim < 0 || dim > dimension()) return 0;
        return cells_[dim].size();
    }

    std::size_t total_cells() const {
        std::size_t n = 0;
        for (const auto& layer : cells_) n += layer.size();
        return n;
    }

    std::vector<std::size_t> cell_counts() const {
        std::vector<std::size_t> out;
        for (const auto& layer : cells_) out.push_back(layer.size());
        return out;
    }

    const Cell& cell(CellId id) const { return cells_[id.first][id.second]; }
    const std::vector<Cell>& cells(int dim) const { return cells_[dim]; }

    bool has_cell(const std::string& name) const { return index_.count(name) != 0; }
    CellId id_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw input_error("unknown cell: " + name);
        return it->second;
    }

    std::vector<CellId> all_cells() const {
        std::vector<CellId> out;
        for (int d = 0; d <= dimension(); ++d)
            for (std::size_t i = 0; i < cells_[d].size(); ++i) out.push_back({d, int(i)});
        return out;
    }

    /// Boundary matrix of del_d : C_d -> C_{d-1}; rows = (d-1)-cells, cols = d-cells.
    IntMatrix boundary_matrix(int d) const {
        std::size_t rows = cell_count(d - 1), cols = cell_count(d);
        IntMatrix M(rows, std::vector<BigInt>(cols, 0));
        if (d < 1 || d > dimension()) return M;
        for (std::size_t j = 0; j < cols; ++j)
            for (auto [i, coeff] : cells_[d][j].boundary) M[i][j] += coeff;
        return M;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (int d = 0; d <= dimension(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * (long long)cells_[d].size();
        return chi;
    }

    /// Codimension-one faces (every cell referenced by the incidence list).
    std::vector<CellId> facets_of(CellId c) const {
        std::set<int> idx;
        for (auto [i, coeff] : cell(c).boundary) idx.insert(i);
        std::vector<CellId> out;
        for (int i : idx) out.push_back({c.first - 1, i});
        return out;
    }

    /// All cells below c in the face relation, including c.  Memoized;
    /// node references stay valid across later queries.
    const std::set<CellId>& closure(CellId c) const {
        std::lock_guard<std::mutex> lock(caches_->mu);
        return closure_unlocked(c);
    }

    std::set<CellId> closure(const std::set<CellId>& cs) const {
        std::set<CellId> out;
        for (auto c : cs) {
            const auto& cl = closure(c);
            out.insert(cl.begin(), cl.end());
        }
        return out;
    }

    bool is_closed_subcomplex(const std::set<CellId>& cs) const {
        for (auto c : cs)
            for (auto f : facets_of(c))
                if (!cs.count(f)) return false;
        return true;
    }

    /// Strict cofaces one dimension up (distinct cells).
    std::vector<CellId> cofacets_of(CellId c) const {
        std::lock_guard<std::mutex> lock(caches_->mu);
        build_coface_table_unlocked();
        return caches_->coface_table[c.first][c.second];
    }

    /// All cells strictly above c in the face relation.
    std::set<CellId> open_star_above(CellId c) const {
        std::set<CellId> out;
        std::vector<CellId> stack{c};
        while (!stack.empty()) {
            CellId cur = stack.back();
            stack.pop_back();
            for (auto f : cofacets_of(cur))
                if (out.insert(f).second) stack.push_back(f);
        }
        return out;
    }

    /// 0-cells in the closure of c.
    std::vector<CellId> vertices_of(CellId c) const {
        std::vector<CellId> out;
        for (auto f : closure(c))
            if (f.first == 0) out.push_back(f);
        return out;
    }

    /// Connectivity through the face relation.
    bool is_connected() const {
        std::size_t n = total_cells();
        if (n == 0) return true;
        std::map<CellId, int> comp;
        std::vector<CellId> stack{{0, 0}};
        if (cell_count(0) == 0) {
            // No vertices: treat lowest-dimension layer as seeds. (Degenerate.)
            return total_cells() <= 1;
        }
        comp[{0, 0}] = 0;
        while (!stack.empty()) {
            CellId cur = stack.back();
            stack.pop_back();
            auto touch = [&](CellId o) {
                if (!comp.count(o)) { comp[o] = 0; stack.push_back(o); }
            };
            for (auto f : facets_of(cur)) touch(f);
            for (auto f : cofacets_of(cur)) touch(f);
        }
        return comp.size() == n;
    }

    /// The subcomplex on the given closed cell set, preserving names/labels.
    CellComplex restrict_to(const std::set<CellId>& cs) const {
        if (!is_closed_subcomplex(cs))
            throw input_error("restrict_to: cell set is not closed under faces");
        CellComplex out;
        std::map<CellId, int> newindex;
        for (auto c : cs) {
            int d = c.first;
            while (int(out.cells_.size()) <= d) out.cells_.emplace_back();
            newindex[c] = int(out.cells_[d].size());
            out.cells_[d].push_back(cell(c));
        }
        for (auto c : cs) {
            auto& nc = out.cells_[c.first][newindex[c]];
            for (auto& [i, coeff] : nc.boundary) i = newindex.at({c.first - 1, i});
            out.index_[nc.name] = {c.first, newindex[c]};
        }
        out.validate();
        return out;
    }

    void validate() const {
        // del(del(c)) must vanish for every cell of dimension >= 2.
        for (int d = 2; d <= dimension(); ++d) {
            for (const auto& c : cells_[d]) {
                std::map<int, BigInt> acc;
                for (auto [i, coeff] : c.boundary)
                    for (auto [i2, coeff2] : cells_[d - 1][i].boundary)
                        acc[i2] += BigInt(coeff) * coeff2;
                for (auto& [i2, v] : acc)
                    if (v != 0)
                        throw input_error("boundary of boundary nonzero at cell " + c.name);
            }
        }
    }

private:
    friend class CellComplexBuilder;

    // Derived face-relation data, filled on demand.  Copies of a complex
    // share the cache; cells are immutable after finalize so shared caches
    // stay valid.
    struct FaceCaches {
        std::mutex mu;
        bool cofaces_built = false;
        std::vector<std::vector<std::vector<CellId>>> coface_table;
        std::map<CellId, std::set<CellId>> closures;
    };

    const std::set<CellId>& closure_unlocked(CellId c) const {
        auto it = caches_->closures.find(c);
        if (it != caches_->closures.end()) return it->second;
        std::set<CellId> out{c};
        for (auto f : facets_of(c)) {
            const auto& sub = closure_unlocked(f);
            out.insert(sub.begin(), sub.end());
        }
        return caches_->closures.emplace(c, std::move(out)).first->second;
    }

    void build_coface_table_unlocked() const {
        if (caches_->cofaces_built) return;
        caches_->coface_table.assign(cells_.size(), {});
        for (int d = 0; d <= dimension(); ++d)
            caches_->coface_table[d].assign(cells_[d].size(), {});
        for (int d = 1; d <= dimension(); ++d)
            for (std::size_t j = 0; j < cells_[d].size(); ++j) {
                std::set<int> seen;
                for (auto [i, coeff] : cells_[d][j].boundary)
                    if (seen.insert(i).second)
                        caches_->coface_table[d - 1][i].push_back({d, int(j)});
            }
        caches_->cofaces_built = true;
    }

    std::vector<std::vector<Cell>> cells_;
    std::map<std::string, CellId> index_;
    mutable std::shared_ptr<FaceCaches> caches_ = std::make_shared<FaceCaches>();
};

/// Incremental constructor; cells must be added faces-first.
class CellComplexBuilder {
public:
    void add_cell(int dim, const std::string& name,
                  const std::vector<std::pair<std::string, int>>& boundary = {},
                  const std::string& label = "") {
        if (dim < 0) throw input_error("negative cell dimension");
        if (complex_.index_.count(name)) throw input_error("duplicate cell name: " + name);
        if (complex_.total_cells() >= limits::max_cells())
            throw cap_exceeded("cell budget exceeded");
        while (int(complex_.cells_.size()) <= dim) complex_.cells_.emplace_back();
        Cell c;
        c.name = name;
        c.label = label;
        if (dim == 0 && !boundary.empty())
            throw input_error("0-cell cannot have a boundary");
        for (const auto& [fname, coeff] : boundary) {
            CellId f = complex_.id_of(fname);
            if (f.first != dim - 1)
                throw input_error("boundary of " + name + " references cell " + fname +
                                  " not one dimension lower");
            if (coeff != 0) c.boundary.push_back({f.second, coeff});
        }
        complex_.index_[name] = {dim, int(complex_.cells_[dim].size())};
        complex_.cells_[dim].push_back(std::move(c));
    }

    bool has_cell(const std::string& name) const { return complex_.has_cell(name); }

    CellComplex finalize() {
        complex_.validate();
        return std::move(complex_);
    }

private:
    CellComplex complex_;
};

} // namespace polymir

#endif
