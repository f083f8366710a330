#ifndef POLYMIR_HOMOLOGY_HPP
#define POLYMIR_HOMOLOGY_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "polymir/cell_complex.hpp"
#include "polymir/simplicial.hpp"
#include "polymir/snf.hpp"

namespace polymir {

/// Integer homology: Betti numbers and elementary divisors per degree.
struct HomologyProfile {
    std::vector<long long> betti;
    std::vector<std::vector<BigInt>> torsion; // divisors > 1, per degree

    bool operator==(const HomologyProfile& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    bool operator!=(const HomologyProfile& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        os << "betti [";
        for (std::size_t i = 0; i < betti.size(); ++i)
            os << (i ? "," : "") << betti[i];
        os << "]";
        bool any = false;
        for (const auto& t : torsion) any = any || !t.empty();
        if (any) {
            os << " torsion [";
            for (std::size_t i = 0; i < torsion.size(); ++i) {
                os << (i ? ";" : "") << "";
                for (std::size_t j = 0; j < torsion[i].size(); ++j)
                    os << (j ? "," : "") << torsion[i][j];
            }
            os << "]";
        }
        return os.str();
    }
};

inline std::string simplex_cell_name(const Simplex& s) {
    std::string name;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) name += '.';
        name += std::to_string(s[i]);
    }
    return name;
}

/// One cell per nonempty simplex; boundary with alternating signs on the
/// sorted vertex order.
inline CellComplex chain_complex_of_simplicial(const SimplicialComplex& L) {
    CellComplexBuilder b;
    std::vector<Simplex> by_dim(L.simplices().begin(), L.simplices().end());
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (const auto& s : by_dim) {
        std::vector<std::pair<std::string, int>> boundary;
        if (s.size() > 1) {
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex f = s;
                f.erase(f.begin() + k);
                boundary.push_back({simplex_cell_name(f), k % 2 == 0 ? 1 : -1});
            }
        }
        b.add_cell(int(s.size()) - 1, simplex_cell_name(s), boundary);
    }
    return b.finalize();
}

/// Exact integer homology via Smith normal form of the boundary matrices.
/// With reduced=true, one Z is removed from degree 0 of a nonempty complex.
inline HomologyProfile homology(const CellComplex& C, bool reduced = false) {
    HomologyProfile out;
    int dim = C.dimension();
    if (dim < 0) return out;
    std::vector<std::size_t> rank(dim + 2, 0);
    std::vector<std::vector<BigInt>> tors(dim + 1);
    for (int d = 1; d <= dim; ++d) {
        SmithNormalForm snf = smith_normal_form(C.boundary_matrix(d));
        rank[d] = snf.rank();
        for (const auto& e : snf.divisors)
            if (e > 1) tors[d - 1].push_back(e);
    }
    out.betti.resize(dim + 1);
    out.torsion = std::move(tors);
    for (int d = 0; d <= dim; ++d)
        out.betti[d] = (long long)C.cell_count(d) - (long long)rank[d] - (long long)rank[d + 1];
    if (reduced && C.total_cells() > 0) out.betti[0] -= 1;
    return out;
}

inline HomologyProfile homology(const SimplicialComplex& L, bool reduced = false) {
    return homology(chain_complex_of_simplicial(L), reduced);
}

inline long long euler_characteristic(const CellComplex& C) {
    return C.euler_characteristic();
}

inline long long euler_characteristic(const SimplicialComplex& L) {
    long long chi = 0;
    for (const auto& s : L.simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

/// All reduced Betti numbers zero and no torsion.  The empty complex is not
/// acyclic (it has reduced homology in degree -1).
inline bool is_acyclic(const CellComplex& C) {
    if (C.total_cells() == 0) return false;
    HomologyProfile h = homology(C, true);
    for (long long b : h.betti)
        if (b != 0) return false;
    for (const auto& t : h.torsion)
        if (!t.empty()) return false;
    return true;
}

/// Reduced homology concentrated in degree n with a single free generator.
inline bool is_homology_sphere_profile(const CellComplex& C, int n) {
    if (n < 0) return C.total_cells() == 0 && n == -1;
    if (C.total_cells() == 0) return false;
    HomologyProfile h = homology(C, true);
    for (const auto& t : h.torsion)
        if (!t.empty()) return false;
    if (n >= int(h.betti.size())) return false;
    for (int d = 0; d < int(h.betti.size()); ++d)
        if (h.betti[d] != (d == n ? 1 : 0)) return false;
    return true;
}

} // namespace polymir

#endif
