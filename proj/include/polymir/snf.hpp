#ifndef POLYMIR_SNF_HPP
#define POLYMIR_SNF_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polymir/base.hpp"

namespace polymir {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithNormalForm {
    std::vector<BigInt> divisors; // nonzero, each dividing the next
    std::size_t rank() const { return divisors.size(); }
};

namespace detail {

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

} // namespace detail

/// Smith normal form over the integers, exact arithmetic.  Pivot choice
/// minimizes |entry| to limit coefficient growth; after diagonalization the
/// divisibility chain d1 | d2 | ... is restored with gcd/lcm passes.
inline SmithNormalForm smith_normal_form(IntMatrix M) {
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    for (const auto& r : M)
        if (r.size() != cols) throw input_error("ragged matrix");

    std::vector<BigInt> diag;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // Find the nonzero entry of minimal absolute value in M[top.., top..].
        std::size_t pi = top, pj = top;
        BigInt best = 0;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j) {
                if (M[i][j] == 0) continue;
                BigInt a = detail::big_abs(M[i][j]);
                if (best == 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (best == 0) break;
        std::swap(M[top], M[pi]);
        for (std::size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][pj]);

        // Reduce column and row against the pivot until both are clear.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < rows; ++i) {
                if (M[i][top] == 0) continue;
                BigInt q = M[i][top] / M[top][top];
                if (q != 0)
                    for (std::size_t j = top; j < cols; ++j) M[i][j] -= q * M[top][j];
                if (M[i][top] != 0) {
                    // Remainder smaller than pivot: swap up and restart.
                    std::swap(M[top], M[i]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t j = top + 1; j < cols; ++j) {
                if (M[top][j] == 0) continue;
                BigInt q = M[top][j] / M[top][top];
                if (q != 0)
                    for (std::size_t i = top; i < rows; ++i) M[i][j] -= q * M[i][top];
                if (M[top][j] != 0) {
                    for (std::size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(detail::big_abs(M[top][top]));
        ++top;
    }

    // Restore the divisibility chain: for each pair (i, j), i < j, replace
    // (a, b) by (gcd(a,b), lcm(a,b)).
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
            if (g == diag[i]) continue;
            BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    return {diag};
}

/// Machine-integer Smith normal form; returns nothing when intermediate
/// values threaten to overflow, in which case the caller falls back to the
/// exact big-integer path.  Prefers +-1 pivots so typical presentation
/// matrices reduce without growth.
inline std::optional<SmithNormalForm> smith_normal_form_i64(
    std::vector<std::vector<long long>> M) {
    constexpr long long kGuard = (1ll << 56);
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    std::vector<long long> diag;
    std::size_t top = 0;
    auto too_big = [&](long long v) { return v > kGuard || v < -kGuard; };
    while (top < rows && top < cols) {
        std::size_t pi = top, pj = top;
        long long best = 0;
        for (std::size_t i = top; i < rows && best != 1; ++i)
            for (std::size_t j = top; j < cols; ++j) {
                long long a = std::llabs(M[i][j]);
                if (a == 0) continue;
                if (best == 0 || a < best) { best = a; pi = i; pj = j; }
                if (best == 1) break;
            }
        if (best == 0) break;
        std::swap(M[top], M[pi]);
        for (std::size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < rows; ++i) {
                if (M[i][top] == 0) continue;
                long long q = M[i][top] / M[top][top];
                if (q != 0)
                    for (std::size_t j = top; j < cols; ++j) {
                        M[i][j] -= q * M[top][j];
                        if (too_big(M[i][j])) return std::nullopt;
                    }
                if (M[i][top] != 0) {
                    std::swap(M[top], M[i]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (std::size_t j = top + 1; j < cols; ++j) {
                if (M[top][j] == 0) continue;
                long long q = M[top][j] / M[top][top];
                if (q != 0)
                    for (std::size_t i = top; i < rows; ++i) {
                        M[i][j] -= q * M[i][top];
                        if (too_big(M[i][j])) return std::nullopt;
                    }
                if (M[top][j] != 0) {
                    for (std::size_t i = top; i < rows; ++i) std::swap(M[i][top], M[i][j]);
                    clean = false;
                }
            }
        }
        diag.push_back(std::llabs(M[top][top]));
        ++top;
    }
    SmithNormalForm out;
    for (long long d : diag) out.divisors.push_back(d);
    for (std::size_t i = 0; i < out.divisors.size(); ++i)
        for (std::size_t j = i + 1; j < out.divisors.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(out.divisors[i], out.divisors[j]);
            if (g == out.divisors[i]) continue;
            BigInt l = out.divisors[i] / g * out.divisors[j];
            out.divisors[i] = g;
            out.divisors[j] = l;
        }
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

/// Rank of an integer matrix (fraction-free elimination).
inline std::size_t integer_rank(IntMatrix M) {
    std::size_t rows = M.size();
    std::size_t cols = rows ? M[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && M[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (M[i][col] == 0) continue;
            BigInt g = boost::multiprecision::gcd(M[rank][col], M[i][col]);
            BigInt a = M[i][col] / g, b = M[rank][col] / g;
            for (std::size_t j = col; j < cols; ++j)
                M[i][j] = b * M[i][j] - a * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace polymir

#endif
