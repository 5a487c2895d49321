#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sharplab/linear_map.hpp"

namespace sharplab {

inline GaussianRational reciprocal_of(const GaussianRational& s) { return s.reciprocal(); }
inline std::complex<double> reciprocal_of(const std::complex<double>& s) { return 1.0 / s; }

inline std::complex<double> to_c(const GaussianRational& s) { return to_complex(s); }
inline std::complex<double> to_c(const std::complex<double>& s) { return s; }

/// Row rank by Gaussian elimination with largest-|pivot| selection.
/// Exact backend: pivots are nonzero exactly. Float backend: entries below
/// tol * (largest initial magnitude) count as zero.
template <class S>
std::size_t matrix_rank(std::vector<std::vector<S>> m, double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();

    [[maybe_unused]] double cutoff_sq = 0;
    if constexpr (!T::exact) {
        double max_sq = 0;
        for (const auto& row : m)
            for (const auto& e : row) max_sq = std::max(max_sq, T::abs_sq(e));
        if (max_sq == 0) return 0;
        cutoff_sq = tol * tol * max_sq;
    }
    auto negligible = [&](const S& e) {
        if constexpr (T::exact)
            return T::is_zero(e, 0);
        else
            return T::abs_sq(e) <= cutoff_sq;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank + 1; r < rows; ++r)
            if (T::abs_sq(m[r][col]) > T::abs_sq(m[piv][col])) piv = r;
        if (negligible(m[piv][col])) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (negligible(m[r][col])) continue;
            S factor = m[r][col] * reciprocal_of(m[rank][col]);
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = m[r][c] - factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// descending order.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-28) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t k = 0; k < n; ++k) ev[k] = a[k][k];
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

/// Singular values of a complex matrix, descending, via the real symmetric
/// embedding of M^dagger M (whose spectrum doubles; pairs are collapsed).
template <class S>
std::vector<double> singular_values(const LinearMap<S>& m) {
    const std::size_t n = m.cols();
    std::vector<std::vector<std::complex<double>>> h(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> acc = 0;
            for (std::size_t k = 0; k < m.rows(); ++k)
                acc += std::conj(to_c(m.at(k, i))) * to_c(m.at(k, j));
            h[i][j] = acc;
        }
    std::vector<std::vector<double>> r(2 * n, std::vector<double>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r[i][j] = h[i][j].real();
            r[i][j + n] = -h[i][j].imag();
            r[i + n][j] = h[i][j].imag();
            r[i + n][j + n] = h[i][j].real();
        }
    auto ev = symmetric_eigenvalues(std::move(r));
    std::vector<double> sv;
    for (std::size_t k = 0; k < ev.size(); k += 2)
        sv.push_back(std::sqrt(std::max(0.0, ev[k])));
    return sv;
}

}  // namespace sharplab
