#pragma once

#include <complex>
#include <vector>

#include "somf/errors.h"
#include "somf/rational.h"

namespace somf {

using VecQ = std::vector<Rational>;
using VecD = std::vector<double>;
using VecC = std::vector<std::complex<double>>;
using MatQ = std::vector<VecQ>;
using MatD = std::vector<VecD>;

inline MatQ identity_q(std::size_t n) {
    MatQ m(n, VecQ(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline MatD identity_d(std::size_t n) {
    MatD m(n, VecD(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

template <typename Mat, typename Vec>
Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.empty() || m[0].size() != v.size()) throw DimensionMismatch("mat_vec size");
    Vec out(m.size(), typename Vec::value_type{});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// MatD acting on a complex vector.
inline VecC mat_vec_c(const MatD& m, const VecC& v) {
    if (m.empty() || m[0].size() != v.size()) throw DimensionMismatch("mat_vec size");
    VecC out(m.size(), {0.0, 0.0});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

template <typename Mat>
Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size()) throw DimensionMismatch("mat_mul size");
    Mat out(a.size(), typename Mat::value_type(b[0].size(), typename Mat::value_type::value_type{}));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

template <typename Mat>
Mat mat_transpose(const Mat& a) {
    Mat out(a[0].size(), typename Mat::value_type(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

inline VecD to_d(const VecQ& v) {
    VecD out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

inline MatD to_d(const MatQ& m) {
    MatD out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = to_d(m[i]);
    return out;
}

// Exact Gaussian elimination with partial (nonzero) pivoting.
inline VecQ solve_linear_exact(MatQ a, VecQ b) {
    std::size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n) throw DimensionMismatch("solve_linear size");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw SingularBasis("singular system in exact solve");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    VecQ x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace somf
