#include "somf/quad_space.h"

#include <cmath>
#include <cstdint>
#include <type_traits>

#include "somf/errors.h"

namespace somf::qs {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_dim(const QuadSpace& sp, std::size_t len) {
    if (len != static_cast<std::size_t>(sp.dim())) throw DimensionMismatch("vector length != dim V");
}

void check_vprime(const QuadSpace& sp, const VecQ& v) {
    check_dim(sp, v.size());
    if (v[idx_e()] != 0 || v[idx_f(sp)] != 0) throw DomainError("vector not in V'");
}

// Scalar c with gram2 = c*I and gramN = c*I, or throws.
Rational scalar_gram(const QuadSpace& sp) {
    Rational c = sp.gram2[0][0];
    auto check = [&](const MatQ& g) {
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[i][j] != (i == j ? c : Rational(0)))
                    throw DomainError("isometry sampling needs scalar gram matrices");
    };
    check(sp.gram2);
    check(sp.gramN);
    return c;
}

template <typename T>
T form_apply(const MatQ& gram, const T* x, const T* y) {
    T acc{};
    for (std::size_t i = 0; i < gram.size(); ++i)
        for (std::size_t j = 0; j < gram.size(); ++j) {
            if (gram[i][j] == 0) continue;
            if constexpr (std::is_same_v<T, Rational>)
                acc += gram[i][j] * x[i] * y[j];
            else
                acc += to_double(gram[i][j]) * x[i] * y[j];
        }
    return acc;
}

// Concrete scalar return types throughout: gmpxx expression templates must
// never escape a statement.
template <typename Vec>
typename Vec::value_type q_of_impl(const QuadSpace& sp, const Vec& v) {
    using S = typename Vec::value_type;
    check_dim(sp, v.size());
    S q2 = form_apply(sp.gram2, &v[idx_v1()], &v[idx_v1()]);
    S qn = form_apply(sp.gramN, &v[idx_u(0)], &v[idx_u(0)]);
    S cross = v[idx_e()] * v[idx_f(sp)];
    return cross + q2 - qn;
}

// (x,y) = x_e y_f + x_f y_e + 2 x2^T G2 y2 - 2 xn^T GN yn.
template <typename Vec>
typename Vec::value_type pair_impl(const QuadSpace& sp, const Vec& x, const Vec& y) {
    using S = typename Vec::value_type;
    check_dim(sp, x.size());
    check_dim(sp, y.size());
    S b2 = form_apply(sp.gram2, &x[idx_v1()], &y[idx_v1()]);
    S bn = form_apply(sp.gramN, &x[idx_u(0)], &y[idx_u(0)]);
    S cross = x[idx_e()] * y[idx_f(sp)];
    cross += x[idx_f(sp)] * y[idx_e()];
    return cross + b2 + b2 - bn - bn;
}

template <typename Vec>
Vec iota_impl(const QuadSpace& sp, Vec v) {
    check_dim(sp, v.size());
    std::swap(v[idx_e()], v[idx_f(sp)]);
    for (int j = 0; j < sp.n; ++j) v[idx_u(j)] = -v[idx_u(j)];
    return v;
}

} // namespace

QuadSpace QuadSpace::standard(int n) {
    if (n < 1) throw DomainError("QuadSpace needs n >= 1");
    return {n, identity_q(2), identity_q(n)};
}

QuadSpace QuadSpace::pair_normalized(int n) {
    QuadSpace sp = standard(n);
    for (auto& row : sp.gram2)
        for (auto& x : row) x /= 2;
    for (auto& row : sp.gramN)
        for (auto& x : row) x /= 2;
    return sp;
}

VecQ zero_vec(const QuadSpace& sp) { return VecQ(sp.dim(), Rational(0)); }

VecQ basis_vec(const QuadSpace& sp, int i) {
    VecQ v = zero_vec(sp);
    v.at(i) = 1;
    return v;
}

Rational q_of(const QuadSpace& sp, const VecQ& v) { return q_of_impl(sp, v); }
double q_of_d(const QuadSpace& sp, const VecD& v) { return q_of_impl(sp, v); }

Rational pair_b(const QuadSpace& sp, const VecQ& x, const VecQ& y) { return pair_impl(sp, x, y); }
double pair_b_d(const QuadSpace& sp, const VecD& x, const VecD& y) { return pair_impl(sp, x, y); }
std::complex<double> pair_b_c(const QuadSpace& sp, const VecC& x, const VecC& y) {
    return pair_impl(sp, x, y);
}

Rational pair_n(const QuadSpace& sp, const VecQ& x, const VecQ& y) {
    return pair_b(sp, x, y) / 2;
}

VecQ iota(const QuadSpace& sp, VecQ v) { return iota_impl(sp, std::move(v)); }
VecD iota_d(const QuadSpace& sp, VecD v) { return iota_impl(sp, std::move(v)); }
VecC iota_c(const QuadSpace& sp, VecC v) { return iota_impl(sp, std::move(v)); }

Rational norm2(const QuadSpace& sp, const VecQ& v) { return pair_b(sp, v, iota(sp, v)); }
double norm2_d(const QuadSpace& sp, const VecD& v) { return pair_b_d(sp, v, iota_d(sp, v)); }

const char* eta_class_name(EtaClass c) {
    switch (c) {
    case EtaClass::Zero: return "Zero";
    case EtaClass::NegativeNorm: return "NegativeNorm";
    case EtaClass::Rank1: return "Rank1";
    case EtaClass::Rank2: return "Rank2";
    }
    return "?";
}

EtaClass classify_eta(const QuadSpace& sp, const VecQ& eta) {
    check_vprime(sp, eta);
    bool zero = true;
    for (const Rational& c : eta)
        if (c != 0) zero = false;
    if (zero) return EtaClass::Zero;
    Rational qp = q_of(sp, eta);
    if (qp < 0) return EtaClass::NegativeNorm;
    if (qp == 0) return EtaClass::Rank1;
    return EtaClass::Rank2;
}

MatQ nx_matrix(const QuadSpace& sp, const VecQ& x) {
    check_vprime(sp, x);
    int d = sp.dim();
    MatQ m = identity_q(d);
    for (int j = 1; j <= sp.n + 2; ++j) {
        m[0][j] = pair_b(sp, x, basis_vec(sp, j));
        m[j][d - 1] = -x[j];
    }
    m[0][d - 1] = -q_of(sp, x);
    return m;
}

namespace {

// Shared projection core: coefficients of v on (v1, v2, e+f) by solving the
// 3x3 gram system, then the change of basis to (x^2, xy, y^2).
ProjV3 proj_from_coeffs(double c1, double c2, double c3) {
    const std::complex<double> i(0.0, 1.0);
    ProjV3 out;
    out.cxx = -(i * c1 + c2) / 2.0;
    out.cyy = (-i * c1 + c2) / 2.0;
    out.cxy = std::sqrt(2.0) * c3;
    return out;
}

} // namespace

ProjV3 proj_v3(const QuadSpace& sp, const VecQ& v) {
    check_dim(sp, v.size());
    VecQ p1 = basis_vec(sp, idx_v1());
    VecQ p2 = basis_vec(sp, idx_v2());
    VecQ p3 = basis_vec(sp, idx_e());
    p3[idx_f(sp)] = 1; // e + f
    MatQ gram = {{pair_b(sp, p1, p1), pair_b(sp, p1, p2), pair_b(sp, p1, p3)},
                 {pair_b(sp, p2, p1), pair_b(sp, p2, p2), pair_b(sp, p2, p3)},
                 {pair_b(sp, p3, p1), pair_b(sp, p3, p2), pair_b(sp, p3, p3)}};
    VecQ rhs = {pair_b(sp, v, p1), pair_b(sp, v, p2), pair_b(sp, v, p3)};
    VecQ c = solve_linear_exact(gram, rhs);
    return proj_from_coeffs(to_double(c[0]), to_double(c[1]), to_double(c[2]));
}

ProjV3 proj_v3_d(const QuadSpace& sp, const VecD& v) {
    check_dim(sp, v.size());
    // Same system as the exact path, with a numeric right-hand side. The gram
    // matrix of (v1, v2, e+f) stays exact.
    VecQ p1 = basis_vec(sp, idx_v1());
    VecQ p2 = basis_vec(sp, idx_v2());
    VecQ p3 = basis_vec(sp, idx_e());
    p3[idx_f(sp)] = 1;
    MatD gram = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    const VecQ* basis[3] = {&p1, &p2, &p3};
    VecD rhs(3);
    for (int i = 0; i < 3; ++i) {
        rhs[i] = pair_b_d(sp, v, to_d(*basis[i]));
        for (int j = 0; j < 3; ++j) gram[i][j] = to_double(pair_b(sp, *basis[i], *basis[j]));
    }
    // Cramer on the positive-definite 3x3 system.
    auto det3 = [](const MatD& m) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    double det = det3(gram);
    if (det == 0.0) throw SingularBasis("projection gram is singular");
    double c[3];
    for (int k = 0; k < 3; ++k) {
        MatD mk = gram;
        for (int i = 0; i < 3; ++i) mk[i][k] = rhs[i];
        c[k] = det3(mk) / det;
    }
    return proj_from_coeffs(c[0], c[1], c[2]);
}

Rational tau2_of_norms(const Rational& nxn2, const Rational& nx22) {
    Rational base = 1 + (nxn2 - nx22) / 4;
    return base * base + nx22;
}

double tau(const QuadSpace& sp, const VecQ& xn, const VecQ& x2) {
    check_vprime(sp, xn);
    check_vprime(sp, x2);
    if (xn[idx_v1()] != 0 || xn[idx_v2()] != 0) throw DomainError("xn must lie in V_n");
    for (int j = 0; j < sp.n; ++j)
        if (x2[idx_u(j)] != 0) throw DomainError("x2 must lie in V_2");
    return std::sqrt(to_double(tau2_of_norms(norm2(sp, xn), norm2(sp, x2))));
}

namespace {

enum class PlaneKind { RotV2, RotUn, Boost };

// Picks a plane and returns (i, j, kind) as coordinate indices into the
// (v1, v2, u_1..u_n) block.
PlaneKind pick_plane(const QuadSpace& sp, Pcg32& rng, int& i, int& j) {
    uint32_t choice = rng.below(sp.n >= 2 ? 3u : 2u);
    if (choice == 0) {
        i = 0;
        j = 1;
        return PlaneKind::RotV2;
    }
    if (choice == 1) {
        i = static_cast<int>(rng.below(2u));
        j = 2 + static_cast<int>(rng.below(static_cast<uint32_t>(sp.n)));
        return PlaneKind::Boost;
    }
    i = 2 + static_cast<int>(rng.below(static_cast<uint32_t>(sp.n)));
    j = 2 + static_cast<int>(rng.below(static_cast<uint32_t>(sp.n)));
    if (j == i) j = 2 + (j - 2 + 1) % sp.n;
    return PlaneKind::RotUn;
}

} // namespace

MatD random_isometry(const QuadSpace& sp, Pcg32& rng, int factors) {
    scalar_gram(sp);
    int d = sp.n + 2;
    MatD m = identity_d(d);
    for (int k = 0; k < factors; ++k) {
        int i = 0, j = 0;
        PlaneKind kind = pick_plane(sp, rng, i, j);
        MatD g = identity_d(d);
        if (kind == PlaneKind::Boost) {
            double t = rng.uniform(-0.8, 0.8);
            g[i][i] = std::cosh(t);
            g[j][j] = std::cosh(t);
            g[i][j] = std::sinh(t);
            g[j][i] = std::sinh(t);
        } else {
            double th = rng.uniform(0.0, 2.0 * kPi);
            g[i][i] = std::cos(th);
            g[j][j] = std::cos(th);
            g[i][j] = -std::sin(th);
            g[j][i] = std::sin(th);
        }
        m = mat_mul(g, m);
    }
    return m;
}

MatQ random_isometry_exact(const QuadSpace& sp, Pcg32& rng, int factors) {
    scalar_gram(sp);
    int d = sp.n + 2;
    MatQ m = identity_q(d);
    for (int k = 0; k < factors; ++k) {
        int i = 0, j = 0;
        PlaneKind kind = pick_plane(sp, rng, i, j);
        MatQ g = identity_q(d);
        // t in [-1/2, 1/2] keeps rational boosts well away from the light cone.
        Rational t = rat(static_cast<long>(rng.below(9)) - 4, 8);
        Rational t2 = t * t;
        if (kind == PlaneKind::Boost) {
            Rational ch = (1 + t2) / (1 - t2), sh = rat(2) * t / (1 - t2);
            g[i][i] = ch;
            g[j][j] = ch;
            g[i][j] = sh;
            g[j][i] = sh;
        } else {
            Rational c = (1 - t2) / (1 + t2), s = rat(2) * t / (1 + t2);
            g[i][i] = c;
            g[j][j] = c;
            g[i][j] = -s;
            g[j][i] = s;
        }
        m = mat_mul(g, m);
    }
    return m;
}

VecQ vprime_coords(const QuadSpace& sp, const VecQ& v) {
    check_vprime(sp, v);
    return VecQ(v.begin() + 1, v.end() - 1);
}

VecQ vprime_vec(const QuadSpace& sp, const VecQ& coords) {
    if (coords.size() != static_cast<std::size_t>(sp.n + 2))
        throw DimensionMismatch("V' coordinate length");
    VecQ v = zero_vec(sp);
    for (int i = 0; i < sp.n + 2; ++i) v[1 + i] = coords[i];
    return v;
}

VecD vprime_vec_d(const QuadSpace& sp, const VecD& coords) {
    if (coords.size() != static_cast<std::size_t>(sp.n + 2))
        throw DimensionMismatch("V' coordinate length");
    VecD v(sp.dim(), 0.0);
    for (int i = 0; i < sp.n + 2; ++i) v[1 + i] = coords[i];
    return v;
}

namespace {

template <typename Mat>
Mat embed_impl(const QuadSpace& sp, const Mat& m) {
    if (m.size() != static_cast<std::size_t>(sp.n + 2)) throw DimensionMismatch("V' matrix size");
    Mat full;
    if constexpr (std::is_same_v<Mat, MatQ>)
        full = identity_q(sp.dim());
    else
        full = identity_d(sp.dim());
    for (int i = 0; i < sp.n + 2; ++i)
        for (int j = 0; j < sp.n + 2; ++j) full[1 + i][1 + j] = m[i][j];
    return full;
}

} // namespace

MatQ embed_vprime(const QuadSpace& sp, const MatQ& m) { return embed_impl(sp, m); }
MatD embed_vprime_d(const QuadSpace& sp, const MatD& m) { return embed_impl(sp, m); }

} // namespace somf::qs
