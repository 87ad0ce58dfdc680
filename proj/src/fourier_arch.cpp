#include "somf/fourier_arch.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "somf/errors.h"
#include "somf/quad_space.h"
#include "somf/special.h"
#include "somf/vl_schmid.h"

namespace somf::fta {

namespace {

const double kPi = 3.14159265358979323846;
const double kSqrt2 = 1.41421356237309504880;

double fact(long k) {
    double f = 1.0;
    for (long i = 2; i <= k; ++i) f *= static_cast<double>(i);
    return f;
}

double binom(long n, long k) {
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (long i = 0; i < k; ++i) b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return b;
}

Cplx cpow_i(Cplx z, long k) {
    Cplx r(1.0, 0.0);
    for (long i = 0; i < k; ++i) r *= z;
    return r;
}

double dpow_i(double z, long k) {
    double r = 1.0;
    for (long i = 0; i < k; ++i) r *= z;
    return r;
}

} // namespace

XPoint::XPoint(std::vector<double> x2_, std::vector<double> xn_)
    : x2(std::move(x2_)), xn(std::move(xn_)) {
    if (x2.size() != 2) throw DimensionMismatch("XPoint: x2 must have 2 coordinates");
}

double norm2_x2(const XPoint& x) { return x.x2[0] * x.x2[0] + x.x2[1] * x.x2[1]; }

double norm2_xn(const XPoint& x) {
    double s = 0.0;
    for (double c : x.xn) s += c * c;
    return s;
}

Cplx a1_of(const XPoint& x) { return kSqrt2 * Cplx(x.x2[1], x.x2[0]); }

double b1_of(const XPoint& x) { return 0.5 * (norm2_x2(x) - norm2_xn(x) - 2.0); }

double tau_hat(const XPoint& x) {
    double b1 = b1_of(x);
    return std::sqrt(b1 * b1 + 2.0 * norm2_x2(x));
}

double lift_norm2(const XPoint& x) {
    double e2 = norm2_x2(x), en = norm2_xn(x);
    double qp = 0.5 * (e2 - en);
    return 1.0 + qp * qp + e2 + en;
}

PolyXY::PolyXY(long ell_) : ell(ell_) {
    if (ell_ < 0) throw DomainError("PolyXY: ell must be >= 0");
    coeff.assign(static_cast<std::size_t>(2 * ell_ + 1), Cplx(0.0, 0.0));
}

Cplx& PolyXY::at_v(long v) {
    if (std::labs(v) > ell) throw DomainError("PolyXY: |v| <= ell");
    return coeff[static_cast<std::size_t>(ell + v)];
}

const Cplx& PolyXY::at_v(long v) const {
    if (std::labs(v) > ell) throw DomainError("PolyXY: |v| <= ell");
    return coeff[static_cast<std::size_t>(ell + v)];
}

double max_abs(const PolyXY& p) {
    double m = 0.0;
    for (const Cplx& c : p.coeff) m = std::max(m, std::abs(c));
    return m;
}

double max_abs_diff(const PolyXY& p, const PolyXY& q) {
    if (p.ell != q.ell) throw DimensionMismatch("max_abs_diff: degree mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < p.coeff.size(); ++k) m = std::max(m, std::abs(p.coeff[k] - q.coeff[k]));
    return m;
}

PolyXY quadratic_power(Cplx cxx, Cplx cxy, Cplx cyy, long ell) {
    if (ell < 0) throw DomainError("quadratic_power: ell >= 0");
    std::vector<Cplx> acc{Cplx(1.0, 0.0)}; // degree-2k slice, index = x-exponent
    for (long step = 0; step < ell; ++step) {
        std::vector<Cplx> next(acc.size() + 2, Cplx(0.0, 0.0));
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 2] += acc[k] * cxx;
            next[k + 1] += acc[k] * cxy;
            next[k] += acc[k] * cyy;
        }
        acc = std::move(next);
    }
    PolyXY out(ell);
    out.coeff = std::move(acc);
    return out;
}

PolyXY inducing_section(const XPoint& x, long ell, double s) {
    // Projection of the lift to the (v1, v2, e+f) span, as a quadratic:
    //   p(x, y) = -(1 / (2 sqrt2)) (a1 x^2 + 2 b1 xy - a1* y^2).
    Cplx a1 = a1_of(x);
    double b1 = b1_of(x);
    double c = -1.0 / (2.0 * kSqrt2);
    PolyXY p = quadratic_power(c * a1, c * 2.0 * b1, -c * std::conj(a1), ell);
    double denom = std::pow(tau_hat(x), s + static_cast<double>(ell));
    for (Cplx& co : p.coeff) co /= denom;
    return p;
}

double scaled_2f1(long v, long ell, double a2, double b) {
    if (v < 0 || v > ell) throw DomainError("scaled_2f1: need 0 <= v <= ell");
    if (a2 < 0.0) throw DomainError("scaled_2f1: need a2 >= 0");
    // Euler transformation turns the (v-ell)/2 parameter pair into the product
    // (-d/2)_m (-d/2+1/2)_m = (1/4)^m d!/(d-2m)!, which vanishes past m = d/2,
    // so the series below terminates for both parities of d = ell - v.
    long d = ell - v;
    double total = 0.0;
    for (long m = 0; 2 * m <= d; ++m) {
        double t = fact(d) / fact(d - 2 * m);
        t *= dpow_i(0.25, m) / (sf::pochhammer_num(static_cast<double>(v + 1), static_cast<int>(m)) * fact(m));
        t *= (m % 2 == 0 ? 1.0 : -1.0) * dpow_i(a2, m) * dpow_i(b, d - 2 * m);
        total += t;
    }
    return total;
}

Cplx j_closed(long v, const XPoint& x, long ell) {
    if (ell < 0 || std::labs(v) > ell) throw DomainError("j_closed: need |v| <= ell");
    double e2 = norm2_x2(x);
    if (v != 0 && e2 == 0.0)
        throw PhaseUndefined("j_closed: phase of (x2, iv1+v2) needs x2 != 0 when v != 0");
    long av = std::labs(v);
    // The radial factor is the terminating polynomial at b = -b1. Where
    // ||x_2|| + ||x_n|| < sqrt2 one has b1 < 0, so this is the positive-b
    // hypergeometric form there; being a polynomial, it is also the analytic
    // continuation of the transform integral to every other x (taking |b1|
    // instead flips the odd ell - v slots once b1 turns positive).
    double s = scaled_2f1(av, ell, 2.0 * e2, -b1_of(x));
    Cplx a1 = a1_of(x);
    // v >= 0 carries (-a1)^v; the v < 0 rule (-a1*/a1)^{|v|} J_{|v|} collapses
    // to (a1*)^{|v|} against the same radial factor.
    Cplx ph = (v >= 0) ? cpow_i(-a1, av) : cpow_i(std::conj(a1), av);
    return dpow_i(2.0, ell - av) * binom(ell, av) * ph * s;
}

namespace {

void check_vn(long ell, long n, const char* who) {
    if (n < 1) throw DomainError(std::string(who) + ": need n >= 1");
    if (2 * ell < n) throw DomainError(std::string(who) + ": need ell >= n/2");
}

} // namespace

Cplx iv_closed(long v, const XPoint& x, long ell, long n) {
    check_vn(ell, n, "iv_closed");
    if (x.n() != n) throw DimensionMismatch("iv_closed: xn size != n");
    double tau = tau_hat(x);
    double norm = fact(ell + v) * fact(ell - v) * std::pow(kPi, 0.5 * (n + 2)) *
                  sf::gamma_real(static_cast<double>(ell) - 0.5 * n + 1.0) /
                  (fact(ell) * std::pow(tau, 2.0 * ell + 1.0));
    return j_closed(v, x, ell) * norm;
}

Cplx iv_appell(long v, const XPoint& x, long ell, long n, int order, double* tail_abs) {
    check_vn(ell, n, "iv_appell");
    if (x.n() != n) throw DimensionMismatch("iv_appell: xn size != n");
    if (v < 0) throw DomainError("iv_appell: stated for v >= 0; mirror the v2-coordinate for v < 0");
    if (v > ell) throw DomainError("iv_appell: need v <= ell");
    double e2 = norm2_x2(x), en = norm2_xn(x);
    if (v != 0 && e2 == 0.0)
        throw PhaseUndefined("iv_appell: phase of (x2, iv1+v2) needs x2 != 0 when v != 0");
    Cplx w = a1_of(x) / kSqrt2; // (x2, i v1 + v2)
    Cplx pref = std::pow(2.0 * kPi, 0.5 * (n + 2)) *
                std::pow(2.0, static_cast<double>(ell) - 0.5 * (n + v + 2)) * cpow_i(-w, v) *
                fact(ell + v) * sf::gamma_real(static_cast<double>(ell) - 0.5 * n + 1.0) / fact(v);
    sf::F4Partial f4 = sf::appell_f4_partial(ell + 1.0, ell + 1.0 + v, ell + 1.0, v + 1.0,
                                             -0.5 * en, -0.5 * e2, order);
    if (tail_abs) *tail_abs = std::abs(pref) * f4.tail_bound;
    return pref * f4.value;
}

Cplx iv_quadrature(long v, const XPoint& x, long ell, long n, double tol) {
    check_vn(ell, n, "iv_quadrature");
    if (x.n() != n) throw DimensionMismatch("iv_quadrature: xn size != n");
    if (std::labs(v) > ell) throw DomainError("iv_quadrature: need |v| <= ell");
    if (!(tol > 0.0)) throw DomainError("iv_quadrature: tol must be positive");
    if (v < 0) {
        // I_{-v}(x) = I_v(x with the v2-coordinate negated).
        XPoint mirrored({x.x2[0], -x.x2[1]}, x.xn);
        return iv_quadrature(-v, mirrored, ell, n, tol);
    }
    double e2 = norm2_x2(x), en = norm2_xn(x);
    if (v != 0 && e2 == 0.0)
        throw PhaseUndefined("iv_quadrature: phase of (x2, iv1+v2) needs x2 != 0 when v != 0");
    double nx2 = std::sqrt(e2), nxn = std::sqrt(en);
    double a = static_cast<double>(ell) - 0.5 * n; // t-exponent is a + n/2 + 1 = ell + 1
    double pref_mag = std::pow(2.0 * kPi, 0.5 * (n + 2)) * std::pow(2.0, a) * sf::gamma_real(a + 1.0);

    // ||x_n||^{-ell} J_ell(||x_n|| t), continued to ||x_n|| = 0 by the series
    // leading term; the product is what the reduction produces.
    auto radial_n = [&](double t) {
        if (nxn > 0.0) return std::pow(nxn, -static_cast<double>(ell)) * sf::bessel_j(static_cast<double>(ell), nxn * t);
        return std::pow(0.5 * t, static_cast<double>(ell)) / fact(ell);
    };
    auto f = [&](double t) {
        if (t < 1e-14) return 0.0;
        return std::pow(t, static_cast<double>(ell) + 1.0) * radial_n(t) *
               sf::bessel_j(static_cast<double>(v), nx2 * t) * sf::bessel_k(static_cast<int>(v), kSqrt2 * t);
    };
    // K_v(sqrt2 t) beats the polynomial growth; cut where the envelope is
    // far below the requested tolerance.
    double cut = 24.0;
    while (cut < 240.0 && std::pow(cut, static_cast<double>(ell) + 1.0) * std::exp(-kSqrt2 * cut) > tol * 1e-6)
        cut += 8.0;
    double val = sf::integrate(f, 0.0, cut, tol / pref_mag);

    Cplx phase(1.0, 0.0);
    if (v != 0) {
        Cplx w2(-x.x2[1], x.x2[0]); // (x2, i v1 - v2)
        phase = cpow_i(std::abs(w2) / w2, v);
    }
    return pref_mag * phase * val;
}

double poly_identity_2f1sum(long ell, Cplx a, double b) {
    if (ell < 0 || ell % 2 != 0) throw DomainError("poly_identity_2f1sum: ell must be even and >= 0");
    if (!(b > 0.0)) throw DomainError("poly_identity_2f1sum: need b > 0");
    PolyXY lhs = quadratic_power(a, 2.0 * b, -std::conj(a), ell);
    PolyXY rhs(ell);
    double a2 = std::norm(a);
    for (long v = 0; v <= ell; ++v) {
        double half = (v == 0) ? 0.5 : 1.0;
        double c = binom(ell, v) * dpow_i(2.0, ell - v) * half * scaled_2f1(v, ell, a2, b);
        rhs.at_v(v) += c * cpow_i(a, v);                 // (xy)^{ell-v} x^{2v}
        rhs.at_v(-v) += c * cpow_i(-std::conj(a), v);    // (xy)^{ell-v} y^{2v}
    }
    return max_abs_diff(lhs, rhs);
}

double ftrank2_identity(const XPoint& x, long ell, long n) {
    check_vn(ell, n, "ftrank2_identity");
    // The two-sided polynomial expansion behind the right-hand side is an
    // even-degree statement; at odd ell the v = 0 slot comes out with the
    // opposite sign and the identity genuinely fails.
    if (ell % 2 != 0) throw DomainError("ftrank2_identity: ell must be even");
    double pref = fact(ell) * std::pow(kPi, -0.5 * (n + 2)) /
                  sf::gamma_real(static_cast<double>(ell) - 0.5 * n + 1.0);
    bool x2_zero = (norm2_x2(x) == 0.0);
    PolyXY lhs(ell);
    for (long v = -ell; v <= ell; ++v) {
        // At x2 = 0 every v != 0 slot carries the factor (x2, iv1+v2)^|v| = 0.
        if (x2_zero && v != 0) continue;
        lhs.at_v(v) = pref * iv_closed(v, x, ell, n) / (fact(ell + v) * fact(ell - v));
    }
    PolyXY rhs = inducing_section(x, ell, static_cast<double>(ell) + 1.0);
    double scale = dpow_i(-2.0 * kSqrt2, ell);
    for (Cplx& c : rhs.coeff) c *= scale;
    return max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(rhs));
}

Cplx transform_slot(long v, const VecD& omega, long ell, long n) {
    check_vn(ell, n, "transform_slot");
    if (std::labs(v) > ell) throw DomainError("transform_slot: need |v| <= ell");
    if (omega.size() != static_cast<std::size_t>(n + 2))
        throw DimensionMismatch("transform_slot: omega must have n + 2 coordinates");
    qs::QuadSpace sp = qs::QuadSpace::pair_normalized(static_cast<int>(n));
    double q = vl::qprime_vp(sp, omega);
    if (q <= 0.0) return Cplx(0.0, 0.0); // transform supported on q' > 0
    Cplx w(2.0 * kPi * omega[0], 2.0 * kPi * omega[1]); // (2 pi omega, v1 + i v2)
    Cplx phase = cpow_i(-std::abs(w) / w, std::labs(v));
    if (v < 0) phase = Cplx(1.0, 0.0) / phase; // unit modulus, so this is (-|w|/w)^v
    double qpow = std::pow(4.0 * kPi * kPi * q, static_cast<double>(ell) - 0.5 * n);
    double kv = sf::bessel_k(static_cast<int>(std::labs(v)), kSqrt2 * std::abs(w));
    Cplx gv = qpow * phase * kv;
    double cpref = fact(ell) * std::pow(2.0 * kPi, static_cast<double>(n + 2)) /
                   (sf::gamma_real(static_cast<double>(ell) - 0.5 * n + 1.0) *
                    std::pow(kPi, 0.5 * (n + 2)) * dpow_i(-2.0 * kSqrt2, ell));
    return cpref * gv;
}

Rational rationalize(double x, long max_den, double tol) {
    if (!std::isfinite(x)) throw RationalizationFailed("rationalize: non-finite input");
    if (max_den < 1) throw DomainError("rationalize: max_den >= 1");
    // Continued-fraction convergents p/q, q increasing.
    double rem = x;
    long p0 = 1, q0 = 0;
    long p1 = static_cast<long>(std::floor(rem)), q1 = 1;
    rem -= std::floor(rem);
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
            return rat(p1, q1);
        if (rem < 1e-18) break;
        rem = 1.0 / rem;
        double fl = std::floor(rem);
        if (fl > 4e18) break;
        long ai = static_cast<long>(fl);
        rem -= fl;
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den || q2 < q1) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    if (q1 <= max_den && std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= tol)
        return rat(p1, q1);
    throw RationalizationFailed("rationalize: no p/q within tolerance under the denominator bound");
}

Rational extract_cln(long ell, long n) {
    check_vn(ell, n, "extract_cln");
    qs::QuadSpace sp = qs::QuadSpace::pair_normalized(static_cast<int>(n));
    vl::MPoint base = vl::make_mpoint(sp, 1.0, identity_d(static_cast<std::size_t>(n + 2)));

    // Deterministic omega sample with q' > 0; the last is a rescaling of the
    // first, so constancy across the list includes the scaling consistency.
    std::vector<std::array<double, 2>> heads = {
        {0.9, 0.2}, {0.5, -0.7}, {1.1, 0.4}, {-0.6, 0.8}, {1.8, 0.4}};
    std::vector<double> tails = {0.20, 0.15, 0.25, 0.18, 0.40};
    std::vector<Cplx> ratios;
    for (std::size_t k = 0; k < heads.size(); ++k) {
        VecD omega(static_cast<std::size_t>(n + 2), 0.0);
        omega[0] = heads[k][0];
        omega[1] = heads[k][1];
        for (long j = 0; j < n; ++j)
            omega[static_cast<std::size_t>(2 + j)] =
                tails[k] / std::sqrt(static_cast<double>(n)) * (j % 2 == 0 ? 1.0 : -1.0) * (1.0 + 0.05 * j);
        double q = vl::qprime_vp(sp, omega);
        VecD eta(omega);
        for (double& c : eta) c *= 2.0 * kPi;
        vl::VlVector wv = vl::whittaker_w(sp, eta, base, static_cast<int>(ell));
        double dpref = std::pow(2.0 * kPi, 2.0 * ell + 2.0 - 0.5 * (n + 2)) *
                       std::pow(q, static_cast<double>(ell) - 0.5 * n);
        for (long v = -ell; v <= ell; ++v) {
            Cplx den = dpref * wv.at(static_cast<int>(v));
            if (std::abs(den) < 1e-280) continue;
            ratios.push_back(transform_slot(v, omega, ell, n) / den);
        }
    }
    if (ratios.empty()) throw NotConstant("extract_cln: no usable slots");
    Cplx mean(0.0, 0.0);
    for (const Cplx& r : ratios) mean += r;
    mean /= static_cast<double>(ratios.size());
    double scale = std::max(1.0, std::abs(mean));
    for (const Cplx& r : ratios)
        if (std::abs(r - mean) > 1e-6 * scale)
            throw NotConstant("extract_cln: transform/Whittaker ratio varies across omega or slots");
    if (std::abs(mean.imag()) > 1e-8 * scale)
        throw NotConstant("extract_cln: ratio has a non-real part");
    return rationalize(mean.real(), 1000000, 1e-6 * scale);
}

double beta_check(long dim_u, double s) {
    if (dim_u < 1) throw DomainError("beta_check: dimU >= 1");
    if (!std::isfinite(s)) throw DomainError("beta_check: s must be finite");
    double half_d = 0.5 * static_cast<double>(dim_u);
    // The u -> infinity tail decays like u^{-(s - d/2)}; rates at or below 1/2
    // are divergent or too slow for the advertised quadrature accuracy. The
    // (dimU, s) = (1, 1) case sits exactly on this boundary.
    if (s - half_d <= 0.5 + 1e-12)
        throw ConvergenceError("beta_check: need s - dimU/2 > 1/2 for a computable tail");
    auto softplus = [](double t) {
        return (t > 0.0) ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
    };
    auto f = [&](double t) { return std::exp(half_d * t - s * softplus(t)); };
    double l_left = 80.0 / static_cast<double>(dim_u) + 10.0;
    double l_right = 40.0 / (s - half_d) + 10.0;
    double quad = sf::integrate(f, -l_left, l_right, 1e-12);
    double exact = sf::gamma_real(half_d) * sf::gamma_real(s - half_d) / sf::gamma_real(s);
    return std::abs(quad - exact) / std::abs(exact);
}

} // namespace somf::fta
