#include "somf/vl_schmid.h"

#include <cmath>
#include <cstdlib>

#include "somf/errors.h"
#include "somf/rng.h"
#include "somf/special.h"

namespace somf::vl {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
const Cplx kI(0.0, 1.0);

void check_vp_dim(const qs::QuadSpace& sp, std::size_t got) {
    if (got != static_cast<std::size_t>(sp.n + 2))
        throw DimensionMismatch("V' coordinate vector has wrong length");
}

// Bilinear form value x^T g y for a dense rational gram, in doubles.
double gram_apply_d(const MatQ& g, const double* x, const double* y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) acc += to_double(g[i][j]) * x[i] * y[j];
    return acc;
}

Cplx gram_apply_c(const MatQ& g, const Cplx* x, const Cplx* y) {
    Cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) acc += to_double(g[i][j]) * x[i] * y[j];
    return acc;
}

MatD mat_inverse_d(MatD a) {
    std::size_t n = a.size();
    MatD inv = identity_d(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) throw SingularBasis("singular matrix in inverse");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        double d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0.0) continue;
            double f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

double pair_vp(const qs::QuadSpace& sp, const VecD& x, const VecD& y) {
    check_vp_dim(sp, x.size());
    check_vp_dim(sp, y.size());
    double b2 = gram_apply_d(sp.gram2, &x[0], &y[0]);
    double bn = sp.n > 0 ? gram_apply_d(sp.gramN, &x[2], &y[2]) : 0.0;
    return 2.0 * (b2 - bn);
}

Cplx pair_vp_c(const qs::QuadSpace& sp, const VecC& x, const VecC& y) {
    check_vp_dim(sp, x.size());
    check_vp_dim(sp, y.size());
    Cplx b2 = gram_apply_c(sp.gram2, &x[0], &y[0]);
    Cplx bn = sp.n > 0 ? gram_apply_c(sp.gramN, &x[2], &y[2]) : Cplx(0.0, 0.0);
    return 2.0 * (b2 - bn);
}

double qprime_vp(const qs::QuadSpace& sp, const VecD& x) {
    check_vp_dim(sp, x.size());
    double q2 = gram_apply_d(sp.gram2, &x[0], &x[0]);
    double qn = sp.n > 0 ? gram_apply_d(sp.gramN, &x[2], &x[2]) : 0.0;
    return q2 - qn;
}

VecD vp_basis(const qs::QuadSpace& sp, int i) {
    if (i < 0 || i >= sp.n + 2) throw DomainError("V' basis index out of range");
    VecD v(sp.n + 2, 0.0);
    v[i] = 1.0;
    return v;
}

VlVector::VlVector(int ell_) : ell(ell_), coeffs(2 * ell_ + 1, Cplx(0.0, 0.0)) {
    if (ell_ < 1) throw DomainError("weight must be >= 1");
}

Cplx& VlVector::at(int v) {
    if (v < -ell || v > ell) throw DomainError("slot index out of range");
    return coeffs[ell + v];
}

const Cplx& VlVector::at(int v) const {
    if (v < -ell || v > ell) throw DomainError("slot index out of range");
    return coeffs[ell + v];
}

Cplx VlVector::at_or_zero(int v) const {
    if (v < -ell || v > ell) return Cplx(0.0, 0.0);
    return coeffs[ell + v];
}

VlVector& VlVector::operator+=(const VlVector& o) {
    if (o.ell != ell) throw DimensionMismatch("weight mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

VlVector& VlVector::operator-=(const VlVector& o) {
    if (o.ell != ell) throw DimensionMismatch("weight mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

VlVector& VlVector::operator*=(Cplx c) {
    for (auto& w : coeffs) w *= c;
    return *this;
}

VlVector operator+(VlVector a, const VlVector& b) { return a += b; }
VlVector operator-(VlVector a, const VlVector& b) { return a -= b; }
VlVector operator*(Cplx c, VlVector a) { return a *= c; }

double max_abs(const VlVector& w) {
    double m = 0.0;
    for (const auto& c : w.coeffs) m = std::max(m, std::abs(c));
    return m;
}

VlVector km_eps(const VlVector& w) {
    VlVector out = w;
    for (int v = -w.ell; v <= w.ell; ++v)
        if ((w.ell + v) % 2 != 0) out.at(v) = -out.at(v);
    return out;
}

VlVector km_rot(Cplx z, const VlVector& w) {
    VlVector out = w;
    for (int v = -w.ell; v <= w.ell; ++v) out.at(v) *= std::pow(z, v);
    return out;
}

VlVector km_eps_prime(const VlVector& w) {
    VlVector out(w.ell);
    for (int v = -w.ell; v <= w.ell; ++v) out.at(v) = w.at(-v);
    return out;
}

MatD rot_v2_matrix(const qs::QuadSpace& sp, double theta) {
    MatD m = identity_d(sp.n + 2);
    m[0][0] = std::cos(theta);
    m[0][1] = -std::sin(theta);
    m[1][0] = std::sin(theta);
    m[1][1] = std::cos(theta);
    return m;
}

MatD rot_un_matrix(const qs::QuadSpace& sp, int j1, int j2, double theta) {
    if (j1 < 0 || j2 < 0 || j1 >= sp.n || j2 >= sp.n || j1 == j2)
        throw DomainError("u-plane rotation needs two distinct u indices");
    MatD m = identity_d(sp.n + 2);
    int a = 2 + j1, b = 2 + j2;
    m[a][a] = std::cos(theta);
    m[a][b] = -std::sin(theta);
    m[b][a] = std::sin(theta);
    m[b][b] = std::cos(theta);
    return m;
}

MatD eps_prime_matrix(const qs::QuadSpace& sp) {
    if (sp.n < 1) throw DomainError("eps' needs at least one u direction");
    MatD m = identity_d(sp.n + 2);
    m[1][1] = -1.0;
    m[sp.n + 1][sp.n + 1] = -1.0;
    return m;
}

MPoint make_mpoint(const qs::QuadSpace& sp, double t, MatD m) {
    if (t == 0.0 || !std::isfinite(t)) throw DomainError("t must be nonzero and finite");
    check_vp_dim(sp, m.size());
    int d = sp.n + 2;
    // Columns of m are images of the basis; compare pairings against the gram.
    std::vector<VecD> cols(d, VecD(d));
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) cols[j][i] = m[i][j];
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            double want = pair_vp(sp, vp_basis(sp, i), vp_basis(sp, j));
            double got = pair_vp(sp, cols[i], cols[j]);
            if (std::abs(got - want) > 1e-10)
                throw DomainError("m does not preserve the V' form");
        }
    }
    return MPoint{t, std::move(m)};
}

Cplx u_eta(const qs::QuadSpace& sp, const VecD& eta, double t, const MatD& m) {
    check_vp_dim(sp, eta.size());
    VecD mv1 = mat_vec(m, vp_basis(sp, 0));
    VecD mv2 = mat_vec(m, vp_basis(sp, 1));
    Cplx z = kI * pair_vp(sp, eta, mv1) - pair_vp(sp, eta, mv2);
    return kSqrt2 * t * kI * z;
}

VlVector whittaker_w(const qs::QuadSpace& sp, const VecD& eta, const MPoint& p, int ell) {
    check_vp_dim(sp, eta.size());
    double scale = 0.0;
    for (double c : eta) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw EtaNotAdmissible("eta = 0");
    if (qprime_vp(sp, eta) < -1e-12 * scale * scale)
        throw EtaNotAdmissible("q'(eta) < 0");
    Cplx u = u_eta(sp, eta, p.t, p.m);
    double au = std::abs(u);
    if (au < 1e-12 * scale * std::abs(p.t))
        throw DegeneratePoint("u_eta vanishes at this point");
    Cplx phase = au / u;
    double front = std::pow(p.t, ell) * std::abs(p.t);
    VlVector out(ell);
    for (int v = -ell; v <= ell; ++v)
        out.at(v) = front * std::pow(phase, v) * sf::bessel_k(std::abs(v), au);
    return out;
}

int SchmidOutput::slot(int ell, int v) {
    if (v < -ell + 1 || v > ell) throw DomainError("output slot out of range");
    return v + ell - 1;
}

Cplx SchmidOutput::y_um_at(int v) const { return y_um[slot(ell, v)]; }
Cplx SchmidOutput::x_um_at(int v) const { return x_um[slot(ell, v)]; }
Cplx SchmidOutput::y_uj_at(int j, int v) const { return y_uj[j][slot(ell, v)]; }
Cplx SchmidOutput::x_uj_at(int j, int v) const { return x_uj[j][slot(ell, v)]; }

double max_abs(const SchmidOutput& o) {
    double m = 0.0;
    for (const auto& c : o.y_um) m = std::max(m, std::abs(c));
    for (const auto& c : o.x_um) m = std::max(m, std::abs(c));
    for (const auto& fam : {o.y_uj, o.x_uj})
        for (const auto& row : fam)
            for (const auto& c : row) m = std::max(m, std::abs(c));
    return m;
}

MatD wedge_matrix(const qs::QuadSpace& sp, const VecD& a, const VecD& b) {
    check_vp_dim(sp, a.size());
    check_vp_dim(sp, b.size());
    int d = sp.n + 2;
    MatD x(d, VecD(d, 0.0));
    for (int col = 0; col < d; ++col) {
        VecD e = vp_basis(sp, col);
        double pb = pair_vp(sp, b, e);
        double pa = pair_vp(sp, a, e);
        for (int row = 0; row < d; ++row) x[row][col] = pb * a[row] - pa * b[row];
    }
    return x;
}

MatD exp_so(const MatD& x, double lambda) {
    std::size_t d = x.size();
    MatD a(d, VecD(d));
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            a[i][j] = lambda * x[i][j];
            row += std::abs(a[i][j]);
        }
        norm = std::max(norm, row);
    }
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    double div = std::ldexp(1.0, squarings);
    for (auto& row : a)
        for (auto& e : row) e /= div;
    MatD result = identity_d(d);
    MatD term = identity_d(d);
    for (int k = 1; k <= 16; ++k) {
        term = mat_mul(term, a);
        for (auto& row : term)
            for (auto& e : row) e /= k;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) result[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) result = mat_mul(result, result);
    return result;
}

namespace {

// Richardson-extrapolated central difference of a VlVector-valued path.
VlVector richardson(const std::function<VlVector(double)>& path, double h) {
    VlVector d1 = (0.5 / h) * (path(h) - path(-h));
    VlVector d2 = (1.0 / h) * (path(h / 2.0) - path(-h / 2.0));
    return (1.0 / 3.0) * (4.0 * d2 - d1);
}

VlVector guarded_eval(const VlFunction& f, const VecD& x, double t, const MatD& m) {
    try {
        return f(x, t, m);
    } catch (const std::exception& e) {
        throw StencilFailure(e.what());
    }
}

VecD axpy(const VecD& x, double lambda, const VecD& dir) {
    VecD out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += lambda * dir[i];
    return out;
}

} // namespace

SchmidOutput schmid_apply(const qs::QuadSpace& sp, const VlFunction& F, int ell,
                          const VecD& x0, const MPoint& p, double h) {
    check_vp_dim(sp, x0.size());
    if (h <= 0.0) throw DomainError("step must be positive");
    int n = sp.n;
    double t = p.t;
    const MatD& m = p.m;

    VlVector base = guarded_eval(F, x0, t, m);
    if (base.ell != ell) throw DimensionMismatch("sampled function has wrong weight");

    VecD mv1 = mat_vec(m, vp_basis(sp, 0));
    VecD mv2 = mat_vec(m, vp_basis(sp, 1));

    auto ddir = [&](const VecD& dir) {
        return richardson([&](double lm) { return guarded_eval(F, axpy(x0, lm, dir), t, m); }, h);
    };
    VlVector dv1 = ddir(mv1);
    VlVector dv2 = ddir(mv2);
    std::vector<VlVector> duj;
    duj.reserve(n);
    for (int j = 0; j < n; ++j) duj.push_back(ddir(mat_vec(m, vp_basis(sp, 2 + j))));

    VlVector tdt = t * richardson([&](double lm) { return guarded_eval(F, x0, t + lm, m); }, h);

    auto dm = [&](const MatD& gen) {
        return richardson(
            [&](double lm) { return guarded_eval(F, x0, t, mat_mul(m, exp_so(gen, lm))); }, h);
    };
    std::vector<VlVector> dm_r, dm_s;
    dm_r.reserve(n);
    dm_s.reserve(n);
    for (int j = 0; j < n; ++j) {
        dm_r.push_back(dm(wedge_matrix(sp, vp_basis(sp, 0), vp_basis(sp, 2 + j))));
        dm_s.push_back(dm(wedge_matrix(sp, vp_basis(sp, 1), vp_basis(sp, 2 + j))));
    }

    // Complexified directions: m(iv1 -+ v2) and (iv1 -+ v2) wedge u_j.
    VlVector dminus = t * (kI * dv1 - dv2);
    VlVector dplus = t * (kI * dv1 + dv2);

    SchmidOutput out;
    out.ell = ell;
    out.n = n;
    out.y_um.assign(2 * ell, Cplx(0.0, 0.0));
    out.x_um.assign(2 * ell, Cplx(0.0, 0.0));
    out.y_uj.assign(n, std::vector<Cplx>(2 * ell, Cplx(0.0, 0.0)));
    out.x_uj.assign(n, std::vector<Cplx>(2 * ell, Cplx(0.0, 0.0)));
    for (int v = -ell + 1; v <= ell; ++v) {
        int s = SchmidOutput::slot(ell, v);
        out.y_um[s] = 2.0 * dminus.at(v) - kSqrt2 * (ell + v) * base.at(v - 1) +
                      kSqrt2 * tdt.at(v - 1);
        out.x_um[s] = -kSqrt2 * tdt.at(v) - 2.0 * dplus.at(v - 1) +
                      kSqrt2 * (ell - v + 1) * base.at(v);
        for (int j = 0; j < n; ++j) {
            VlVector dmm = kI * dm_r[j] - dm_s[j];
            VlVector dmp = kI * dm_r[j] + dm_s[j];
            out.y_uj[j][s] = -dmm.at(v) - kSqrt2 * t * duj[j].at(v - 1);
            out.x_uj[j][s] = kSqrt2 * t * duj[j].at(v) + dmp.at(v - 1);
        }
    }
    return out;
}

double whittaker_residuals_fn(const qs::QuadSpace& sp, const VecD& eta, int ell,
                              const WFunction& F, const std::vector<MPoint>& samples,
                              double h) {
    check_vp_dim(sp, eta.size());
    if (h <= 0.0) throw DomainError("step must be positive");
    VlFunction lifted = [&](const VecD&, double t, const MatD& m) { return F(t, m); };
    double worst = 0.0;
    for (const auto& p : samples) {
        double t = p.t;
        const MatD& m = p.m;
        VlVector base = guarded_eval(lifted, VecD(sp.n + 2, 0.0), t, m);
        if (base.ell != ell) throw DimensionMismatch("sampled function has wrong weight");
        VlVector tdt =
            t * richardson([&](double lm) { return guarded_eval(lifted, VecD(sp.n + 2, 0.0), t + lm, m); }, h);
        Cplx u = u_eta(sp, eta, t, m);
        double scale = std::max(max_abs(base), 1e-300);

        std::vector<Cplx> etamuj(sp.n);
        for (int j = 0; j < sp.n; ++j)
            etamuj[j] = pair_vp(sp, eta, mat_vec(m, vp_basis(sp, 2 + j)));

        auto dm = [&](const MatD& gen) {
            return richardson(
                [&](double lm) {
                    return guarded_eval(lifted, VecD(sp.n + 2, 0.0), t, mat_mul(m, exp_so(gen, lm)));
                },
                h);
        };
        for (int v = -ell + 1; v <= ell; ++v) {
            Cplx r1 = tdt.at(v - 1) - static_cast<double>(ell + v) * base.at(v - 1) + u * base.at(v);
            Cplx r2 = tdt.at(v) - static_cast<double>(ell - v + 1) * base.at(v) +
                      std::conj(u) * base.at(v - 1);
            worst = std::max(worst, std::abs(r1) / scale);
            worst = std::max(worst, std::abs(r2) / scale);
        }
        for (int j = 0; j < sp.n; ++j) {
            VlVector dr = dm(wedge_matrix(sp, vp_basis(sp, 0), vp_basis(sp, 2 + j)));
            VlVector ds = dm(wedge_matrix(sp, vp_basis(sp, 1), vp_basis(sp, 2 + j)));
            VlVector dmm = kI * dr - ds;
            VlVector dmp = kI * dr + ds;
            Cplx rhsf = kI * kSqrt2 * t * etamuj[j];
            for (int v = -ell + 1; v <= ell; ++v) {
                Cplx r3 = dmm.at(v) + rhsf * base.at(v - 1);
                Cplx r4 = dmp.at(v - 1) + rhsf * base.at(v);
                worst = std::max(worst, std::abs(r3) / scale);
                worst = std::max(worst, std::abs(r4) / scale);
            }
        }
    }
    return worst;
}

double whittaker_residuals(const qs::QuadSpace& sp, const VecD& eta, int ell,
                           const std::vector<MPoint>& samples, double h) {
    WFunction closed = [&](double t, const MatD& m) {
        return whittaker_w(sp, eta, MPoint{t, m}, ell);
    };
    return whittaker_residuals_fn(sp, eta, ell, closed, samples, h);
}

VlFunction constant_term_template(const qs::QuadSpace& sp, int ell, Cplx beta,
                                  const MFunction& fl) {
    if (ell < 1) throw DomainError("weight must be >= 1");
    MatD epsp = eps_prime_matrix(sp);

    // Spot-check the z(k)-equivariance of fl on a few deterministic samples.
    Pcg32 rng(0x5eedu);
    std::vector<MatD> probes = {identity_d(sp.n + 2)};
    for (int i = 0; i < 2; ++i) probes.push_back(qs::random_isometry(sp, rng, 4));
    for (const auto& m : probes) {
        Cplx ref = fl(m);
        double scale = std::max(1.0, std::abs(ref));
        for (double theta : {0.9, 2.3}) {
            Cplx z = std::exp(Cplx(0.0, -theta));
            Cplx got = fl(mat_mul(m, rot_v2_matrix(sp, theta)));
            if (std::abs(got - std::pow(z, -ell) * ref) > 1e-8 * scale)
                throw EquivarianceViolation("fl is not z(k)^{-ell} equivariant");
        }
        if (sp.n >= 2) {
            Cplx got = fl(mat_mul(m, rot_un_matrix(sp, 0, 1, 1.1)));
            if (std::abs(got - ref) > 1e-8 * scale)
                throw EquivarianceViolation("fl is not SO(n) invariant");
        }
    }

    return [sp, ell, beta, fl, epsp](const VecD&, double t, const MatD& m) {
        VlVector out(ell);
        out.at(0) = beta * std::pow(t, ell) * std::abs(t);
        out.at(ell) = std::abs(t) * fl(m);
        out.at(-ell) = std::abs(t) * fl(mat_mul(m, epsp));
        return out;
    };
}

MFunction holomorphic_section(const qs::QuadSpace& sp, int ell, const VecD& b0) {
    check_vp_dim(sp, b0.size());
    if (ell < 1) throw DomainError("weight must be >= 1");
    return [sp, ell, b0](const MatD& m) {
        VecD c = mat_vec(mat_inverse_d(m), b0);
        double p1 = pair_vp(sp, c, vp_basis(sp, 0));
        double p2 = pair_vp(sp, c, vp_basis(sp, 1));
        Cplx num(p1, -p2);
        double den2 = p1 * p1 + p2 * p2;
        if (den2 == 0.0) throw DegeneratePoint("b0 projects to zero in the definite plane");
        return std::pow(num, ell) / std::pow(den2, ell);
    };
}

} // namespace somf::vl
