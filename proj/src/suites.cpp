#include "somf/suites.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "somf/cfunc.h"
#include "somf/errors.h"
#include "somf/fourier_arch.h"
#include "somf/padic_sums.h"
#include "somf/quad_space.h"
#include "somf/rng.h"
#include "somf/sfunc.h"
#include "somf/special.h"
#include "somf/vl_schmid.h"
#include "somf/weyl_walk.h"

namespace somf::suites {

using rep::Assertion;
using rep::SuiteReport;
using Cplx = std::complex<double>;

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

std::string fmt(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Assertion measured_flag(std::string name, std::string anchor, bool ok, double measured) {
    Assertion a = rep::exact(std::move(name), std::move(anchor), ok);
    a.measured = measured;
    return a;
}

// ---------------------------------------------------------------- 1

void suite_pochhammer(SuiteReport& r, const SuiteOptions&) {
    for (long ell = 2; ell <= 16; ell += 2) {
        std::string name = "D_" + std::to_string(ell) + " equals its closed product form";
        std::string anchor =
            "sum_j (-4)^j l!/((2j)!(l/2-j)!) (s/2-1)_j = +-2^l ((s-l-1)/2)_{l/2}, l=" +
            std::to_string(ell);
        try {
            int sign = cfn::d_ell_sign(ell);
            cfn::PolyS bf = cfn::d_ell_bruteforce(ell);
            cfn::PolyS closed = cfn::d_ell_closed(ell);
            for (Rational& c : closed) c *= rat(sign);
            bool ok = (sign == 1 || sign == -1) && bf == closed;
            r.assertions.push_back(measured_flag(name, anchor, ok, sign));
        } catch (const NotConstant&) {
            r.assertions.push_back(rep::exact(name, anchor, false));
        }
    }
}

// ---------------------------------------------------------------- 2

void suite_cfunc_orders(SuiteReport& r, const SuiteOptions&) {
    auto ord = [](const sym::SFunction& f, long s0) { return f.order_at(rat(s0)); };

    {
        sym::SFunction f = cfn::c_b3(8, 8);
        bool ok = ord(f, 9) == 0 && f.leading_value_at(rat(9)) != 0.0;
        r.assertions.push_back(measured_flag(
            "rank-three c-function at m=8: finite and nonzero at s=9",
            "ord_{s=9} c^{B3}_8 = 0 with nonzero value", ok, ord(f, 9)));
    }
    r.assertions.push_back(rep::order_is("E8 finite c-factor of the long element: simple zero at s=9",
                                         "ord_{s=9} c_f(w_0) = 1", ord(cfn::e8_cf_w0(), 9), 1));
    r.assertions.push_back(rep::order_is("E8 finite c-factor of the long element: regular at s=20",
                                         "ord_{s=20} c_f(w_0) = 0", ord(cfn::e8_cf_w0(), 20), 0));
    r.assertions.push_back(
        rep::order_is("E8 archimedean c-factor of the long element: regular at s=9",
                      "ord_{s=9} c_inf(w_0) = 0", ord(cfn::e8_cinf_w0(), 9), 0));
    r.assertions.push_back(
        rep::order_is("E8 archimedean c-factor of the long element: simple pole at s=20",
                      "ord_{s=20} c_inf(w_0) = -1", ord(cfn::e8_cinf_w0(), 20), -1));
    r.assertions.push_back(
        rep::order_is("E8 finite c-factor of the subregular element: simple pole at s=20",
                      "ord_{s=20} c_f(w_{-1}) = -1", ord(cfn::e8_cf_wm1(), 20), -1));
    for (int i = 1; i <= 3; ++i) {
        r.assertions.push_back(rep::order_at_least(
            "holomorphic-weight-8 cumulative c-product, step " + std::to_string(i) +
                ": vanishes at s=8",
            "ord_{s=8} prod_{k<=" + std::to_string(i) + "} c_k >= 1",
            ord(cfn::holeis_step(i), 8), 1));
    }
    for (long k = 1; k <= 3; ++k) {
        long m0 = 4 * k;
        for (int i = 1; i <= 3; ++i) {
            r.assertions.push_back(rep::order_at_least(
                "type-D tower k=" + std::to_string(k) + ": constant-term coefficient " +
                    std::to_string(i) + " vanishes at s=" + std::to_string(m0),
                "ord_{s=m0} c_(" + std::to_string(i) + ") >= 1, m0=" + std::to_string(m0),
                ord(cfn::typed_cw(i, k), m0), 1));
        }
        r.assertions.push_back(rep::order_is(
            "type-D tower k=" + std::to_string(k) + ": finite long-element factor, simple zero at s=" +
                std::to_string(m0 + 1),
            "ord_{s=m0+1} c_f(w_0) = 1", ord(cfn::typed_cf_w0(k), m0 + 1), 1));
        r.assertions.push_back(rep::order_is(
            "type-D tower k=" + std::to_string(k) + ": archimedean long-element factor, regular at s=" +
                std::to_string(m0 + 1),
            "ord_{s=m0+1} c_inf(w_0) = 0", ord(cfn::typed_cinf_w0(k), m0 + 1), 0));
        r.assertions.push_back(rep::order_is(
            "type-D tower k=" + std::to_string(k) + ": finite subregular factor, regular at s=" +
                std::to_string(m0 + 1),
            "ord_{s=m0+1} c_f(w') = 0", ord(cfn::typed_cf_wp(k), m0 + 1), 0));
        long min_order = 1000;
        for (long j = 0; j <= 2 * k; ++j)
            min_order = std::min(min_order, ord(cfn::typed_cj_wp(k, j), m0 + 1));
        r.assertions.push_back(rep::order_at_least(
            "type-D tower k=" + std::to_string(k) + ": every residual subregular coefficient vanishes at s=" +
                std::to_string(m0 + 1),
            "min_j ord_{s=m0+1} c_j(w') >= 1", min_order, 1));
    }
    r.assertions.push_back(
        rep::order_is("rank-one auxiliary zeta quotient: finite and nonzero at s=9",
                      "ord_{s=9} zeta(s-6)zeta(s-9)/(zeta(s)zeta(s-5)) = 0",
                      ord(cfn::rank1_aux(), 9), 0));
}

// ---------------------------------------------------------------- 3

void suite_telescoping(SuiteReport& r, const SuiteOptions&) {
    r.assertions.push_back(rep::exact(
        "rank-three weight-8 constant-term zeta product telescopes to its displayed short form",
        "nine-factor zeta quotient = zeta(s-8)zeta(s-14)... (exact product identity)",
        sym::eq_sfunction(cfn::b3type8_cw0_display(), cfn::b3type8_cw0())));
    r.assertions.push_back(rep::exact(
        "minimal type-D tower: long-element zeta product telescopes to its displayed four-zeta form",
        "ten-factor zeta quotient collapses exactly, k=1",
        sym::eq_sfunction(cfn::typed_cf_w0_display(1), cfn::typed_cf_w0(1))));
    r.assertions.push_back(rep::exact(
        "minimal type-D tower: subregular zeta product telescopes to its displayed form",
        "subregular zeta quotient collapses exactly, k=1",
        sym::eq_sfunction(cfn::typed_cf_wp_display(1), cfn::typed_cf_wp(1))));
}

// ---------------------------------------------------------------- 4

void suite_weyl_walk(SuiteReport& r, const SuiteOptions&) {
    auto aff = [](long a, long b) { return Affine(rat(a), rat(b)); };

    weyl::RootModel m = weyl::RootModel::f4();
    weyl::AffineChar lam = weyl::lambda_f4();
    std::vector<weyl::WalkStep> steps = weyl::walk(m, lam, weyl::word_f4());
    const std::vector<Affine> want = {
        aff(1, -1),  aff(1, -2),  aff(1, -6),  aff(1, -10), aff(1, -11),
        aff(1, -10), aff(1, -14), aff(2, -29), aff(1, -15), aff(1, -19),
        aff(1, -18), aff(1, -19), aff(1, -23), aff(1, -27), aff(1, -28)};
    long bad = 0;
    if (steps.size() != want.size()) bad = static_cast<long>(want.size());
    else
        for (size_t i = 0; i < want.size(); ++i)
            if (!(steps[i].param == want[i])) ++bad;
    r.assertions.push_back(measured_flag(
        "F4 walk: all 15 rank-one step parameters match the pinned table",
        "word 1 2 3 2 1 4 3 2 3 4 1 2 3 2 1 applied to (s-23, s-6, -5, -4)", bad == 0, bad));
    r.assertions.push_back(rep::exact(
        "F4 walk lands on the parameter reflection s -> 29-s",
        "endpoint = lambda(29-s)",
        !steps.empty() && steps.back().after == weyl::reflect_parameter(lam, rat(29))));

    weyl::RootModel m2 = weyl::RootModel::rank2_b();
    weyl::AffineChar lam2 = weyl::lambda_rank2(rat(8));
    std::vector<weyl::WalkStep> steps2 = weyl::walk(m2, lam2, weyl::word_rank2());
    const std::vector<Affine> want2 = {aff(1, -1), aff(1, -5), aff(1, -9)};
    bool ok2 = steps2.size() == want2.size();
    if (ok2)
        for (size_t i = 0; i < want2.size(); ++i) ok2 = ok2 && steps2[i].param == want2[i];
    ok2 = ok2 && steps2.back().after == weyl::reflect_parameter(lam2, rat(10));
    r.assertions.push_back(rep::exact(
        "rank-two walk: step parameters and the endpoint reflection s -> 10-s",
        "word 1 2 1 applied to (s-5, -4)", ok2));

    std::vector<Affine> coords = weyl::to_simple_root_coords(m, lam);
    const std::vector<Affine> want_coords = {aff(2, -29), aff(3, -57), aff(4, -84), aff(2, -46)};
    r.assertions.push_back(rep::exact(
        "F4 starting character has simple-root coordinates (2s-29, 3s-57, 4s-84, 2s-46)",
        "change of basis to the simple roots, exact in s", coords == want_coords));

    weyl::AffineChar lam1 = weyl::reflect(m, lam, 1);
    r.assertions.push_back(rep::exact(
        "square-integrability sign check passes at s=9",
        "all simple-root coefficients of the residual exponents negative at s=9",
        weyl::jacquet_all_negative(m, {lam, lam1}, rat(9))));
    r.assertions.push_back(rep::exact(
        "square-integrability sign check fails at s=20",
        "some simple-root coefficient nonnegative at s=20",
        !weyl::jacquet_all_negative(m, {lam, lam1}, rat(20))));
}

// ---------------------------------------------------------------- 5

void suite_padic(SuiteReport& r, const SuiteOptions& opt) {
    for (long n = 1; n <= 3; ++n) {
        long worst = 0;
        bool ok = true;
        for (long p : {2L, 3L, 5L, 7L}) {
            long long brute = padic::count_isotropic(n, p, opt.budget);
            long long rec = padic::count_isotropic_recurrence(n, p);
            if (brute != rec) {
                ok = false;
                ++worst;
            }
        }
        r.assertions.push_back(measured_flag(
            "isotropic vector counts, n=" + std::to_string(n) +
                ": enumeration matches the recurrence for p in {2,3,5,7}",
            "C(1)=2p-1, C(n+1)=pC(n)+(p-1)p^{2n}", ok, worst));
    }
    for (long n = 1; n <= 3; ++n) {
        bool ok = true;
        for (long p : {2L, 3L, 5L}) {
            long long want = -1;
            for (long i = 1; i < n; ++i) want *= p;
            padic::CycloSum s = padic::char_sum_s(n, p, padic::eta_standard(n), opt.budget);
            ok = ok && s.is_integer() && s.as_integer() == want;
        }
        r.assertions.push_back(rep::exact(
            "twisted isotropic character sum, n=" + std::to_string(n) +
                ": equals -p^{n-1} for p in {2,3,5}",
            "S_n = sum_{q(v)=0} psi((eta,v)/p) = -p^{n-1}", ok));
    }
    {
        padic::CycloSum a = padic::r2_vanishing(1, 5, 2, padic::eta_standard(1), opt.budget);
        padic::CycloSum b = padic::r2_vanishing(2, 3, 2, padic::eta_standard(2), opt.budget);
        r.assertions.push_back(rep::exact(
            "depth-two character sums vanish for unramified eta at (n,p,r) = (1,5,2) and (2,3,2)",
            "sum over q(x)=0 mod p^2 of psi((eta,x)/p^2) = 0",
            a.is_integer() && a.as_integer() == 0 && b.is_integer() && b.as_integer() == 0));
    }
    for (long p : {3L, 5L}) {
        for (long s : {3L, 4L, 6L}) {
            long pw = 1;
            for (long i = 0; i < s - 1; ++i) pw *= p;
            Rational want = rat(1) - rat(1, pw);
            Rational got = padic::j_local(rat(s), 2, p, padic::eta_standard(2), 2, opt.budget);
            r.assertions.push_back(measured_flag(
                "local J-factor on the split plane: J(" + std::to_string(s) + ") = 1 - " +
                    std::to_string(p) + "^-(s-1), p=" + std::to_string(p),
                "J(s) = sum_r p^{-rs} T_r with depth cap 2", got == want, to_double(got)));
        }
    }
}

// ---------------------------------------------------------------- 6 and 7

qs::QuadSpace nspace() { return qs::QuadSpace::pair_normalized(2); }

vl::MPoint random_mpoint(const qs::QuadSpace& sp, Pcg32& rng) {
    double t = rng.uniform(0.5, 2.0);
    if (rng.below(2) == 1) t = -t;
    return vl::make_mpoint(sp, t, qs::random_isometry(sp, rng, 5));
}

std::vector<vl::MPoint> sample_points(const qs::QuadSpace& sp, Pcg32& rng, int count) {
    std::vector<vl::MPoint> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) pts.push_back(random_mpoint(sp, rng));
    return pts;
}

double schmid_tail(const vl::SchmidOutput& out, int ell, int n,
                   const std::function<bool(char, int, int)>& skip) {
    double worst = 0.0;
    for (int v = -ell + 1; v <= ell; ++v) {
        if (!skip('y', -1, v)) worst = std::max(worst, std::abs(out.y_um_at(v)));
        if (!skip('x', -1, v)) worst = std::max(worst, std::abs(out.x_um_at(v)));
        for (int j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(out.y_uj_at(j, v)));
            worst = std::max(worst, std::abs(out.x_uj_at(j, v)));
        }
    }
    return worst;
}

void suite_whittaker(SuiteReport& r, const SuiteOptions& opt) {
    qs::QuadSpace sp = nspace();
    Pcg32 rng(opt.seed, 6);
    struct EtaCase {
        const char* label;
        VecD eta;
    };
    const std::vector<EtaCase> etas = {{"v1", {1, 0, 0, 0}},
                                       {"3v1+v2", {3, 1, 0, 0}},
                                       {"v1+u1", {1, 0, 1, 0}}};
    for (int ell : {1, 2, 4}) {
        for (const EtaCase& ec : etas) {
            std::vector<vl::MPoint> pts = sample_points(sp, rng, 50);
            double res = vl::whittaker_residuals(sp, ec.eta, ell, pts);
            r.assertions.push_back(rep::bounded(
                "closed Whittaker family solves the difference-differential system, l=" +
                    std::to_string(ell) + ", eta=" + ec.label,
                "slot v: t^l |t| (|u|/u)^v K_v(|u|), 50 random (t,m)", res,
                1e-6 * opt.tol_scale));
        }
    }
    {
        // A 1% dent in one slot must light up the detector; this bound is a
        // floor, so it is never scaled.
        int ell = 2;
        VecD eta = {1, 0, 0, 0};
        std::vector<vl::MPoint> pts = sample_points(sp, rng, 5);
        vl::WFunction dented = [&sp, &eta, ell](double t, const MatD& m) {
            vl::VlVector w = vl::whittaker_w(sp, eta, vl::make_mpoint(sp, t, m), ell);
            w.at(1) *= 1.01;
            return w;
        };
        double res = vl::whittaker_residuals_fn(sp, eta, ell, dented, pts);
        Assertion a;
        a.name = "residual detector flags a 1% perturbation of one slot";
        a.anchor = "dented closed family must exceed the 1e-3 floor";
        a.measured = res;
        a.tolerance = 1e-3;
        a.pass = res > 1e-3;
        r.assertions.push_back(a);
    }
    {
        int ell = 2;
        vl::MPoint p = vl::make_mpoint(sp, 1.4, qs::random_isometry(sp, rng, 5));
        VecD x0(4, 0.0);
        for (double s : {1.0, 3.0, 5.0}) {
            vl::VlFunction f1 = [s, ell](const VecD&, double t, const MatD&) {
                vl::VlVector out(ell);
                out.at(0) = std::pow(std::abs(t), s);
                return out;
            };
            vl::SchmidOutput out = vl::schmid_apply(sp, f1, ell, x0, p);
            double want = kSqrt2 * (s - ell - 1) * std::pow(p.t, s);
            double scale = std::max(1.0, std::abs(std::pow(p.t, s)));
            double worst = std::max(std::abs(out.y_um_at(1) - want), std::abs(out.x_um_at(0) + want));
            worst = std::max(worst, schmid_tail(out, ell, sp.n, [](char fam, int, int v) {
                                 return (fam == 'y' && v == 1) || (fam == 'x' && v == 0);
                             }));
            r.assertions.push_back(rep::bounded(
                "operator on the scalar section |t|^s extracts sqrt2 (s-l-1) t^s, s=" + fmt(s),
                "only the (y,v=1) and (x,v=0) slots survive; zero exactly at s=l+1",
                worst / scale, 1e-6 * opt.tol_scale));
        }
    }
}

void suite_constant_term(SuiteReport& r, const SuiteOptions& opt) {
    qs::QuadSpace sp = nspace();
    Pcg32 rng(opt.seed, 7);
    int ell = 2;
    VecD b0 = {1, 0, 1, 0}; // isotropic in V'
    vl::MFunction fl = vl::holomorphic_section(sp, ell, b0);
    vl::VlFunction tmpl = vl::constant_term_template(sp, ell, Cplx(1.0, 0.0), fl);
    VecD x0(4, 0.0);
    for (int trial = 0; trial < 3; ++trial) {
        vl::MPoint q = random_mpoint(sp, rng);
        vl::VlVector base = tmpl(x0, q.t, q.m);
        double scale = 1.0;
        for (int v = -ell; v <= ell; ++v) scale = std::max(scale, std::abs(base.at(v)));
        vl::SchmidOutput out = vl::schmid_apply(sp, tmpl, ell, x0, q);
        r.assertions.push_back(rep::bounded(
            "degenerate constant-term template is annihilated, sample " + std::to_string(trial + 1),
            "beta=1 center slot + holomorphic-section edge slots, random (t,m)",
            vl::max_abs(out) / scale, 1e-6 * opt.tol_scale));
    }
}

// ---------------------------------------------------------------- 8

void suite_poly_2f1(SuiteReport& r, const SuiteOptions& opt) {
    Pcg32 rng(opt.seed, 8);
    for (long ell : {2L, 4L, 6L, 8L}) {
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            // The residual is an absolute coefficient bound, so draws keep the
            // expanded coefficients of order one; the large-magnitude regime is
            // covered separately with scale-aware comparisons.
            double b = rng.uniform(0.3, 0.8);
            double mag = (rep % 2 == 0) ? b * rng.uniform(0.1, 0.9) : b * rng.uniform(1.1, 1.6);
            double th = rng.uniform(0.0, 6.2831853071795864769);
            Cplx a = mag * Cplx(std::cos(th), std::sin(th));
            worst = std::max(worst, fta::poly_identity_2f1sum(ell, a, b));
        }
        r.assertions.push_back(rep::bounded(
            "two-sided polynomial expansion of the scaled 2F1 kernel, l=" + std::to_string(ell),
            "(a x^2 + 2b xy - conj(a) y^2)^l expanded against the slot polynomials, 20 draws "
            "including |a| > b",
            worst, 1e-10 * opt.tol_scale));
    }
}

// ---------------------------------------------------------------- 9

fta::XPoint random_xpoint(Pcg32& rng, long n, double lo, double hi) {
    auto draw = [&]() {
        double c = rng.uniform(lo, hi);
        return rng.below(2) == 1 ? -c : c;
    };
    std::vector<double> x2 = {draw(), draw()};
    std::vector<double> xn(n);
    for (double& c : xn) c = draw();
    return fta::XPoint(std::move(x2), std::move(xn));
}

void suite_fourier_rank2(SuiteReport& r, const SuiteOptions& opt) {
    Pcg32 rng(opt.seed, 9);
    struct Regime {
        long ell, n;
    };
    for (const Regime reg : {Regime{2, 2}, Regime{4, 2}, Regime{8, 10}}) {
        double worst = 0.0;
        for (int rep = 0; rep < 10; ++rep) {
            double lo = reg.ell >= 8 ? 0.05 : 0.1;
            double hi = reg.ell >= 8 ? (rep < 5 ? 0.45 : 1.4) : (rep < 6 ? 1.0 : 2.5);
            fta::XPoint x = random_xpoint(rng, reg.n, lo, hi);
            worst = std::max(worst, fta::ftrank2_identity(x, reg.ell, reg.n));
        }
        r.assertions.push_back(rep::bounded(
            "generating identity for the slot transforms, l=" + std::to_string(reg.ell) +
                ", n=" + std::to_string(reg.n),
            "sum_v I_v x^{l+v} y^{l-v} / ((l+v)!(l-v)!) against (a x^2 + 2 b xy - conj(a) y^2)^l "
            "/ tau^{2l+1}, exact normalization (no scalar fitted), 10 draws",
            worst, 1e-8 * opt.tol_scale));
    }
    {
        double worst = 0.0;
        for (int rep = 0; rep < 5; ++rep) {
            fta::XPoint x = random_xpoint(rng, 2, 0.25, 0.85);
            for (long v : {0L, 1L, -1L, 2L}) {
                Cplx q = fta::iv_quadrature(v, x, 2, 2, 1e-7);
                Cplx c = fta::iv_closed(v, x, 2, 2);
                worst = std::max(worst, std::abs(q - c) / std::max(0.02, std::abs(c)));
            }
        }
        r.assertions.push_back(rep::bounded(
            "closed slot transforms match direct Bessel quadrature, l=2, n=2",
            "radial integral t^{l+1} J_l(|x_n| t) J_v(|x_2| t) K_v(sqrt2 t) with phase and "
            "Gamma prefactors, 5 points, v in {0, +-1, 2}",
            worst, 1e-4 * opt.tol_scale));
    }
}

// ---------------------------------------------------------------- 10

void suite_cln_extract(SuiteReport& r, const SuiteOptions&) {
    std::string name = "transform normalization at (l,n) = (2,2): constant across frequencies, rational";
    std::string anchor = "slot transform / classical Whittaker ratio, 5 test frequencies, "
                         "stable to 1e-6, continued-fraction rationalization";
    try {
        Rational c = fta::extract_cln(2, 2);
        r.assertions.push_back(measured_flag(name, anchor, c != 0, to_double(c)));
        r.assertions.push_back(measured_flag(
            "the (2,2) normalization constant equals 1 exactly",
            "2^{(n+2)/2} Gamma(l+1) / (Gamma(l-n/2+1) (-2 sqrt2)^l) at l=n=2", c == rat(1),
            to_double(c)));
    } catch (const std::exception&) {
        r.assertions.push_back(rep::exact(name, anchor, false));
        r.assertions.push_back(rep::exact("the (2,2) normalization constant equals 1 exactly",
                                          "extraction failed", false));
    }
    {
        double worst = 0.0;
        VecD iso = {1.0, 0.0, 1.0, 0.0};      // q' = 0
        VecD neg = {0.2, 0.1, 1.0, 0.5};      // q' < 0
        worst = std::max(worst, std::abs(fta::transform_slot(0, iso, 2, 2)));
        worst = std::max(worst, std::abs(fta::transform_slot(1, iso, 2, 2)));
        worst = std::max(worst, std::abs(fta::transform_slot(0, neg, 2, 2)));
        r.assertions.push_back(rep::bounded(
            "transform vanishes off the positivity support",
            "slot transform = 0 for q'(omega) <= 0, isotropic and negative test frequencies",
            worst, 1e-10));
    }
}

// ---------------------------------------------------------------- 11

void suite_specfn(SuiteReport& r, const SuiteOptions& opt) {
    const double h = 2e-3;
    auto d1 = [h](const std::function<double(double)>& f, double y) {
        return (f(y - 2 * h) - 8 * f(y - h) + 8 * f(y + h) - f(y + 2 * h)) / (12 * h);
    };

    {
        double worst = 0.0;
        for (int v : {1, 2, 3})
            for (double y : {0.6, 1.3, 2.5}) {
                double lhs = sf::bessel_k(v + 1, y);
                double rhs = sf::bessel_k(v - 1, y) + (2.0 * v / y) * sf::bessel_k(v, y);
                worst = std::max(worst, std::abs(lhs - rhs) / lhs);
            }
        r.assertions.push_back(rep::bounded(
            "Macdonald function recurrence", "K_{v+1} = K_{v-1} + (2v/y) K_v, v=1..3, three y",
            worst, 1e-9 * opt.tol_scale));
    }
    {
        double worst = 0.0;
        for (double nu : {1.0, 2.0, 3.5})
            for (double y : {2.0, 5.0, 9.0}) {
                double jm = sf::bessel_j(nu - 1, y);
                double j0 = sf::bessel_j(nu, y);
                double jp = sf::bessel_j(nu + 1, y);
                double scale = std::max({std::abs(jm), std::abs(j0), std::abs(jp), 0.1});
                worst = std::max(worst, std::abs(jp - (2.0 * nu / y) * j0 + jm) / scale);
            }
        r.assertions.push_back(rep::bounded("Bessel J recurrence",
                                            "J_{nu+1} = (2nu/y) J_nu - J_{nu-1}, nu in {1,2,3.5}",
                                            worst, 1e-9 * opt.tol_scale));
    }
    {
        // First-order form of the modified equation: the derivative rule is
        // checked by a fourth-order stencil, then the ODE through that rule.
        double worst_d = 0.0, worst_ode = 0.0;
        for (int v : {1, 2})
            for (double y : {1.2, 2.0}) {
                double fd = d1([v](double t) { return sf::bessel_k(v, t); }, y);
                double rule = -0.5 * (sf::bessel_k(v - 1, y) + sf::bessel_k(v + 1, y));
                worst_d = std::max(worst_d,
                                   std::abs(fd - rule) / std::max(sf::bessel_k(v, y), 1e-3));
            }
        for (int v : {0, 1, 2})
            for (double y : {0.8, 1.5, 2.6}) {
                double k = sf::bessel_k(v, y);
                double kp = -0.5 * (sf::bessel_k(v - 1, y) + sf::bessel_k(v + 1, y));
                double kpp = 0.25 * (sf::bessel_k(v - 2, y) + 2 * k + sf::bessel_k(v + 2, y));
                double res = y * y * kpp + y * kp - (y * y + v * v) * k;
                worst_ode = std::max(worst_ode, std::abs(res) / (y * y * std::max(k, 1e-3)));
            }
        r.assertions.push_back(rep::bounded(
            "Macdonald derivative rule by finite differences",
            "K_v' = -(K_{v-1} + K_{v+1})/2, fourth-order stencil", worst_d,
            1e-9 * opt.tol_scale));
        r.assertions.push_back(rep::bounded(
            "modified Bessel equation through the derivative rules",
            "y^2 K'' + y K' - (y^2 + v^2) K = 0, v=0..2", worst_ode, 1e-9 * opt.tol_scale));
    }
    {
        double worst_d = 0.0, worst_ode = 0.0;
        for (double nu : {1.0, 2.0}) {
            double fd = d1([nu](double t) { return sf::bessel_j(nu, t); }, 4.0);
            double rule = 0.5 * (sf::bessel_j(nu - 1, 4.0) - sf::bessel_j(nu + 1, 4.0));
            worst_d = std::max(worst_d, std::abs(fd - rule) / 0.1);
        }
        for (double nu : {2.0, 3.0})
            for (double y : {2.0, 4.0}) {
                double j = sf::bessel_j(nu, y);
                double jp = 0.5 * (sf::bessel_j(nu - 1, y) - sf::bessel_j(nu + 1, y));
                double jpp = 0.25 * (sf::bessel_j(nu - 2, y) - 2 * j + sf::bessel_j(nu + 2, y));
                double res = y * y * jpp + y * jp + (y * y - nu * nu) * j;
                worst_ode = std::max(worst_ode,
                                     std::abs(res) / (y * y * std::max(std::abs(j), 0.05)));
            }
        r.assertions.push_back(rep::bounded("Bessel J derivative rule by finite differences",
                                            "J_nu' = (J_{nu-1} - J_{nu+1})/2, fourth-order stencil",
                                            worst_d, 1e-9 * opt.tol_scale));
        r.assertions.push_back(rep::bounded(
            "Bessel equation through the derivative rules",
            "y^2 J'' + y J' + (y^2 - nu^2) J = 0, nu in {2,3}", worst_ode,
            1e-9 * opt.tol_scale));
    }
    r.assertions.push_back(rep::bounded(
        "rank-one beta integral against its Gamma closed form, (dim U, s) = (2, 3)",
        "int (cosh r)^{-s} sinh^{dim-1} r dr = Gamma((s-d/2)... quotient, relative",
        fta::beta_check(2, 3.0), 1e-8 * opt.tol_scale));
    r.assertions.push_back(rep::bounded(
        "rank-one beta integral against its Gamma closed form, (dim U, s) = (8, 10)",
        "same identity at higher rank and weight", fta::beta_check(8, 10.0),
        1e-8 * opt.tol_scale));
    {
        const std::vector<fta::XPoint> pts = {fta::XPoint({0.28, 0.17}, {0.25, 0.31}),
                                              fta::XPoint({0.40, -0.20}, {0.30, 0.10}),
                                              fta::XPoint({0.15, 0.45}, {-0.20, 0.20})};
        double worst = 0.0;
        bool ok = true;
        for (const fta::XPoint& x : pts)
            for (long v : {0L, 1L, 2L}) {
                double tail = 0.0;
                Cplx f4 = fta::iv_appell(v, x, 2, 2, 40, &tail);
                Cplx cl = fta::iv_closed(v, x, 2, 2);
                double scale = std::max(1.0, std::abs(cl));
                double excess = (std::abs(f4 - cl) - tail) / scale;
                worst = std::max(worst, excess);
                ok = ok && std::abs(f4 - cl) <= tail + 1e-9 * opt.tol_scale * scale;
            }
        Assertion a;
        a.name = "double-series route agrees with the reduced 2F1 closed form at interior points";
        a.anchor = "partial Appell sum within its own tail bound of the closed slot value, "
                   "l=2, n=2, v=0..2, 3 points";
        a.measured = worst;
        a.tolerance = 1e-9 * opt.tol_scale;
        a.pass = ok;
        r.assertions.push_back(a);
    }
}

// ---------------------------------------------------------------- registry

struct SuiteEntry {
    const char* name;
    const char* summary;
    double time_limit;
    void (*run)(SuiteReport&, const SuiteOptions&);
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries = {
        {"pochhammer-sum",
         "terminating hypergeometric sum D_l(s) collapses to +-2^l ((s-l-1)/2)_{l/2}, l = 2..16",
         1.0, suite_pochhammer},
        {"cfunc-orders",
         "orders and leading behavior of the intertwining c-function products at their critical "
         "points",
         1.0, suite_cfunc_orders},
        {"telescoping", "displayed zeta-product simplifications hold as exact symbolic identities",
         1.0, suite_telescoping},
        {"weyl-walk",
         "rank-one parameters and endpoints of the pinned Weyl walks; square-integrability signs",
         1.0, suite_weyl_walk},
        {"padic",
         "isotropic counts, twisted character sums and the local J-factor match their closed forms",
         60.0, suite_padic},
        {"whittaker-ode",
         "closed generalized Whittaker families solve the difference-differential system",
         30.0, suite_whittaker},
        {"constant-term", "degenerate constant-term template is annihilated by the operator",
         10.0, suite_constant_term},
        {"poly-2f1", "two-sided polynomial expansion of the scaled 2F1 kernel", 5.0,
         suite_poly_2f1},
        {"fourier-rank2",
         "closed slot transforms satisfy the generating identity and match direct quadrature",
         300.0, suite_fourier_rank2},
        {"cln-extract",
         "inverse-transform normalization is a stable rational; transform vanishes off its support",
         120.0, suite_cln_extract},
        {"specfn",
         "Bessel recurrence and ODE residuals, the rank-one beta integral, and the double-series "
         "reduction",
         30.0, suite_specfn},
    };
    return entries;
}

const SuiteEntry& entry_for(const std::string& name) {
    for (const SuiteEntry& e : registry())
        if (name == e.name) return e;
    throw UnknownName("no verification suite named '" + name + "'");
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const SuiteEntry& e : registry()) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

std::string suite_summary(const std::string& name) { return entry_for(name).summary; }

double suite_time_limit(const std::string& name) { return entry_for(name).time_limit; }

rep::SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    const SuiteEntry& e = entry_for(name);
    SuiteReport r;
    r.suite = e.name;
    r.params.emplace_back("seed", std::to_string(opt.seed));
    if (opt.tol_scale != 1.0) r.params.emplace_back("tol_scale", fmt(opt.tol_scale));
    if (std::string(e.name) == "padic") r.params.emplace_back("budget", std::to_string(opt.budget));
    try {
        e.run(r, opt);
    } catch (const std::exception& ex) {
        r.assertions.push_back(
            rep::exact(std::string("suite aborted: ") + ex.what(), "unexpected exception", false));
    }
    return r;
}

std::vector<rep::SuiteReport> run_all(const SuiteOptions& opt) {
    std::vector<SuiteReport> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

} // namespace somf::suites
