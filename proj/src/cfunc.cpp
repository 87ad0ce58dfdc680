#include "somf/cfunc.h"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "somf/errors.h"
#include "somf/special.h"

namespace somf::cfn {

namespace {

// (s + bnum/bden) and (s + bnum)/2 shorthands; every argument below is one
// of these two shapes.
Affine sp(long b) { return Affine(rat(1), rat(b)); }
Affine sp2(long b) { return Affine(rat(1, 2), rat(b, 2)); }

SFunction poch(const Affine& base, long k) { return SFunction::pochhammer(base, k); }
SFunction G(const Affine& a) { return SFunction::gamma(a); }
SFunction GR(const Affine& a) { return SFunction::gamma_r(a); }
SFunction Z(const Affine& a) { return SFunction::zeta(a); }

void require_even_ktype(long ell) {
    if (ell < 0 || ell % 2 != 0)
        throw DomainError("K-type parameter must be even and nonnegative, got " + std::to_string(ell));
}

} // namespace

SFunction c_b3(long ell, long m) {
    require_even_ktype(ell);
    if (m < 0) throw DomainError("m must be nonnegative");
    const long h = ell / 2;
    SFunction f = poch(sp2(-ell - 1), h) / poch(sp2(-2), h + 1);
    f = f * (G(Affine(rat(1), rat(-4 - m, 2))) / G(sp(-2)));
    f = f * (poch(sp2(-2 - m - ell), h) / poch(sp2(-3 - m), h + 1));
    return f;
}

SFunction c_sl3(long ell) {
    require_even_ktype(ell);
    const long h = ell / 2;
    return poch(sp2(-ell - 1), h) / poch(sp2(-2), h + 1);
}

namespace {

PolyS poly_scale(const PolyS& p, const Rational& c) {
    PolyS out = p;
    for (Rational& x : out) x *= c;
    return out;
}

PolyS poly_add(const PolyS& p, const PolyS& q) {
    PolyS out(std::max(p.size(), q.size()), rat(0));
    for (size_t i = 0; i < p.size(); ++i) out[i] += p[i];
    for (size_t i = 0; i < q.size(); ++i) out[i] += q[i];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

PolyS poly_mul(const PolyS& p, const PolyS& q) {
    PolyS out(p.size() + q.size() - 1, rat(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

PolyS affine_poly(const Affine& f) { return {f.b, f.a}; }

PolyS poch_poly(const Affine& base, long k) {
    PolyS out{rat(1)};
    for (long i = 0; i < k; ++i) out = poly_mul(out, affine_poly(base + rat(i)));
    return out;
}

Rational factorial(long n) {
    Rational r(1);
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

Rational poly_eval(const PolyS& p, const Rational& s0) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * s0 + p[i];
    return acc;
}

std::string poly_str(const PolyS& p) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(p[i]);
    }
    os << "]";
    return os.str();
}

PolyS d_ell_bruteforce(long ell) {
    require_even_ktype(ell);
    PolyS sum{rat(0)};
    for (long j = 0; j <= ell / 2; ++j) {
        Rational coef = factorial(ell) / (factorial(2 * j) * factorial(ell / 2 - j));
        Rational sign4 = rat(1);
        for (long t = 0; t < j; ++t) sign4 *= rat(-4);
        PolyS term = poly_scale(poch_poly(sp2(-2), j), coef * sign4);
        sum = poly_add(sum, term);
    }
    return sum;
}

PolyS d_ell_closed(long ell) {
    require_even_ktype(ell);
    Rational two_ell(1);
    for (long t = 0; t < ell; ++t) two_ell *= 2;
    return poly_scale(poch_poly(sp2(-ell - 1), ell / 2), two_ell);
}

int d_ell_sign(long ell) {
    PolyS d = d_ell_bruteforce(ell);
    PolyS c = d_ell_closed(ell);
    if (d == c) return 1;
    if (d == poly_scale(c, rat(-1))) return -1;
    throw NotConstant("brute-force and closed-form polynomials differ beyond sign at ell = " +
                      std::to_string(ell) + ": " + poly_str(d) + " vs " + poly_str(c));
}

SFunction e8_cf_w0() {
    SFunction num = Z(Affine(rat(2), rat(-29))) * Z(sp(-28)) * Z(sp(-23)) * Z(sp(-19));
    SFunction den = Z(Affine(rat(2), rat(-28))) * Z(sp(0)) * Z(sp(-5)) * Z(sp(-9));
    return num / den;
}

SFunction e8_cf_wm1() {
    SFunction num = Z(Affine(rat(2), rat(-29))) * Z(sp(-27)) * Z(sp(-23)) * Z(sp(-19));
    SFunction den = Z(Affine(rat(2), rat(-28))) * Z(sp(0)) * Z(sp(-5)) * Z(sp(-9));
    return num / den;
}

SFunction e8_cmid() {
    return G(Affine(rat(1), rat(-29, 2))) * G(sp(-19)) / (G(sp(-6)) * G(sp(-11)));
}

SFunction e8_cmid_display() {
    SFunction f = G(sp(-10)) / G(sp(-6));
    f = f * (G(sp(-14)) / G(sp(-10)));
    f = f * (GR(Affine(rat(2), rat(-29))) / GR(Affine(rat(2), rat(-28))));
    f = f * (G(sp(-15)) / G(sp(-11)));
    f = f * (G(sp(-19)) / G(sp(-15)));
    return f;
}

SFunction e8_cinf_w0() {
    return c_b3(8, 8).shifted_s(rat(-17)) * e8_cmid() * c_b3(8, 8);
}

SFunction e8_wm1_last_step(long kk) {
    if (kk < 0 || kk > 4) throw DomainError("truncation must lie in 0..4");
    SFunction f = GR(sp(-27)) / GR(sp(-26));
    return f * poch(Affine(rat(-1, 2), rat(14)), kk) / poch(sp2(-26), kk);
}

SFunction holeis_step(int i) {
    if (i < 1 || i > 3) throw DomainError("step index must lie in 1..3");
    SFunction f = Z(sp(-1)) / Z(sp(0));
    f = f * (GR(sp(-1)) / GR(sp(0)));
    f = f * (poch(Affine(rat(-1, 2), rat(1)), 4) / poch(sp2(0), 4));
    if (i >= 2) {
        f = f * (SFunction::zeta_theta(sp(-5)) / SFunction::zeta_theta(sp(-1)));
        f = f * (G(sp(-5)) / G(sp(-1)));
    }
    if (i >= 3) {
        f = f * (Z(sp(-9)) / Z(sp(-8)));
        f = f * (GR(sp(-9)) / GR(sp(-8)));
        f = f * (poch(Affine(rat(-1, 2), rat(5)), 4) / poch(sp2(-8), 4));
    }
    return f;
}

namespace {

void require_typed_k(long k) {
    if (k < 1) throw DomainError("type-D index k must be >= 1");
}

} // namespace

SFunction typed_cw(int i, long k) {
    if (i < 1 || i > 3) throw DomainError("step index must lie in 1..3");
    require_typed_k(k);
    const long m0 = 4 * k;
    const long h = m0 / 2;
    SFunction f = Z(sp(-1)) / Z(sp(0));
    f = f * (GR(sp(0)) / GR(sp(0)));
    f = f * (poch(Affine(rat(-1, 2), rat(1)), h) / poch(sp2(0), h));
    if (i >= 2) {
        f = f * (SFunction::zeta_an(sp(-m0 - 1), m0) / SFunction::zeta_an(sp(-1), m0));
        f = f * (G(sp(-m0 - 1)) / G(sp(-1)));
    }
    if (i >= 3) {
        f = f * (Z(sp(-2 * m0 - 1)) / Z(sp(-2 * m0)));
        f = f * (GR(sp(-2 * m0 - 1)) / GR(sp(-2 * m0)));
        f = f * (poch(Affine(rat(-1, 2), rat(m0 + 1)), h) / poch(sp2(-2 * m0), h));
    }
    return f;
}

SFunction typed_cf_w0_display(long k) {
    require_typed_k(k);
    const long m0 = 4 * k;
    SFunction num = Z(sp(-1)) * Z(sp(-2)) * SFunction::zeta_an(sp(-2 - m0), m0) * Z(sp(-2 - 2 * m0)) *
                    Z(sp(-3 - 2 * m0));
    SFunction den = Z(sp(0)) * Z(sp(-1)) * SFunction::zeta_an(sp(-2), m0) * Z(sp(-1 - 2 * m0)) *
                    Z(sp(-2 - 2 * m0));
    return num / den;
}

SFunction typed_cf_w0(long k) {
    require_typed_k(k);
    const long m0 = 4 * k;
    return Z(sp(-2 - m0)) * Z(sp(-3 - 2 * m0)) / (Z(sp(0)) * Z(sp(-1 - m0)));
}

SFunction typed_cinf_w0(long k) {
    require_typed_k(k);
    const long m0 = 4 * k;
    const long h = m0 / 2;
    SFunction f = poch(sp2(-m0 - 1), h) / poch(sp2(-2), h + 1);
    f = f * (G(sp(-2 - m0)) / G(sp(-2)));
    f = f * (poch(sp2(-2 - 3 * m0), h) / poch(sp2(-3 - 2 * m0), h + 1));
    return f;
}

SFunction typed_cf_wp_display(long k) {
    require_typed_k(k);
    const long m0 = 4 * k;
    SFunction num = Z(sp(-1)) * Z(sp(-2)) * SFunction::zeta_an(sp(-2 - m0), m0) * Z(sp(-2 - 2 * m0));
    SFunction den = Z(sp(0)) * Z(sp(-1)) * SFunction::zeta_an(sp(-2), m0) * Z(sp(-1 - 2 * m0));
    return num / den;
}

SFunction typed_cf_wp(long k) {
    require_typed_k(k);
    const long m0 = 4 * k;
    return Z(sp(-2 - m0)) * Z(sp(-2 - 2 * m0)) / (Z(sp(0)) * Z(sp(-1 - m0)));
}

SFunction typed_cj_wp(long k, long j) {
    require_typed_k(k);
    const long m0 = 4 * k;
    const long h = m0 / 2;
    if (j < 0 || j > h) throw DomainError("truncation must lie in 0..m0/2");
    SFunction f = poch(sp2(-m0 - 1), h) / poch(sp2(-2), h + 1);
    f = f * (G(sp(-2 - m0)) / G(sp(-2)));
    f = f * (GR(sp(-2 - 2 * m0)) / GR(sp(-1 - 2 * m0)));
    f = f * (poch(Affine(rat(-1, 2), rat(3 + 2 * m0, 2)), j) / poch(sp2(-1 - 2 * m0), j));
    return f;
}

SFunction rank1_aux() {
    return Z(sp(-6)) * Z(sp(-9)) / (Z(sp(0)) * Z(sp(-5)));
}

SFunction b3type8_cw0() {
    return Z(sp(-6)) * Z(sp(-11)) / (Z(sp(0)) * Z(sp(-5)));
}

SFunction b3type8_cw0_display() {
    SFunction f = Z(sp(-1)) / Z(sp(0));
    f = f * (Z(sp(-2)) / Z(sp(-1)));
    f = f * (SFunction::zeta_theta(sp(-6)) / SFunction::zeta_theta(sp(-2)));
    f = f * (Z(sp(-10)) / Z(sp(-9)));
    f = f * (Z(sp(-11)) / Z(sp(-10)));
    return f;
}

double sigma_over_zeta(long n, double s) {
    if (n <= 0) throw DomainError("divisor sum needs n >= 1");
    double sigma = 0.0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) sigma += std::pow(static_cast<double>(d), s - 11.0);
    return sigma / sf::zeta_real(s - 10.0);
}

SFunction expand_gamma_r(const SFunction& f) {
    SFunction out = SFunction::constant(f.constant_factor());
    for (const sym::SAtom& a : f.atoms()) {
        SFunction atom = SFunction::unit();
        switch (a.kind) {
        case sym::AtomKind::LinearFactor: atom = SFunction::linear(a.arg); break;
        case sym::AtomKind::Gamma: atom = SFunction::gamma(a.arg); break;
        case sym::AtomKind::GammaR: atom = SFunction::gamma(a.arg * rat(1, 2)); break;
        case sym::AtomKind::Zeta: atom = SFunction::zeta(a.arg); break;
        }
        out = out * atom.pow(a.exp);
    }
    return out;
}

SFunction c_named(const std::string& name, long a, long b) {
    static const std::map<std::string, std::function<SFunction(long, long)>> table = {
        {"b3", [](long x, long y) { return c_b3(x, y); }},
        {"sl3", [](long x, long) { return c_sl3(x); }},
        {"e8-cf-w0", [](long, long) { return e8_cf_w0(); }},
        {"e8-cf-wm1", [](long, long) { return e8_cf_wm1(); }},
        {"e8-cmid", [](long, long) { return e8_cmid(); }},
        {"e8-cinf-w0", [](long, long) { return e8_cinf_w0(); }},
        {"e8-w0-total", [](long, long) { return e8_cf_w0() * e8_cinf_w0(); }},
        {"e8-wm1-last", [](long x, long) { return e8_wm1_last_step(x); }},
        {"holeis-step", [](long x, long) { return holeis_step(static_cast<int>(x)); }},
        {"typed-cw", [](long x, long y) { return typed_cw(static_cast<int>(x), y); }},
        {"typed-cf-w0", [](long x, long) { return typed_cf_w0(x); }},
        {"typed-cinf-w0", [](long x, long) { return typed_cinf_w0(x); }},
        {"typed-cf-wp", [](long x, long) { return typed_cf_wp(x); }},
        {"typed-cj-wp", [](long x, long y) { return typed_cj_wp(x, y); }},
        {"rank1-aux", [](long, long) { return rank1_aux(); }},
        {"b3type8-cw0", [](long, long) { return b3type8_cw0(); }},
        {"unit", [](long, long) { return SFunction::unit(); }},
    };
    auto it = table.find(name);
    if (it == table.end()) throw UnknownName("no c-function family named '" + name + "'");
    return it->second(a, b);
}

std::vector<std::string> named_list() {
    return {"b3",          "sl3",          "e8-cf-w0",  "e8-cf-wm1",   "e8-cmid",
            "e8-cinf-w0",  "e8-w0-total",  "e8-wm1-last", "holeis-step", "typed-cw",
            "typed-cf-w0", "typed-cinf-w0", "typed-cf-wp", "typed-cj-wp", "rank1-aux",
            "b3type8-cw0", "unit"};
}

std::vector<OrderRow> order_report(const SFunction& f, const std::vector<Rational>& points) {
    std::vector<OrderRow> rows;
    rows.reserve(points.size());
    for (const Rational& p : points) {
        OrderRow row;
        row.point = p;
        row.order = f.order_at(p);
        row.leading = f.leading_value_at(p);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string classify(long order) {
    if (order > 0) return "zero";
    if (order < 0) return "pole";
    return "nonzero";
}

void sweep_line(std::ostringstream& os, const std::string& label, const SFunction& f, long s0) {
    const long order = f.order_at(rat(s0));
    os << label << "; s=" << s0 << "; order=" << order << "; " << classify(order) << "\n";
}

} // namespace

std::string standard_order_sweep() {
    std::ostringstream os;
    sweep_line(os, "b3(8,8)", c_b3(8, 8), 9);
    sweep_line(os, "b3(8,4)", c_b3(8, 4), 9);
    sweep_line(os, "b3(6,2)", c_b3(6, 2), 7);
    sweep_line(os, "sl3(2)", c_sl3(2), 3);
    sweep_line(os, "sl3(8)@s-17", c_sl3(8).shifted_s(rat(-17)), 20);
    for (long s0 : {9L, 20L}) sweep_line(os, "e8-cf-w0", e8_cf_w0(), s0);
    for (long s0 : {9L, 20L}) sweep_line(os, "e8-cf-wm1", e8_cf_wm1(), s0);
    for (long s0 : {9L, 20L}) sweep_line(os, "e8-cmid", e8_cmid(), s0);
    for (long s0 : {9L, 20L}) sweep_line(os, "e8-cinf-w0", e8_cinf_w0(), s0);
    for (long s0 : {9L, 20L}) sweep_line(os, "e8-w0-total", e8_cf_w0() * e8_cinf_w0(), s0);
    for (long kk = 0; kk <= 4; ++kk)
        sweep_line(os, "e8-wm1-last[k=" + std::to_string(kk) + "]", e8_wm1_last_step(kk), 20);
    for (int i = 1; i <= 3; ++i)
        sweep_line(os, "holeis-step[" + std::to_string(i) + "]", holeis_step(i), 8);
    for (long k = 1; k <= 3; ++k)
        for (int i = 1; i <= 3; ++i)
            sweep_line(os, "typed-cw[i=" + std::to_string(i) + "][k=" + std::to_string(k) + "]",
                       typed_cw(i, k), 4 * k);
    for (long k = 1; k <= 3; ++k)
        sweep_line(os, "typed-cf-w0[k=" + std::to_string(k) + "]", typed_cf_w0(k), 4 * k + 1);
    for (long k = 1; k <= 3; ++k)
        sweep_line(os, "typed-cinf-w0[k=" + std::to_string(k) + "]", typed_cinf_w0(k), 4 * k + 1);
    for (long k = 1; k <= 3; ++k)
        sweep_line(os, "typed-cf-wp[k=" + std::to_string(k) + "]", typed_cf_wp(k), 4 * k + 1);
    for (long k = 1; k <= 3; ++k)
        for (long j = 0; j <= 2 * k; ++j)
            sweep_line(os, "typed-cj-wp[k=" + std::to_string(k) + "][j=" + std::to_string(j) + "]",
                       typed_cj_wp(k, j), 4 * k + 1);
    sweep_line(os, "rank1-aux", rank1_aux(), 9);
    sweep_line(os, "b3type8-cw0", b3type8_cw0(), 9);
    sweep_line(os, "unit", SFunction::unit(), 7);
    return os.str();
}

} // namespace somf::cfn
