#include "somf/sfunc.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "somf/errors.h"
#include "somf/special.h"

namespace somf::sym {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool atom_order_lt(const SAtom& x, const SAtom& y) {
    return std::tie(x.kind, x.arg.a, x.arg.b) < std::tie(y.kind, y.arg.a, y.arg.b);
}

double ipow(double base, int e) {
    if (e >= 0) return std::pow(base, e);
    return 1.0 / std::pow(base, -e);
}

Rational rpow(const Rational& base, int e) {
    Rational r(1);
    for (int i = 0; i < std::abs(e); ++i) r *= base;
    if (e < 0) return Rational(1) / r;
    return r;
}

bool is_nonpositive_integer(const Rational& x) { return is_integer(x) && x <= 0; }

bool is_negative_even_integer(const Rational& x) {
    return is_integer(x) && x < 0 && mpz_even_p(x.get_num().get_mpz_t());
}

bool is_nonpositive_even_integer(const Rational& x) {
    return is_integer(x) && x <= 0 && mpz_even_p(x.get_num().get_mpz_t());
}

// Local order of the base function (exponent 1) at argument value x0.
long base_order(AtomKind kind, const Rational& x0) {
    switch (kind) {
    case AtomKind::LinearFactor: return x0 == 0 ? 1 : 0;
    case AtomKind::Gamma: return is_nonpositive_integer(x0) ? -1 : 0;
    case AtomKind::GammaR: return is_nonpositive_even_integer(x0) ? -1 : 0;
    case AtomKind::Zeta:
        if (x0 == 1) return -1;
        return is_negative_even_integer(x0) ? 1 : 0;
    }
    return 0;
}

// Leading Laurent coefficient of the base function at a singular/vanishing
// argument value x0, i.e. f(x) ~ c (x - x0)^{base_order}.
double base_leading(AtomKind kind, const Rational& x0) {
    switch (kind) {
    case AtomKind::LinearFactor:
        return 1.0;
    case AtomKind::Gamma: {
        long k = -to_long(x0); // pole at -k
        double c = (k % 2 == 0) ? 1.0 : -1.0;
        return c / sf::gamma_real(k + 1.0);
    }
    case AtomKind::GammaR: {
        // pi^{-x/2} Gamma(x/2) near x = -2k: Gamma(x/2) ~ 2 (-1)^k / (k! (x+2k)).
        long k = -to_long(x0) / 2;
        double c = (k % 2 == 0) ? 2.0 : -2.0;
        return std::pow(kPi, static_cast<double>(k)) * c / sf::gamma_real(k + 1.0);
    }
    case AtomKind::Zeta:
        if (x0 == 1) return 1.0;
        return sf::zeta_prime_trivial_zero(static_cast<int>(-to_long(x0) / 2));
    }
    return 1.0;
}

// Numeric value of the base function at a regular point.
double base_value(AtomKind kind, double x) {
    switch (kind) {
    case AtomKind::LinearFactor: return x;
    case AtomKind::Gamma: return sf::gamma_real(x);
    case AtomKind::GammaR: return std::pow(kPi, -0.5 * x) * sf::gamma_real(0.5 * x);
    case AtomKind::Zeta: return sf::zeta_real(x);
    }
    return 0.0;
}

} // namespace

std::string atom_str(const SAtom& a) {
    const char* name = "";
    switch (a.kind) {
    case AtomKind::LinearFactor: name = "lin"; break;
    case AtomKind::Gamma: name = "Gamma"; break;
    case AtomKind::GammaR: name = "GammaR"; break;
    case AtomKind::Zeta: name = "Zeta"; break;
    }
    std::string out = std::string(name) + "(" + a.arg.str() + ")";
    if (a.exp != 1) out += "^" + std::to_string(a.exp);
    return out;
}

void SFunction::push(AtomKind kind, const Affine& arg, int exp) {
    atoms_.push_back({kind, arg, exp});
}

void SFunction::canonicalize() {
    std::sort(atoms_.begin(), atoms_.end(), atom_order_lt);
    std::vector<SAtom> merged;
    for (const SAtom& a : atoms_) {
        if (!merged.empty() && merged.back().kind == a.kind && merged.back().arg == a.arg) {
            merged.back().exp += a.exp;
            if (merged.back().exp == 0) merged.pop_back();
        } else {
            merged.push_back(a);
        }
    }
    atoms_ = std::move(merged);
}

SFunction SFunction::constant(const Rational& c) {
    if (c == 0) throw DomainError("SFunction constant must be nonzero");
    SFunction f;
    f.constant_ = c;
    return f;
}

SFunction SFunction::linear(const Affine& arg) {
    if (arg.is_zero()) throw DomainError("linear factor with identically zero argument");
    SFunction f;
    f.push(AtomKind::LinearFactor, arg, 1);
    return f;
}

SFunction SFunction::gamma(const Affine& arg) {
    SFunction f;
    f.push(AtomKind::Gamma, arg, 1);
    return f;
}

SFunction SFunction::gamma_r(const Affine& arg) {
    SFunction f;
    f.push(AtomKind::GammaR, arg, 1);
    return f;
}

SFunction SFunction::zeta(const Affine& arg) {
    SFunction f;
    f.push(AtomKind::Zeta, arg, 1);
    return f;
}

SFunction SFunction::zeta_theta(const Affine& arg) {
    SFunction f;
    f.push(AtomKind::Zeta, arg, 1);
    f.push(AtomKind::Zeta, arg - rat(3), 1);
    f.canonicalize();
    return f;
}

SFunction SFunction::zeta_an(const Affine& arg, long m0) {
    SFunction f;
    f.push(AtomKind::Zeta, arg, 1);
    f.push(AtomKind::Zeta, arg - rat(m0 - 1), 1);
    f.canonicalize();
    return f;
}

SFunction SFunction::pochhammer(const Affine& base, long k) {
    if (k < 0) throw DomainError("pochhammer length must be >= 0");
    SFunction f;
    for (long i = 0; i < k; ++i) {
        Affine factor = base + rat(i);
        if (factor.is_zero()) throw DomainError("pochhammer produces an identically zero factor");
        f.push(AtomKind::LinearFactor, factor, 1);
    }
    f.canonicalize();
    return f;
}

SFunction SFunction::inverse() const {
    SFunction f;
    f.constant_ = Rational(1) / constant_;
    f.atoms_ = atoms_;
    for (SAtom& a : f.atoms_) a.exp = -a.exp;
    return f;
}

SFunction SFunction::pow(int e) const {
    if (e == 0) return unit();
    SFunction f;
    f.constant_ = rpow(constant_, e);
    f.atoms_ = atoms_;
    for (SAtom& a : f.atoms_) a.exp *= e;
    return f;
}

SFunction SFunction::shifted_s(const Rational& delta) const {
    SFunction f;
    f.constant_ = constant_;
    f.atoms_ = atoms_;
    for (SAtom& a : f.atoms_) a.arg = a.arg.shifted(delta);
    f.canonicalize();
    return f;
}

long SFunction::order_at(const Rational& s0) const {
    long order = 0;
    for (const SAtom& a : atoms_) order += a.exp * base_order(a.kind, a.arg.eval(s0));
    return order;
}

double SFunction::leading_value_at(const Rational& s0) const {
    double lead = to_double(constant_);
    for (const SAtom& a : atoms_) {
        Rational x0 = a.arg.eval(s0);
        long d = base_order(a.kind, x0);
        if (d != 0) {
            if (a.arg.is_constant())
                throw PoleError("atom " + atom_str(a) + " is singular at every s");
            // f(arg(s))^e ~ c^e slope^{d e} (s - s0)^{d e}
            double c = base_leading(a.kind, x0);
            lead *= ipow(c, a.exp) * ipow(to_double(a.arg.a), static_cast<int>(d) * a.exp);
        } else {
            lead *= ipow(base_value(a.kind, to_double(x0)), a.exp);
        }
        if (!std::isfinite(lead)) throw EvaluationOverflow("leading value exceeds double range");
    }
    return lead;
}

double SFunction::value_at(double s) const {
    double v = to_double(constant_);
    for (const SAtom& a : atoms_) {
        v *= ipow(base_value(a.kind, a.arg.eval(s)), a.exp);
        if (!std::isfinite(v)) throw EvaluationOverflow("value exceeds double range");
    }
    return v;
}

std::string SFunction::str() const {
    std::string out;
    if (atoms_.empty() || constant_ != 1) out = rat_str(constant_);
    for (const SAtom& a : atoms_) {
        if (!out.empty()) out += " * ";
        out += atom_str(a);
    }
    return out;
}

SFunction mul(const SFunction& f, const SFunction& g) {
    SFunction h;
    h.constant_ = f.constant_ * g.constant_;
    h.atoms_ = f.atoms_;
    h.atoms_.insert(h.atoms_.end(), g.atoms_.begin(), g.atoms_.end());
    h.canonicalize();
    return h;
}

bool eq_sfunction(const SFunction& f, const SFunction& g) { return f.atoms() == g.atoms(); }

bool operator==(const SFunction& f, const SFunction& g) {
    return f.constant_factor() == g.constant_factor() && f.atoms() == g.atoms();
}

} // namespace somf::sym
