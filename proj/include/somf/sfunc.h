#pragma once

#include <string>
#include <vector>

#include "somf/rational.h"

namespace somf::sym {

// Multiplicative atoms for functions of the single variable s. ZetaTheta and
// ZetaAn inputs are expanded into plain Zeta atoms at construction, so only
// these four kinds are ever stored.
enum class AtomKind { LinearFactor, Gamma, GammaR, Zeta };

struct SAtom {
    AtomKind kind;
    Affine arg;
    int exp;

    bool operator==(const SAtom& o) const { return kind == o.kind && arg == o.arg && exp == o.exp; }
};

std::string atom_str(const SAtom& a);

// Product of a nonzero rational constant and atoms, kept in canonical form:
// atoms sorted by (kind, argument), like atoms merged, zero exponents dropped.
// Everything here is exact; doubles appear only in value_at and
// leading_value_at outputs.
class SFunction {
public:
    SFunction() : constant_(1) {}

    static SFunction unit() { return SFunction(); }
    static SFunction constant(const Rational& c);
    static SFunction linear(const Affine& arg);   // rejects the identically zero argument
    static SFunction gamma(const Affine& arg);
    static SFunction gamma_r(const Affine& arg);  // pi^{-x/2} Gamma(x/2)
    static SFunction zeta(const Affine& arg);
    static SFunction zeta_theta(const Affine& arg);        // zeta(x) zeta(x-3)
    static SFunction zeta_an(const Affine& arg, long m0);  // zeta(x) zeta(x-m0+1)
    static SFunction pochhammer(const Affine& base, long k); // product of k linear factors

    SFunction inverse() const;
    SFunction pow(int e) const;
    // Substitutes s -> s + delta in every atom argument.
    SFunction shifted_s(const Rational& delta) const;

    // Exact zero/pole order at a rational point. Model: LinearFactor vanishes
    // at its root; Gamma has simple poles at non-positive integers; GammaR at
    // non-positive even integers; Zeta has a simple pole at 1 and simple
    // zeros at negative even integers, and is nonzero elsewhere on the reals.
    long order_at(const Rational& s0) const;

    // lim_{s->s0} f(s) / (s-s0)^{order_at(s0)}: vanishing and blowing-up
    // factors are stripped exactly, survivors evaluated numerically.
    double leading_value_at(const Rational& s0) const;

    // Plain numeric evaluation; intended off the singular lattice.
    double value_at(double s) const;

    std::string str() const;

    const Rational& constant_factor() const { return constant_; }
    const std::vector<SAtom>& atoms() const { return atoms_; }

    friend SFunction mul(const SFunction& f, const SFunction& g);

private:
    Rational constant_;
    std::vector<SAtom> atoms_;

    void push(AtomKind kind, const Affine& arg, int exp);
    void canonicalize();
};

SFunction mul(const SFunction& f, const SFunction& g);
inline SFunction operator*(const SFunction& f, const SFunction& g) { return mul(f, g); }
inline SFunction operator/(const SFunction& f, const SFunction& g) { return mul(f, g.inverse()); }

// Constant-insensitive equality: the formulas this models are pinned down
// only up to nonzero constants, so comparisons ignore the constant factor.
bool eq_sfunction(const SFunction& f, const SFunction& g);

// Strict equality including the constant.
bool operator==(const SFunction& f, const SFunction& g);

} // namespace somf::sym
