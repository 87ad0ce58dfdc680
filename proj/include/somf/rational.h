#pragma once

#include <gmpxx.h>

#include <string>

#include "somf/errors.h"

namespace somf {

// Exact rational scalar. GMP keeps the integers arbitrary precision; nothing in
// the symbolic layer ever rounds.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw DomainError("expected an integer, got " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw EvaluationOverflow("integer too large: " + r.get_str());
    return r.get_num().get_si();
}

inline double to_double(const Rational& r) { return r.get_d(); }

// Formats 7/2 as "7/2" and 4/1 as "4".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

// Affine function a*s + b of the single global variable s, with exact rational
// coefficients. This is the argument type of every symbolic atom and every
// walk coordinate.
struct Affine {
    Rational a, b;

    Affine() : a(0), b(0) {}
    Affine(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    Rational eval(const Rational& s0) const { return a * s0 + b; }
    double eval(double s0) const { return to_double(a) * s0 + to_double(b); }

    bool is_constant() const { return a == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    Affine operator+(const Affine& o) const { return {a + o.a, b + o.b}; }
    Affine operator-(const Affine& o) const { return {a - o.a, b - o.b}; }
    Affine operator-() const { return {-a, -b}; }
    Affine operator*(const Rational& c) const { return {a * c, b * c}; }
    Affine operator+(const Rational& c) const { return {a, b + c}; }
    Affine operator-(const Rational& c) const { return {a, b - c}; }

    // Substitutes s -> s + delta, e.g. shifting a whole c-function.
    Affine shifted(const Rational& delta) const { return {a, b + a * delta}; }

    bool operator==(const Affine& o) const { return a == o.a && b == o.b; }
    bool operator<(const Affine& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }

    // "s", "2s-29", "s/2-9/2", "-4". Deterministic, used in canonical forms
    // and golden files, so the format is part of the contract.
    std::string str() const;
};

std::string affine_str(const Affine& f);

inline std::string Affine::str() const { return affine_str(*this); }

} // namespace somf
