#pragma once

#include <vector>

#include "somf/rational.h"

// Exact finite-place computations on the split quadratic space U_n: isotropic
// counts over F_p, twisted character sums mod p^r, and the local integral
// J(s, eta, Phi_p) for unramified data. All arithmetic is exact; character
// sums live in Z[zeta_{p^r}] reduced mod the cyclotomic polynomial, so a sum
// of roots of unity that collapses to an integer is recognized exactly.

namespace somf::padic {

// Coordinates on U_n are u = (u_1, ..., u_{2n}) with the split form pairing
// slot i against slot 2n+1-i:
//
//   q(u) = u_1 u_{2n} + u_2 u_{2n-1} + ... + u_n u_{n+1}.
//
// In this layout the standard unramified vector is eta = (1, 0, ..., 0, 1),
// with q(eta) = 1.
long long q_split(const std::vector<long long>& u);

// Bilinear form (u, v) = q(u+v) - q(u) - q(v).
long long pair_split(const std::vector<long long>& u, const std::vector<long long>& v);

std::vector<long long> eta_standard(long n);

// eta integral with q(eta) a unit mod p.
bool is_unramified(long n, long p, const std::vector<long long>& eta);

// Element of Z[zeta_{p^r}], stored as the coefficient vector of the residue
// mod the cyclotomic polynomial Phi_{p^r} (degree phi(p^r) = p^{r-1}(p-1)).
// The class of sums computed here is Galois-stable and always collapses to a
// rational integer; the reduced representation makes that collapse a visible,
// checkable fact instead of a floating-point coincidence.
struct CycloSum {
    long p = 0;
    long r = 0;
    std::vector<long long> coeffs;

    bool is_integer() const;
    // The collapsed value. Throws NotConstant if the residue is not a plain
    // integer.
    long long as_integer() const;
};

// Reduce a raw exponent-count vector (counts[a] copies of zeta^a, a in
// [0, p^r)) mod Phi_{p^r}.
CycloSum cyclo_from_counts(long p, long r, std::vector<long long> counts);

// Number of u in U_n(F_p) with q(u) = 0, by exhaustive enumeration.
// Budget: p^{2n} <= budget, else BudgetExceeded. p = 2 is allowed.
long long count_isotropic(long n, long p, long long budget = 100000000);

// The same count via the recurrence C(1) = 2p - 1,
// C(n+1) = p C(n) + (p-1) p^{2n}; no enumeration, no budget.
long long count_isotropic_recurrence(long n, long p);

// S_n = sum over v in U_n(Z/p) with q(v) = 0 of psi((eta, v)/p), where
// psi(a/p) = exp(2 pi i a / p). Exact; p = 2 is allowed.
CycloSum char_sum_s(long n, long p, const std::vector<long long>& eta,
                    long long budget = 100000000);

// Sum over x in U_n(Z/p^r) with q(x) = 0 mod p^r of psi((eta, x)/p^r), for
// r >= 2 and odd p. Vanishes whenever eta is unramified; eta is not
// constrained here so the trivial-character detector (eta = 0, a positive
// count) stays expressible.
CycloSum r2_vanishing(long n, long p, long r, const std::vector<long long>& eta,
                      long long budget = 100000000);

// J(s, eta, Phi_p) = sum_{0 <= r <= r_max} p^{-rs} T_r with
// T_r = sum over x in U_n(Z/p^r), q(x) = 0 mod p^r, of psi((eta, x)/p^r),
// each residue class carrying measure 1 (so vol(U_n(O)) = 1, T_0 = 1).
// Requires odd p, unramified eta and integer s; equals 1 - p^{-(s-n+1)}
// once r_max >= 1.
Rational j_local(const Rational& s, long n, long p, const std::vector<long long>& eta,
                 long r_max, long long budget = 100000000);

} // namespace somf::padic
