#pragma once

#include <string>
#include <utility>
#include <vector>

#include "somf/rational.h"
#include "somf/sfunc.h"

// Intertwining-operator c-functions for the degenerate principal series,
// assembled exactly as products of Gamma, Gamma_R, zeta and linear atoms.
// Everything is symbolic; order_at / leading_value_at on the results give
// the pole-and-zero bookkeeping that drives the residue arguments.

namespace somf::cfn {

using sym::SFunction;

// Archimedean factor of the long rank-three intertwiner on the split
// pieces of signature (3, m+3), at even K-type parameter ell:
//
//   ((s-ell-1)/2)_{ell/2}    Gamma(s-2-m/2)    ((s-2-m-ell)/2)_{ell/2}
//   --------------------- *  -------------- *  -----------------------
//   ((s-2)/2)_{ell/2+1}       Gamma(s-2)       ((s-3-m)/2)_{ell/2+1}
//
// Throws DomainError unless ell is even and nonnegative and m >= 0.
SFunction c_b3(long ell, long m);

// Two-step SL(3) intertwiner factor at even K-type parameter ell:
// ((s-ell-1)/2)_{ell/2} / (s/2-1)_{ell/2+1}.
SFunction c_sl3(long ell);

// Dense polynomial in s, ascending coefficients; coeffs[k] multiplies s^k.
using PolyS = std::vector<Rational>;

Rational poly_eval(const PolyS& p, const Rational& s0);
std::string poly_str(const PolyS& p);

// D_ell(s) = sum_j (-4)^j ell! / ((2j)! (ell/2 - j)!) (s/2 - 1)_j, summed
// term by term. Even ell only.
PolyS d_ell_bruteforce(long ell);

// 2^ell ((s - ell - 1)/2)_{ell/2}, expanded.
PolyS d_ell_closed(long ell);

// The constant ratio d_ell_bruteforce / d_ell_closed, which is always +-1.
// Throws NotConstant if the two polynomials do not agree up to sign.
int d_ell_sign(long ell);

// --- Quaternionic tower on the split form of E8 (n = 8, s0 = 9) ---

// Finite part of c(w0, s): zeta(2s-29) zeta(s-28) zeta(s-23) zeta(s-19)
// over zeta(2s-28) zeta(s) zeta(s-5) zeta(s-9).
SFunction e8_cf_w0();

// Finite part of c(w_{-1}, s): same display with zeta(s-27) replacing
// zeta(s-28).
SFunction e8_cf_wm1();

// Middle block of the archimedean factor, after telescoping the Gamma
// ratios: Gamma(s-29/2) Gamma(s-19) / (Gamma(s-6) Gamma(s-11)).
SFunction e8_cmid();

// The same block as the raw five-factor display, before telescoping.
SFunction e8_cmid_display();

// Archimedean factor of c(w0, s): c_b3(8,8)(s-17) * e8_cmid * c_b3(8,8)(s).
SFunction e8_cinf_w0();

// Archimedean step distinguishing w_{-1} from w0, as a function of the
// Pochhammer truncation 0 <= kk <= 4:
// Gamma_R(s-27)/Gamma_R(s-26) * ((28-s)/2)_kk / ((s-26)/2)_kk.
SFunction e8_wm1_last_step(long kk);

// --- Holomorphic rank-two tower at K-type 8 (cumulative c-products) ---

// i = 1, 2, 3: the product of the first i steps of the three-reflection
// walk, each step contributing a zeta ratio, a Gamma(_R) ratio and a
// Pochhammer ratio. Every step has order exactly +1 at s = 8.
SFunction holeis_step(int i);

// --- Type-D tower, m0 = 4k, at K-type ell = m0 ---

// Cumulative c-product after i = 1, 2, 3 steps of the [1,2,1]-type walk.
SFunction typed_cw(int i, long k);

// Finite part of c(w0, s), telescoped: zeta(s-2-m0) zeta(s-3-2m0) /
// (zeta(s) zeta(s-1-m0)).
SFunction typed_cf_w0(long k);

// The same in raw display form, including the cancelling factors.
SFunction typed_cf_w0_display(long k);

// Archimedean factor of c(w0, s); equals c_b3(4k, 8k) identically.
SFunction typed_cinf_w0(long k);

// Finite part of c(w', s) for the next-to-long element, telescoped:
// zeta(s-2-m0) zeta(s-2-2m0) / (zeta(s) zeta(s-1-m0)).
SFunction typed_cf_wp(long k);

// Raw display of the same.
SFunction typed_cf_wp_display(long k);

// Archimedean factor of c(w', s) with Pochhammer truncation 0 <= j <= m0/2.
SFunction typed_cj_wp(long k, long j);

// --- Rank-one comparisons on signature (3, 11) at K-type 8 ---

// zeta(s-6) zeta(s-9) / (zeta(s) zeta(s-5)), the unnormalized rank-one
// constant-term coefficient.
SFunction rank1_aux();

// c(w0, s) for the degenerate series there, telescoped:
// zeta(s-6) zeta(s-11) / (zeta(s) zeta(s-5)).
SFunction b3type8_cw0();

// The raw five-ratio display that telescopes to b3type8_cw0.
SFunction b3type8_cw0_display();

// sigma_{s-11}(n) / zeta(s-10) at real s: exact divisor power sum over a
// numeric zeta value. Throws DomainError for n <= 0.
double sigma_over_zeta(long n, double s);

// Replace each Gamma_R(x) atom by Gamma(x/2), dropping the pi-power
// prefactor. Order and zero/pole locations are unchanged, so displays
// stated only up to constants can be compared after expansion.
SFunction expand_gamma_r(const SFunction& f);

// Name-based dispatch for the CLI. Parameters a, b feed the bracketed
// arguments where the family needs them (e.g. "typed-cw" takes i = a,
// k = b; "typed-cj-wp" takes k = a, j = b). Throws UnknownName.
SFunction c_named(const std::string& name, long a = 0, long b = 0);
std::vector<std::string> named_list();

struct OrderRow {
    std::string label;
    Rational point;
    long order;
    double leading;
};

// Orders and leading values of f at each query point.
std::vector<OrderRow> order_report(const SFunction& f, const std::vector<Rational>& points);

// The standard sweep over every named family at its distinguished points,
// one line per row, diffable against the checked-in table.
std::string standard_order_sweep();

} // namespace somf::cfn
