#pragma once

#include <complex>
#include <vector>

#include "somf/linalg.h"
#include "somf/rational.h"

namespace somf::fta {

using Cplx = std::complex<double>;

// Point of V'(R) split into its definite plane V_2 (coordinates along v1, v2)
// and the complement V_n (coordinates along u_1..u_n). All closed forms below
// are stated in the pairing-normalized scaling, where (v_i, v_j) = delta_ij.
struct XPoint {
    std::vector<double> x2; // size 2
    std::vector<double> xn; // size n >= 0

    XPoint(std::vector<double> x2_, std::vector<double> xn_);
    long n() const { return static_cast<long>(xn.size()); }
};

double norm2_x2(const XPoint& x); // ||x_2||^2
double norm2_xn(const XPoint& x); // ||x_n||^2

// The three derived scalars every closed form is written in:
//   a1  = sqrt(2) (x_2, i v1 + v2)
//   b1  = (||x_2||^2 - ||x_n||^2 - 2) / 2
//   tau = tau(sqrt2 x_n, sqrt2 x_2), with tau^2 = b1^2 + 2 ||x_2||^2.
Cplx a1_of(const XPoint& x);
double b1_of(const XPoint& x);
double tau_hat(const XPoint& x);

// Majorant norm-square of the isotropic lift (1, x, -q'(x)); equals tau^2.
double lift_norm2(const XPoint& x);

// Homogeneous polynomial of degree 2*ell in (x, y); coeff[k] multiplies
// x^k y^{2ell-k}, equivalently at_v(v) is the x^{ell+v} y^{ell-v} monomial
// coefficient.
struct PolyXY {
    long ell = 0;
    std::vector<Cplx> coeff;

    explicit PolyXY(long ell_);
    Cplx& at_v(long v);
    const Cplx& at_v(long v) const;
};
double max_abs(const PolyXY& p);
double max_abs_diff(const PolyXY& p, const PolyXY& q);

// (cxx x^2 + cxy xy + cyy y^2)^ell expanded in the monomial basis.
PolyXY quadratic_power(Cplx cxx, Cplx cxy, Cplx cyy, long ell);

// Weight-ell inducing section at w n(x): the projection of the lift to the
// span of (v1, v2, e+f), raised to the ell-th power, divided by tau^{s+ell}.
// The returned coefficients carry the division already.
PolyXY inducing_section(const XPoint& x, long ell, double s);

// (a2 + b^2)^{(ell-v)/2} 2F1((v-ell)/2, (v+ell+1)/2; v+1; a2/(a2+b^2)),
// evaluated through the Euler-transformed series, which terminates for both
// parities of ell - v. Needs 0 <= v <= ell and a2 >= 0. The hypergeometric
// form on the left requires b > 0; the terminating sum is a polynomial in b
// and is what analytically continues it to b <= 0.
double scaled_2f1(long v, long ell, double a2, double b);

// Normalized closed-form transform J_v and the integral I_v it packages:
//   J_v = Gamma(ell+1)/Gamma(ell-n/2+1) pi^{-(n+2)/2} tau^{2ell+1}
//         I_v / ((ell+v)! (ell-v)!).
// j_closed does not depend on n. Both throw PhaseUndefined when x2 = 0 with
// v != 0, and DomainError for |v| > ell (and, for iv_closed, 2 ell < n).
Cplx j_closed(long v, const XPoint& x, long ell);
Cplx iv_closed(long v, const XPoint& x, long ell, long n);

// Appell-F4 route to I_v (v >= 0 only; negative v goes through the mirror
// rule). Partial sum of total degree <= order; *tail_abs, when non-null,
// receives the prefactor-scaled geometric tail bound. Interior points
// ||x_2|| + ||x_n|| < sqrt2 only.
Cplx iv_appell(long v, const XPoint& x, long ell, long n, int order,
               double* tail_abs = nullptr);

// Radial-quadrature route to I_v: the single t-integral of
//   t^{A+n/2+1} J_{n/2+A}(||x_n|| t) J_v(||x_2|| t) K_v(sqrt2 t),
// A = ell - n/2, times its phase and Gamma prefactors. Negative v is reduced
// to positive v by flipping the sign of the v2-coordinate. tol is the
// absolute tolerance of the t-integral.
Cplx iv_quadrature(long v, const XPoint& x, long ell, long n, double tol);

// Expands (a x^2 + 2b xy - a^* y^2)^ell against the two-sided 2F1 sum and
// returns the max absolute coefficient difference. ell even >= 0, b > 0.
double poly_identity_2f1sum(long ell, Cplx a, double b);

// Generating identity between the I_v family (assembled from iv_closed over
// divided powers) and the inducing section at s = ell + 1. Returns
// max |LHS - RHS| / max(1, max |RHS|) over monomial coefficients. The
// identity is an even-ell statement (its polynomial expansion only holds
// there); odd ell throws DomainError.
double ftrank2_identity(const XPoint& x, long ell, long n);

// Slot-v component of the Fourier transform of the s = ell+1 section at
// omega, given in V' coordinates (v1, v2, u_1..u_n); the assembly convention
// is FT = sum_v transform_slot(v) x^{ell+v} y^{ell-v} / ((ell+v)!(ell-v)!).
// Supported on q'(omega) > 0; returns 0 outside.
Cplx transform_slot(long v, const VecD& omega, long ell, long n);

// Ratio of transform_slot to (2pi)^{2ell+2-(n+2)/2} q'(omega)^{ell-n/2} times
// the closed-form Whittaker value at 2 pi omega, sampled over several omega
// and all slots; asserts constancy to 1e-6 and returns the rationalized
// constant. Throws NotConstant or RationalizationFailed.
Rational extract_cln(long ell, long n);

// Continued-fraction rationalization: best p/q with q <= max_den and
// |x - p/q| <= tol, else RationalizationFailed.
Rational rationalize(double x, long max_den, double tol);

// Quadrature of int_0^inf u^{dimU/2} (1+u)^{-s} du/u against
// Gamma(dimU/2) Gamma(s - dimU/2) / Gamma(s); returns the relative residual.
// Throws ConvergenceError when s - dimU/2 <= 1/2 (divergent or too close to
// it for the advertised accuracy; the boundary case sits exactly there).
double beta_check(long dim_u, double s);

} // namespace somf::fta
