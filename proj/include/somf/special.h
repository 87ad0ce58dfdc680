#pragma once

#include <functional>

#include "somf/rational.h"

namespace somf::sf {

// Real Gamma. Throws PoleError at non-positive integers and EvaluationOverflow
// when the result is not representable.
double gamma_real(double x);

// log|Gamma(x)| together with the sign of Gamma(x); defined away from poles.
double lgamma_signed(double x, int& sign);

// Real Riemann zeta on the real axis, s != 1. Euler-Maclaurin for s > -1/2 and
// the functional equation below that.
double zeta_real(double s);

// zeta'(-2k) for k >= 1, via zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2^{2k+1} pi^{2k}).
double zeta_prime_trivial_zero(int k);

// Modified Bessel K_v(y) = (1/2) Integral_0^inf exp(-y(t+1/t)/2) t^v dt/t, y > 0.
// Evaluated from that defining integral after t = e^u symmetrization; no library
// Bessel call so the quadrature error stays controlled here.
double bessel_k(int v, double y);

// Bessel J_nu(y) for nu >= 0, y >= 0. Power series for small y, the integral
// representation J_nu(y) = (1/pi) Int_0^pi cos(nu tau - y sin tau) dtau
//   - sin(nu pi)/pi Int_0^inf exp(-y sinh t - nu t) dt for large y.
double bessel_j(double nu, double y);

// (z)_k = z (z+1) ... (z+k-1), k >= 0.
double pochhammer_num(double z, int k);

// Gauss 2F1(a,b;c;z). Terminates exactly when a or b is a non-positive integer
// (any z); otherwise requires |z| < 1. DomainError if c is a non-positive
// integer reached before termination.
double hyp2f1(double a, double b, double c, double z);

// Exact rational branch of the terminating series: a must be a non-positive
// integer. Used wherever the polynomial identities need exact coefficients.
Rational hyp2f1_exact(const Rational& a, const Rational& b, const Rational& c, const Rational& z);

struct F4Partial {
    double value;
    double tail_bound; // rigorous only when the shell ratio is < 1; +inf otherwise
};

// Appell F4(a,b;c,d;x,y) summed over total degree m+n <= order, with a
// geometric tail estimate from the last shells. Convergence domain
// sqrt|x| + sqrt|y| < 1 is enforced.
F4Partial appell_f4_partial(double a, double b, double c, double d, double x, double y, int order);

// Adaptive Simpson quadrature on [lo, hi] to absolute tolerance tol.
// Exposed because several modules build radial integrals out of it.
double integrate(const std::function<double(double)>& f, double lo, double hi, double tol);

} // namespace somf::sf
