#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "somf/linalg.h"
#include "somf/quad_space.h"

namespace somf::vl {

using Cplx = std::complex<double>;

// Forms on V' coordinates: (n+2)-vectors on the ordered basis (v1, v2, u_1..u_n).
// pair_vp is the polarized pairing restricted to V'; qprime_vp the quadratic form.
double pair_vp(const qs::QuadSpace& sp, const VecD& x, const VecD& y);
Cplx pair_vp_c(const qs::QuadSpace& sp, const VecC& x, const VecC& y);
double qprime_vp(const qs::QuadSpace& sp, const VecD& x);
VecD vp_basis(const qs::QuadSpace& sp, int i);

// Value of a weight-ell function: coefficients F_v against the divided-power
// basis [x^{ell+v}][y^{ell-v}], v = -ell..ell, stored at index ell + v.
struct VlVector {
    int ell;
    std::vector<Cplx> coeffs;

    explicit VlVector(int ell_);
    Cplx& at(int v);
    const Cplx& at(int v) const;
    // Zero outside [-ell, ell]; lets difference formulas run off the edge.
    Cplx at_or_zero(int v) const;

    VlVector& operator+=(const VlVector& o);
    VlVector& operator-=(const VlVector& o);
    VlVector& operator*=(Cplx c);
};
VlVector operator+(VlVector a, const VlVector& b);
VlVector operator-(VlVector a, const VlVector& b);
VlVector operator*(Cplx c, VlVector a);
double max_abs(const VlVector& w);

// Action of the three K cap M generator classes on values. eps scales slot v
// by (-1)^{ell+v}; a plane rotation k with k(v1+iv2) = z(v1+iv2) scales slot v
// by z^v; eps' swaps slots v and -v.
VlVector km_eps(const VlVector& w);
VlVector km_rot(Cplx z, const VlVector& w);
VlVector km_eps_prime(const VlVector& w);

// The same generators as matrices on V' coordinates. rot_v2_matrix(theta) has
// z = exp(-i theta); rot_un_matrix rotates the (u_j1, u_j2) definite plane;
// eps_prime_matrix negates v2 and u_n (so it stays in the special group).
MatD rot_v2_matrix(const qs::QuadSpace& sp, double theta);
MatD rot_un_matrix(const qs::QuadSpace& sp, int j1, int j2, double theta);
MatD eps_prime_matrix(const qs::QuadSpace& sp);

// Levi coordinates (t, m) with m an isometry of V'.
struct MPoint {
    double t = 1.0;
    MatD m;
};
// Validates t != 0 and that m preserves q' to 1e-10.
MPoint make_mpoint(const qs::QuadSpace& sp, double t, MatD m);

// u(t, m) = sqrt(2) t i (eta, m(i v1 - v2)).
Cplx u_eta(const qs::QuadSpace& sp, const VecD& eta, double t, const MatD& m);

// Closed-form generalized Whittaker value: slot v is
// t^ell |t| (|u|/u)^v K_v(|u|), u = u_eta(t, m). Throws EtaNotAdmissible for
// eta = 0 or q'(eta) < 0, DegeneratePoint if u vanishes at the point.
VlVector whittaker_w(const qs::QuadSpace& sp, const VecD& eta, const MPoint& p, int ell);

// A sampled weight-ell function of (x, t, m), x in V' coordinates.
using VlFunction = std::function<VlVector(const VecD& x, double t, const MatD& m)>;

// Coefficients of 2 D F against the four output families. Slots are indexed by
// v = -ell+1..ell (stored at v + ell - 1); the u_j families carry one vector
// per j in [0, n).
struct SchmidOutput {
    int ell = 0;
    int n = 0;
    std::vector<Cplx> y_um, x_um;
    std::vector<std::vector<Cplx>> y_uj, x_uj;

    static int slot(int ell, int v);
    Cplx y_um_at(int v) const;
    Cplx x_um_at(int v) const;
    Cplx y_uj_at(int j, int v) const;
    Cplx x_uj_at(int j, int v) const;
};
double max_abs(const SchmidOutput& o);

// Evaluates the coordinate differential operator at (x0, p) by Richardson
// central differences with step h. The V'-derivatives run along t m v1,
// t m v2, t m u_j; the M-derivatives along the one-parameter subgroups of
// (v1 wedge u_j), (v2 wedge u_j), combined with i for the complexified
// directions. Throws StencilFailure if F fails anywhere on the stencil.
SchmidOutput schmid_apply(const qs::QuadSpace& sp, const VlFunction& F, int ell,
                          const VecD& x0, const MPoint& p, double h = 1e-4);

// Max scaled residual of the four difference-differential equations
//   (t dt - (ell+v)) F_{v-1} = -u F_v
//   (t dt - (ell-v+1)) F_v = -conj(u) F_{v-1}
//   DM_{iv1-v2,u_j} F_v = -i sqrt(2) t (eta, m u_j) F_{v-1}
//   DM_{iv1+v2,u_j} F_{v-1} = -i sqrt(2) t (eta, m u_j) F_v
// over the samples, for F given by a (t, m) callback or the closed form.
using WFunction = std::function<VlVector(double t, const MatD& m)>;
double whittaker_residuals_fn(const qs::QuadSpace& sp, const VecD& eta, int ell,
                              const WFunction& F, const std::vector<MPoint>& samples,
                              double h = 1e-4);
double whittaker_residuals(const qs::QuadSpace& sp, const VecD& eta, int ell,
                           const std::vector<MPoint>& samples, double h = 1e-4);

// Scalar function on isometries of V'.
using MFunction = std::function<Cplx(const MatD& m)>;

// Degenerate (eta = 0) solution template: slot 0 is beta t^ell |t|, slots
// +-ell are |t| fl(m) and |t| fl(m eps'), everything else 0. fl must satisfy
// fl(mk) = z(k)^{-ell} fl(m); this is spot-checked at construction and
// EquivarianceViolation is thrown past 1e-8.
VlFunction constant_term_template(const qs::QuadSpace& sp, int ell, Cplx beta,
                                  const MFunction& fl);

// Inducing section of the weight-ell Eisenstein series on SO(V') at its
// special point: m -> (c, v1 - i v2)^ell / ||c_2||^{2 ell} with c = m^{-1} b0
// and ||c_2|| the norm of the projection of c to the definite plane. For
// isotropic b0 the denominator never vanishes.
MFunction holomorphic_section(const qs::QuadSpace& sp, int ell, const VecD& b0);

// so(V') generator a wedge b acting by c -> (b,c) a - (a,c) b, and its
// exponential.
MatD wedge_matrix(const qs::QuadSpace& sp, const VecD& a, const VecD& b);
MatD exp_so(const MatD& x, double lambda);

} // namespace somf::vl
