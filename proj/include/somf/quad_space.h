#pragma once

#include <complex>

#include "somf/linalg.h"
#include "somf/rng.h"

namespace somf::qs {

// Split quadratic space V = Qe + V' + Qf with V' = V_2 + V_n, ordered basis
// (e, v1, v2, u_1..u_n, f). q(ae + w + bf) = ab + q2(w_2) - qn(w_n), where the
// gram matrices give the positive-definite forms q2 and qn.
struct QuadSpace {
    int n;
    MatQ gram2; // 2x2, q2(x) = x^T gram2 x
    MatQ gramN; // n x n

    int dim() const { return n + 4; }

    // Identity gram: q2(v_i) = 1, so the polarized pairing has (v_i, v_i) = 2.
    static QuadSpace standard(int n);
    // Gram 1/2: the polarized pairing is +1 on v_i, -1 on u_j. This is the
    // scaling in which the projection and Fourier-transform closed forms hold
    // with their printed coefficients.
    static QuadSpace pair_normalized(int n);
};

// Index layout helpers.
inline int idx_e() { return 0; }
inline int idx_v1() { return 1; }
inline int idx_v2() { return 2; }
inline int idx_u(int j) { return 3 + j; } // j in [0, n)
inline int idx_f(const QuadSpace& sp) { return sp.n + 3; }

VecQ zero_vec(const QuadSpace& sp);
VecQ basis_vec(const QuadSpace& sp, int i);

Rational q_of(const QuadSpace& sp, const VecQ& v);
double q_of_d(const QuadSpace& sp, const VecD& v);

// Polarized bilinear form (x, y) = q(x+y) - q(x) - q(y); (e,f) = 1 and
// (v_i, v_i) = 2 q2(v_i).
Rational pair_b(const QuadSpace& sp, const VecQ& x, const VecQ& y);
double pair_b_d(const QuadSpace& sp, const VecD& x, const VecD& y);
std::complex<double> pair_b_c(const QuadSpace& sp, const VecC& x, const VecC& y);
// Normalized variant (x, y)/2, under which the identity gram has (v_i, v_j) = delta_ij.
Rational pair_n(const QuadSpace& sp, const VecQ& x, const VecQ& y);

// Involution: negates V_n, swaps the e and f coefficients.
VecQ iota(const QuadSpace& sp, VecQ v);
VecD iota_d(const QuadSpace& sp, VecD v);
VecC iota_c(const QuadSpace& sp, VecC v);

// Positive-definite norm (v, iota(v)).
Rational norm2(const QuadSpace& sp, const VecQ& v);
double norm2_d(const QuadSpace& sp, const VecD& v);

enum class EtaClass { Zero, NegativeNorm, Rank1, Rank2 };
const char* eta_class_name(EtaClass c);

// Classification by q'(eta): Zero, negative, zero-but-nonzero-vector (rank
// one), positive (rank two). Throws DomainError off V'.
EtaClass classify_eta(const QuadSpace& sp, const VecQ& eta);

// Unipotent n(x) for x in V', as a dim x dim matrix on column coordinates.
MatQ nx_matrix(const QuadSpace& sp, const VecQ& x);

// Orthogonal projection onto the three-dimensional subspace spanned by
// v1, v2, e+f, written on the basis (x^2, xy, y^2) with x^2 = iv1 - v2,
// xy = (e+f)/sqrt(2), y^2 = iv1 + v2.
struct ProjV3 {
    std::complex<double> cxx, cxy, cyy;
};
ProjV3 proj_v3(const QuadSpace& sp, const VecQ& v);
ProjV3 proj_v3_d(const QuadSpace& sp, const VecD& v);

// tau^2 as a function of the two norm-squares: (1 + (a - b)/4)^2 + b.
Rational tau2_of_norms(const Rational& nxn2, const Rational& nx22);
double tau(const QuadSpace& sp, const VecQ& xn, const VecQ& x2);

// Isometries of V' as (n+2)x(n+2) matrices on the (v1, v2, u_1..u_n)
// coordinates. Built from rotations in definite planes and boosts in mixed
// planes; requires both grams to be the same scalar multiple of the identity.
MatD random_isometry(const QuadSpace& sp, Pcg32& rng, int factors);
// Same group, but with rational entries (Pythagorean rotations and rational
// boosts), so invariance checks can run exactly.
MatQ random_isometry_exact(const QuadSpace& sp, Pcg32& rng, int factors);

// V' coordinate extraction/embedding between dim and n+2 vectors.
VecQ vprime_coords(const QuadSpace& sp, const VecQ& v);
VecQ vprime_vec(const QuadSpace& sp, const VecQ& coords);
VecD vprime_vec_d(const QuadSpace& sp, const VecD& coords);
// Extends an isometry of V' to all of V, fixing e and f.
MatQ embed_vprime(const QuadSpace& sp, const MatQ& m);
MatD embed_vprime_d(const QuadSpace& sp, const MatD& m);

} // namespace somf::qs
