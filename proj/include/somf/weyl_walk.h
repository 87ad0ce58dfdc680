#pragma once

#include <string>
#include <vector>

#include "somf/linalg.h"
#include "somf/rational.h"

namespace somf::weyl {

// Character of the split torus in Euclidean coordinates: one affine function
// of s per ambient coordinate. Everything here is exact rational arithmetic.
using AffineChar = std::vector<Affine>;

// A fixed Euclidean root model: ambient dimension, simple roots as rational
// vectors, standard dot product. Only the three configurations the
// verifications need are provided; this is not general Weyl-group software.
struct RootModel {
    int dim = 0;
    std::vector<VecQ> simple; // simple[j - 1] is the j-th simple root

    // alpha1 = (0,1,-1,0), alpha2 = (0,0,1,-1), alpha3 = (0,0,0,1),
    // alpha4 = (1,-1,-1,-1)/2; alpha1 and alpha2 are the long roots.
    static RootModel f4();
    // alpha1 = r1 - r2, alpha2 = r2.
    static RootModel rank2_b();
    // alpha1 = r1 - r2, alpha2 = r2 - r3, alpha3 = r3.
    static RootModel rank3_b();
};

struct WalkStep {
    int j = 0;        // 1-based index of the simple root applied
    Affine param;     // alpha_j . (pre-reflection character)
    AffineChar after; // character after the reflection
};

// Dot product of a character with a fixed rational vector, affine in s.
Affine inner(const AffineChar& lambda, const VecQ& v);

// lambda - (2 (lambda, alpha_j) / (alpha_j, alpha_j)) alpha_j, j 1-based.
AffineChar reflect(const RootModel& model, const AffineChar& lambda, int j);

// Applies the word left to right. Each step records the rank-one parameter,
// the dot product of alpha_j with the character being reflected.
std::vector<WalkStep> walk(const RootModel& model, const AffineChar& start,
                           const std::vector<int>& word);

// Exact coefficients of lambda on the simple roots, affine in s. Solves the
// square change-of-basis system; throws SingularBasis if the roots do not
// span (cannot happen for the fixed models, kept as a guard).
std::vector<Affine> to_simple_root_coords(const RootModel& model, const AffineChar& lambda);

// Square-integrability criterion: true iff every simple-root coefficient of
// every character, evaluated at s = s0, is strictly negative. Vacuously true
// on an empty list.
bool jacquet_all_negative(const RootModel& model, const std::vector<AffineChar>& lambdas,
                          const Rational& s0);

// One header line "start; (...)" followed by one line per step
// "[j]; (...); param". The exact text is diffed against checked-in tables.
std::string transcript(const RootModel& model, const AffineChar& start,
                       const std::vector<int>& word);

// The start character with s replaced by sigma - s. Each of the fixed walks
// ends at such a reflection of its starting character.
AffineChar reflect_parameter(const AffineChar& start, const Rational& sigma);

// Fixed data of the three verified walks. The rank-2 and rank-3 characters
// are normalized off the half-modulus: delta has exponents (m+2, m) resp.
// (m+4, m+2, m), with m the dimension of the anisotropic kernel.
AffineChar lambda_f4();                     // (s-23, s-6, -5, -4)
AffineChar lambda_rank2(const Rational& m); // (s-1-m/2, -m/2)
AffineChar lambda_rank3(const Rational& m); // (s-2-m/2, -1-m/2, -m/2)
VecQ delta_rank2(const Rational& m);
VecQ delta_rank3(const Rational& m);
std::vector<int> word_f4();    // 1 2 3 2 1 4 3 2 3 4 1 2 3 2 1
std::vector<int> word_rank2(); // 1 2 1
std::vector<int> word_rank3(); // 1 2 3 2 1

} // namespace somf::weyl
