#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "somf/errors.h"
#include "somf/special.h"

using namespace somf;
using namespace somf::sf;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

// Independent small-argument oracle for K_0, from the log series
// K_0(y) = -(ln(y/2) + gamma) I_0(y) + sum_{k>=1} (y^2/4)^k / (k!)^2 * H_k.
// Different route than the integral representation used by bessel_k.
double k0_series(double y) {
    double q = 0.25 * y * y;
    double i0 = 1.0, term = 1.0, logsum = 0.0, h = 0.0;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (k * static_cast<double>(k));
        i0 += term;
        h += 1.0 / k;
        logsum += term * h;
    }
    return -(std::log(0.5 * y) + kEulerGamma) * i0 + logsum;
}

double second_diff(double fm, double f0, double fp, double h) { return (fp - 2.0 * f0 + fm) / (h * h); }
double first_diff(double fm, double fp, double h) { return (fp - fm) / (2.0 * h); }

} // namespace

TEST_CASE("adaptive quadrature on smooth integrands") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-11));
    CHECK(integrate([](double x) { return 4.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(kPi).epsilon(1e-11));
}

TEST_CASE("gamma wrapper values and poles") {
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(gamma_real(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_real(0.0), PoleError);
    CHECK_THROWS_AS(gamma_real(-3.0), PoleError);

    int sign = 0;
    double lg = lgamma_signed(-0.5, sign);
    CHECK(sign == -1);
    CHECK(std::exp(lg) == doctest::Approx(2.0 * std::sqrt(kPi)).epsilon(1e-13));
    lg = lgamma_signed(-1.5, sign); // Gamma(-3/2) = 4 sqrt(pi) / 3 > 0
    CHECK(sign == 1);
    CHECK(std::exp(lg) == doctest::Approx(4.0 * std::sqrt(kPi) / 3.0).epsilon(1e-13));
}

TEST_CASE("zeta at classical points") {
    CHECK(zeta_real(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(zeta_real(4.0) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-13));
    CHECK(zeta_real(3.0) == doctest::Approx(1.2020569031595942854).epsilon(1e-13));
    CHECK(zeta_real(0.5) == doctest::Approx(-1.4603545088095868129).epsilon(1e-12));
    CHECK(zeta_real(0.0) == doctest::Approx(-0.5).epsilon(1e-12));
    // Functional-equation branch lands on the known rational values.
    CHECK(zeta_real(-1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-11));
    CHECK(zeta_real(-3.0) == doctest::Approx(1.0 / 120.0).epsilon(1e-11));
    CHECK_THROWS_AS(zeta_real(1.0), PoleError);
}

TEST_CASE("zeta functional equation is consistent across the branch cut") {
    // At s = 0.3 the implementation sums directly; reflect by hand and compare.
    double s = 0.3;
    double lhs = zeta_real(s);
    double rhs = std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
                 std::tgamma(1.0 - s) * zeta_real(1.0 - s);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("zeta derivative at trivial zeros matches a finite difference") {
    // zeta'(-2) = -zeta(3) / (4 pi^2), and the finite difference goes through
    // the reflection branch, so the two routes are independent.
    double closed = zeta_prime_trivial_zero(1);
    CHECK(closed == doctest::Approx(-zeta_real(3.0) / (4.0 * kPi * kPi)).epsilon(1e-12));
    double h = 1e-5;
    double d1 = first_diff(zeta_real(-2.0 - h), zeta_real(-2.0 + h), h);
    double d2 = first_diff(zeta_real(-2.0 - 2 * h), zeta_real(-2.0 + 2 * h), 2 * h);
    double rich = (4.0 * d1 - d2) / 3.0;
    CHECK(closed == doctest::Approx(rich).epsilon(1e-8));

    double closed2 = zeta_prime_trivial_zero(2);
    double e1 = first_diff(zeta_real(-4.0 - h), zeta_real(-4.0 + h), h);
    double e2 = first_diff(zeta_real(-4.0 - 2 * h), zeta_real(-4.0 + 2 * h), 2 * h);
    CHECK(closed2 == doctest::Approx((4.0 * e1 - e2) / 3.0).epsilon(1e-8));
}

TEST_CASE("bessel_k against the log-series oracle at small argument") {
    for (double y : {0.3, 0.7, 1.0, 1.6}) {
        CHECK(bessel_k(0, y) == doctest::Approx(k0_series(y)).epsilon(1e-12));
    }
    // Literature value, belt and braces.
    CHECK(bessel_k(0, 1.0) == doctest::Approx(0.4210244382407083).epsilon(1e-12));
}

TEST_CASE("bessel_k derivative and recurrence tie higher orders to K_0") {
    // K_0' = -K_1 links v=1 to the series-verified v=0.
    double h = 1e-4;
    for (double y : {0.8, 1.5, 3.0}) {
        double d1 = first_diff(bessel_k(0, y - h), bessel_k(0, y + h), h);
        double d2 = first_diff(bessel_k(0, y - 2 * h), bessel_k(0, y + 2 * h), 2 * h);
        double rich = (4.0 * d1 - d2) / 3.0;
        CHECK(rich == doctest::Approx(-bessel_k(1, y)).epsilon(1e-9));
    }
    // K_{v+1} = K_{v-1} + (2v/y) K_v then reaches every integer order.
    for (int v : {1, 2, 3}) {
        for (double y : {0.6, 1.3, 2.5}) {
            double lhs = bessel_k(v + 1, y);
            double rhs = bessel_k(v - 1, y) + 2.0 * v / y * bessel_k(v, y);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    // Symmetric in the order.
    CHECK(bessel_k(-2, 1.1) == doctest::Approx(bessel_k(2, 1.1)).epsilon(1e-14));
}

TEST_CASE("bessel_k satisfies the modified Bessel equation") {
    double h = 1e-4;
    for (int v : {0, 1, 3}) {
        for (double y : {0.9, 2.2}) {
            double fm = bessel_k(v, y - h), f0 = bessel_k(v, y), fp = bessel_k(v, y + h);
            double resid = y * y * second_diff(fm, f0, fp, h) + y * first_diff(fm, fp, h) -
                           (y * y + v * v) * f0;
            CHECK(std::abs(resid) < 1e-5 * std::max(1.0, std::abs(f0) * y * y));
        }
    }
}

TEST_CASE("bessel_k guards its domain") {
    CHECK_THROWS_AS(bessel_k(0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(2000, 0.1), EvaluationOverflow);
}

TEST_CASE("bessel_j half-integer closed forms hit both evaluation branches") {
    for (double y : {0.5, 3.0, 15.0}) { // series below 12, integral above
        double expect = std::sqrt(2.0 / (kPi * y)) * std::sin(y);
        CHECK(bessel_j(0.5, y) == doctest::Approx(expect).epsilon(1e-10));
    }
    double y = 13.0;
    double j32 = std::sqrt(2.0 / (kPi * y)) * (std::sin(y) / y - std::cos(y));
    double j52 = std::sqrt(2.0 / (kPi * y)) * ((3.0 / (y * y) - 1.0) * std::sin(y) - 3.0 / y * std::cos(y));
    CHECK(bessel_j(1.5, y) == doctest::Approx(j32).epsilon(1e-9));
    CHECK(bessel_j(2.5, y) == doctest::Approx(j52).epsilon(1e-9));
}

TEST_CASE("bessel_j recurrence and branch continuity") {
    double y = 15.0;
    for (double nu : {1.0, 2.0, 3.0}) {
        double lhs = bessel_j(nu + 1.0, y);
        double rhs = 2.0 * nu / y * bessel_j(nu, y) - bessel_j(nu - 1.0, y);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
    for (double nu : {0.0, 2.0, 3.5}) {
        double below = bessel_j(nu, 12.0 - 1e-7);
        double above = bessel_j(nu, 12.0 + 1e-7);
        CHECK(std::abs(below - above) < 1e-7);
    }
    CHECK(bessel_j(0.0, 0.0) == 1.0);
    CHECK(bessel_j(2.0, 0.0) == 0.0);
    CHECK_THROWS_AS(bessel_j(1.0, -0.5), DomainError);
}

TEST_CASE("bessel_j satisfies the Bessel equation on both branches") {
    double h = 1e-4;
    for (double nu : {0.0, 1.0, 2.0}) {
        for (double y : {4.0, 14.0}) {
            double fm = bessel_j(nu, y - h), f0 = bessel_j(nu, y), fp = bessel_j(nu, y + h);
            double resid = y * y * second_diff(fm, f0, fp, h) + y * first_diff(fm, fp, h) +
                           (y * y - nu * nu) * f0;
            CHECK(std::abs(resid) < 2e-4 * y * y);
        }
    }
}

TEST_CASE("pochhammer products") {
    CHECK(pochhammer_num(3.0, 4) == doctest::Approx(360.0));
    CHECK(pochhammer_num(-2.0, 2) == doctest::Approx(2.0));
    CHECK(pochhammer_num(-2.0, 4) == doctest::Approx(0.0));
    CHECK(pochhammer_num(1.5, 0) == doctest::Approx(1.0));
}

TEST_CASE("gauss hypergeometric: series, termination, exact branch") {
    // 2F1(1,1;2;z) = -log(1-z)/z
    CHECK(hyp2f1(1.0, 1.0, 2.0, 0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
    CHECK(hyp2f1(1.0, 1.0, 2.0, -0.8) == doctest::Approx(-std::log(1.8) / -0.8).epsilon(1e-13));
    // Terminating case agrees with the exact rational evaluation.
    Rational exact = hyp2f1_exact(rat(-2), rat(2), rat(3), rat(7, 10));
    CHECK(exact == rat(187, 600));
    CHECK(hyp2f1(-2.0, 2.0, 3.0, 0.7) == doctest::Approx(to_double(exact)).epsilon(1e-14));
    // Termination makes |z| > 1 legal.
    CHECK(hyp2f1(-1.0, 4.0, 2.0, 3.0) == doctest::Approx(1.0 - 4.0 / 2.0 * 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 1.5), ConvergenceError);
    CHECK_THROWS_AS(hyp2f1(0.5, 1.0, -2.0, 0.3), DomainError);
    CHECK_THROWS_AS(hyp2f1_exact(rat(1, 2), rat(1), rat(2), rat(1, 3)), DomainError);
}

TEST_CASE("appell f4 partial sums") {
    // a = -1 terminates after the first shell: 1 - b x / c - b y / d.
    F4Partial p = appell_f4_partial(-1.0, 2.0, 3.0, 5.0, 0.1, 0.2, 6);
    CHECK(p.value == doctest::Approx(1.0 - 2.0 * 0.1 / 3.0 - 2.0 * 0.2 / 5.0).epsilon(1e-14));
    CHECK(p.tail_bound == doctest::Approx(0.0));
    // y = 0 degenerates to a Gauss series.
    F4Partial q = appell_f4_partial(0.5, 1.5, 2.25, 3.0, 0.09, 0.0, 40);
    CHECK(q.value == doctest::Approx(hyp2f1(0.5, 1.5, 2.25, 0.09)).epsilon(1e-12));
    // Tail bound is honest: higher order stays inside it.
    F4Partial lo = appell_f4_partial(0.7, 1.1, 1.9, 2.3, 0.05, 0.08, 18);
    F4Partial hi = appell_f4_partial(0.7, 1.1, 1.9, 2.3, 0.05, 0.08, 40);
    CHECK(std::abs(hi.value - lo.value) <= lo.tail_bound * 1.01 + 1e-15);
    CHECK_THROWS_AS(appell_f4_partial(1.0, 1.0, 2.0, 2.0, 0.5, 0.5, 10), ConvergenceError);
}

TEST_CASE("affine coefficients print canonically") {
    CHECK(Affine{rat(1), rat(0)}.str() == "s");
    CHECK(Affine{rat(2), rat(-29)}.str() == "2s-29");
    CHECK(Affine{rat(1, 2), rat(-9, 2)}.str() == "s/2-9/2");
    CHECK(Affine{rat(0), rat(-4)}.str() == "-4");
    CHECK(Affine{rat(-1), rat(5)}.str() == "-s+5");
    CHECK(Affine{rat(1), rat(-6)}.shifted(rat(2)).str() == "s-4");
}
