#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "somf/errors.h"
#include "somf/rng.h"
#include "somf/sfunc.h"
#include "somf/special.h"

using namespace somf;
using somf::sym::SFunction;

namespace {

Affine aff(long a, long b) { return Affine{rat(a), rat(b)}; }
Affine s_minus(long b) { return Affine{rat(1), rat(-b)}; }

} // namespace

TEST_CASE("products cancel to canonical form") {
    SFunction f = SFunction::zeta(s_minus(1)) / SFunction::zeta(s_minus(0));
    SFunction g = SFunction::zeta(s_minus(2)) / SFunction::zeta(s_minus(1));
    SFunction expect = SFunction::zeta(s_minus(2)) / SFunction::zeta(s_minus(0));
    CHECK(eq_sfunction(mul(f, g), expect));
    CHECK(mul(f, g) == expect);
    CHECK(eq_sfunction(mul(f, SFunction::unit()), f));
    // Constant-insensitive vs strict equality.
    SFunction scaled = SFunction::constant(rat(7, 2)) * expect;
    CHECK(eq_sfunction(scaled, expect));
    CHECK_FALSE(scaled == expect);
}

TEST_CASE("order bookkeeping at rational points") {
    CHECK(SFunction::zeta(s_minus(8)).order_at(rat(9)) == -1);
    // ((s-9)/2)_4: exactly one factor vanishes at s = 9.
    SFunction poch = SFunction::pochhammer(Affine{rat(1, 2), rat(-9, 2)}, 4);
    CHECK(poch.order_at(rat(9)) == 1);
    CHECK(poch.order_at(rat(7)) == 1);  // (s-7)/2 factor
    CHECK(poch.order_at(rat(8)) == 0);  // arguments land off the integers
    CHECK(SFunction::gamma(s_minus(9)).order_at(rat(9)) == -1);
    CHECK(SFunction::gamma(s_minus(9)).order_at(rat(19, 2)) == 0);
    CHECK(SFunction::zeta(s_minus(11)).order_at(rat(9)) == 1);  // trivial zero at -2
    CHECK(SFunction::zeta(s_minus(10)).order_at(rat(9)) == 0);  // zeta(-1) != 0
    CHECK(SFunction::gamma_r(Affine{rat(1), rat(0)}).order_at(rat(0)) == -1);
    CHECK(SFunction::gamma_r(Affine{rat(1), rat(0)}).order_at(rat(-1)) == 0);
    CHECK(SFunction::gamma_r(Affine{rat(1), rat(0)}).order_at(rat(-2)) == -1);
}

TEST_CASE("leading values strip vanishing factors exactly") {
    SFunction ratio = SFunction::gamma(s_minus(6)) / SFunction::gamma(s_minus(2));
    CHECK(ratio.order_at(rat(9)) == 0);
    CHECK(ratio.leading_value_at(rat(9)) == doctest::Approx(1.0 / 360.0).epsilon(1e-13));

    CHECK(SFunction::zeta(s_minus(9)).leading_value_at(rat(9)) == doctest::Approx(-0.5).epsilon(1e-12));

    // Simple pole of Gamma(2s-20) at s = 9: Gamma(x) ~ 1/(2(x+2)) there and
    // the argument slope contributes another 1/2.
    SFunction g = SFunction::gamma(aff(2, -20));
    CHECK(g.order_at(rat(9)) == -1);
    CHECK(g.leading_value_at(rat(9)) == doctest::Approx(0.25).epsilon(1e-12));
    double h = 1e-6;
    CHECK(g.value_at(9 + h) * h == doctest::Approx(0.25).epsilon(1e-4));

    // Trivial zero: zeta(s-11) at s = 9 has slope zeta'(-2).
    SFunction z = SFunction::zeta(s_minus(11));
    CHECK(z.order_at(rat(9)) == 1);
    CHECK(z.leading_value_at(rat(9)) == doctest::Approx(sf::zeta_prime_trivial_zero(1)).epsilon(1e-12));
    CHECK(z.value_at(9 + h) / h == doctest::Approx(sf::zeta_prime_trivial_zero(1)).epsilon(1e-4));

    // GammaR(s) ~ 2/s at the origin.
    SFunction gr = SFunction::gamma_r(Affine{rat(1), rat(0)});
    CHECK(gr.leading_value_at(rat(0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gr.value_at(1e-5) * 1e-5 == doctest::Approx(2.0).epsilon(1e-4));

    // Pochhammer leading: ((s-9)/2)_4 ~ (1/2) * 1 * 2 * 3 * (s-9).
    SFunction poch = SFunction::pochhammer(Affine{rat(1, 2), rat(-9, 2)}, 4);
    CHECK(poch.leading_value_at(rat(9)) == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("composite zeta atoms expand losslessly") {
    SFunction lhs = SFunction::zeta_theta(s_minus(5)) / SFunction::zeta_theta(s_minus(1));
    SFunction rhs = SFunction::zeta(s_minus(5)) * SFunction::zeta(s_minus(8)) /
                    (SFunction::zeta(s_minus(1)) * SFunction::zeta(s_minus(4)));
    CHECK(eq_sfunction(lhs, rhs));
    CHECK(eq_sfunction(SFunction::zeta_an(s_minus(0), 4), SFunction::zeta_theta(s_minus(0))));
}

TEST_CASE("substituting a shifted s") {
    SFunction f = SFunction::zeta(s_minus(6)) * SFunction::gamma(Affine{rat(1, 2), rat(-1)});
    SFunction g = f.shifted_s(rat(-17));
    CHECK(eq_sfunction(g, SFunction::zeta(s_minus(23)) * SFunction::gamma(Affine{rat(1, 2), rat(-19, 2)})));
}

TEST_CASE("canonical text form") {
    CHECK(SFunction::zeta(s_minus(8)).str() == "Zeta(s-8)");
    CHECK(SFunction::zeta(s_minus(8)).inverse().str() == "Zeta(s-8)^-1");
    CHECK(SFunction::pochhammer(Affine{rat(1, 2), rat(-9, 2)}, 2).str() ==
          "lin(s/2-9/2) * lin(s/2-7/2)");
    SFunction mixed = SFunction::constant(rat(-3, 4)) * SFunction::gamma(s_minus(2)) /
                      SFunction::zeta(s_minus(0));
    CHECK(mixed.str() == "-3/4 * Gamma(s-2) * Zeta(s)^-1");
    CHECK(SFunction::unit().str() == "1");
    CHECK(SFunction::gamma_r(s_minus(1)).str() == "GammaR(s-1)");
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(SFunction::linear(Affine{rat(0), rat(0)}), DomainError);
    CHECK_THROWS_AS(SFunction::constant(rat(0)), DomainError);
    CHECK_THROWS_AS(SFunction::pochhammer(s_minus(0), -1), DomainError);
    // Constant Gamma argument sitting on a pole is singular at every s.
    SFunction bad = SFunction::gamma(Affine{rat(0), rat(-1)});
    CHECK(bad.order_at(rat(5)) == -1);
    CHECK_THROWS_AS(bad.leading_value_at(rat(5)), PoleError);
}

TEST_CASE("telescoping chains collapse to endpoints") {
    std::vector<SFunction> g;
    for (long i = 0; i <= 5; ++i)
        g.push_back(SFunction::zeta(s_minus(i)) * SFunction::gamma(Affine{rat(1, 2), rat(i)}));
    SFunction fold = SFunction::unit();
    for (size_t i = 0; i + 1 < g.size(); ++i) fold = fold * (g[i + 1] / g[i]);
    CHECK(eq_sfunction(fold, g.back() / g.front()));
}

TEST_CASE("random products keep order additive and leading multiplicative") {
    Pcg32 rng(20260816);
    std::vector<SFunction> pool;
    for (long k = -2; k <= 3; ++k) {
        pool.push_back(SFunction::linear(s_minus(k)));
        pool.push_back(SFunction::zeta(s_minus(2 * k)));
        pool.push_back(SFunction::gamma(Affine{rat(1, 2), rat(-k)}));
        pool.push_back(SFunction::gamma_r(s_minus(k)));
    }
    std::vector<Rational> points = {rat(-2), rat(0), rat(1, 2), rat(1), rat(2), rat(9, 2), rat(5)};
    for (int trial = 0; trial < 60; ++trial) {
        SFunction f = SFunction::unit(), gprod = SFunction::unit();
        int nf = 1 + static_cast<int>(rng.below(3)), ng = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < nf; ++i) {
            SFunction pick = pool[rng.below(pool.size())];
            f = f * (rng.below(2) ? pick : pick.inverse());
        }
        for (int i = 0; i < ng; ++i) {
            SFunction pick = pool[rng.below(pool.size())];
            gprod = gprod * (rng.below(2) ? pick : pick.inverse());
        }
        const Rational& s0 = points[rng.below(points.size())];
        SFunction prod = f * gprod;
        CHECK(prod.order_at(s0) == f.order_at(s0) + gprod.order_at(s0));
        double lf = f.leading_value_at(s0), lg = gprod.leading_value_at(s0);
        double lp = prod.leading_value_at(s0);
        CHECK(lp == doctest::Approx(lf * lg).epsilon(1e-10));
        if (prod.order_at(s0) == 0 && std::abs(lp) > 1e-8) {
            double s0d = to_double(s0);
            CHECK(prod.value_at(s0d + 1e-6) == doctest::Approx(lp).epsilon(1e-3));
            CHECK(prod.value_at(s0d - 1e-6) == doctest::Approx(lp).epsilon(1e-3));
        }
    }
}
