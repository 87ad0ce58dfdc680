#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "somf/errors.h"
#include "somf/padic_sums.h"

using namespace somf;
using namespace somf::padic;

namespace {

using Vec = std::vector<long long>;

Rational p_pow(long p, long e) {
    Rational w(1);
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) w *= p;
    return e >= 0 ? w : Rational(1) / w;
}

long long ipow(long long p, long e) {
    long long v = 1;
    for (long i = 0; i < e; ++i) v *= p;
    return v;
}

} // namespace

TEST_CASE("split form and pairing") {
    // q pairs slot i with slot 2n+1-i, so the standard eta has unit norm.
    CHECK(q_split(Vec{1, 0, 0, 1}) == 1);
    CHECK(q_split(Vec{1, 2, 3, 4}) == 1 * 4 + 2 * 3);
    CHECK(q_split(Vec{-1, 0, 0, 1}) == -1);
    CHECK(q_split(eta_standard(3)) == 1);

    Vec eta = eta_standard(2);
    CHECK(pair_split(eta, Vec{1, 0, 0, 0}) == 1);
    CHECK(pair_split(eta, Vec{0, 0, 0, 1}) == 1);
    CHECK(pair_split(eta, Vec{0, 1, 0, 0}) == 0);
    CHECK(pair_split(Vec{1, 2, 3, 4}, Vec{5, 6, 7, 8}) ==
          q_split(Vec{6, 8, 10, 12}) - q_split(Vec{1, 2, 3, 4}) - q_split(Vec{5, 6, 7, 8}));

    CHECK(is_unramified(2, 3, eta));
    CHECK(is_unramified(2, 3, Vec{1, 1, 1, 1}));  // q = 2, a unit mod 3
    CHECK(!is_unramified(2, 3, Vec{1, 0, 0, 0})); // isotropic
    CHECK(!is_unramified(2, 3, Vec{0, 0, 0, 0}));
    CHECK(!is_unramified(2, 3, Vec{1, 0, 0, 3})); // q = 3 = 0 mod 3

    CHECK_THROWS_AS(q_split(Vec{1, 2, 3}), DimensionMismatch);
    CHECK_THROWS_AS(pair_split(Vec{1, 0}, Vec{1, 0, 0, 0}), DimensionMismatch);
    CHECK_THROWS_AS(is_unramified(2, 3, Vec{1, 0}), DimensionMismatch);
}

TEST_CASE("cyclotomic collapse") {
    // zeta_3 + zeta_3^2 = -1.
    CHECK(cyclo_from_counts(3, 1, {0, 1, 1}).as_integer() == -1);
    // Full orbit sums to zero; a constant stays itself.
    CHECK(cyclo_from_counts(3, 1, {1, 1, 1}).as_integer() == 0);
    CHECK(cyclo_from_counts(5, 1, {1, 1, 1, 1, 1}).as_integer() == 0);
    CHECK(cyclo_from_counts(3, 1, {5, 0, 0}).as_integer() == 5);
    // zeta_2 = -1.
    CHECK(cyclo_from_counts(2, 1, {3, 5}).as_integer() == -2);
    // 1 + zeta_9^3 + zeta_9^6 = 0 (the cube roots of unity in mu_9).
    CHECK(cyclo_from_counts(3, 2, {1, 0, 0, 1, 0, 0, 1, 0, 0}).as_integer() == 0);
    CHECK(cyclo_from_counts(3, 2, {1, 1, 1, 1, 1, 1, 1, 1, 1}).as_integer() == 0);

    // A bare root of unity does not collapse, and says so.
    CycloSum z = cyclo_from_counts(3, 1, {0, 1, 0});
    CHECK(!z.is_integer());
    CHECK_THROWS_AS(z.as_integer(), NotConstant);
    CHECK(!cyclo_from_counts(3, 1, {0, 1, 2}).is_integer());

    CHECK_THROWS_AS(cyclo_from_counts(4, 1, {0, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(cyclo_from_counts(3, 0, {1, 1, 1}), DomainError);
    CHECK_THROWS_AS(cyclo_from_counts(3, 1, {1, 1}), DimensionMismatch);
}

TEST_CASE("isotropic counts") {
    CHECK(count_isotropic(1, 3) == 5);  // 2q - 1 at q = 3
    CHECK(count_isotropic(2, 2) == 10); // 2*3 + 1*4 via the recurrence

    // Brute force agrees with the closed recurrence, and the recurrence
    // relation itself holds on brute-force values.
    for (long p : {2L, 3L, 5L, 7L}) {
        CAPTURE(p);
        for (long n = 1; n <= 4; ++n) {
            CAPTURE(n);
            CHECK(count_isotropic(n, p) == count_isotropic_recurrence(n, p));
        }
        for (long n = 1; n <= 3; ++n) {
            long long lhs = count_isotropic(n + 1, p);
            long long rhs = p * count_isotropic(n, p) + (p - 1) * ipow(p, 2 * n);
            CHECK(lhs == rhs);
        }
    }

    CHECK_THROWS_AS(count_isotropic(4, 11), BudgetExceeded); // 11^8 > 10^8
    CHECK_THROWS_AS(count_isotropic(2, 3, 10), BudgetExceeded);
    CHECK_THROWS_AS(count_isotropic(2, 6), DomainError);
    CHECK_THROWS_AS(count_isotropic(0, 3), DomainError);
}

TEST_CASE("character sums at the first layer") {
    CHECK(char_sum_s(2, 3, eta_standard(2)).as_integer() == -3);
    CHECK(char_sum_s(2, 2, eta_standard(2)).as_integer() == -2);
    CHECK(char_sum_s(3, 3, eta_standard(3)).as_integer() == -9);

    // S_n = -p^{n-1} across the board.
    for (long p : {2L, 3L, 5L, 7L}) {
        CAPTURE(p);
        CHECK(char_sum_s(1, p, eta_standard(1)).as_integer() == -1);
    }
    CHECK(char_sum_s(2, 5, eta_standard(2)).as_integer() == -5);
    CHECK(char_sum_s(2, 7, eta_standard(2)).as_integer() == -7);
    CHECK(char_sum_s(3, 2, eta_standard(3)).as_integer() == -4);

    // Invariance under unit scaling of eta and under swapping the two
    // hyperbolic pairs (both are exact symmetries of the sum).
    CHECK(char_sum_s(2, 3, Vec{2, 0, 0, 2}).as_integer() == -3);
    CHECK(char_sum_s(2, 3, Vec{0, 1, 1, 0}).as_integer() == -3);

    CHECK_THROWS_AS(char_sum_s(2, 3, eta_standard(2), 10), BudgetExceeded);
    CHECK_THROWS_AS(char_sum_s(2, 3, Vec{1, 0}), DimensionMismatch);
}

TEST_CASE("higher modulus vanishing") {
    CHECK(r2_vanishing(2, 3, 2, eta_standard(2)).as_integer() == 0); // 3^8 points
    CHECK(r2_vanishing(1, 5, 2, eta_standard(1)).as_integer() == 0);
    CHECK(r2_vanishing(1, 3, 3, eta_standard(1)).as_integer() == 0);
    // Scaled unramified eta vanishes too.
    CHECK(r2_vanishing(1, 3, 2, Vec{2, 2}).as_integer() == 0);

    // Detector: with the trivial character (eta = 0) the same enumeration
    // returns the isotropic count mod p^r, which is visibly nonzero.
    // #{(x,y) mod 9 : xy = 0 mod 9} = 21.
    CHECK(r2_vanishing(1, 3, 2, Vec{0, 0}).as_integer() == 21);

    CHECK_THROWS_AS(r2_vanishing(1, 3, 1, eta_standard(1)), DomainError);
    CHECK_THROWS_AS(r2_vanishing(1, 2, 2, eta_standard(1)), DomainError);
    CHECK_THROWS_AS(r2_vanishing(2, 5, 3, eta_standard(2)), BudgetExceeded); // 5^12
}

TEST_CASE("local integral") {
    Vec eta = eta_standard(2);

    CHECK(j_local(rat(3), 2, 3, eta, 2) == rat(8, 9));
    CHECK(j_local(rat(4), 2, 5, eta, 2) == rat(124, 125));

    // r_max = 0 keeps only the unramified class.
    CHECK(j_local(rat(3), 2, 3, eta, 0) == rat(1));

    // The value stabilizes at r_max = 1: every deeper term vanishes.
    Rational j1 = j_local(rat(3), 2, 3, eta, 1);
    CHECK(j1 == rat(8, 9));
    CHECK(j_local(rat(3), 2, 3, eta, 2) == j1);
    CHECK(j_local(rat(3), 2, 3, eta, 3) == j1); // 3^12 points at r = 3

    // Matches 1 - p^{-(s - n + 1)} across a grid.
    for (long n : {1L, 2L}) {
        for (long p : {3L, 5L}) {
            for (long s : {3L, 4L, 6L}) {
                CAPTURE(n);
                CAPTURE(p);
                CAPTURE(s);
                CHECK(j_local(rat(s), n, p, eta_standard(n), 2) ==
                      Rational(1) - p_pow(p, -(s - n + 1)));
            }
        }
    }

    // Any unramified eta gives the same answer.
    CHECK(j_local(rat(3), 2, 3, Vec{1, 1, 1, 1}, 2) == rat(8, 9));
    CHECK(j_local(rat(3), 2, 3, Vec{2, 0, 0, 2}, 2) == rat(8, 9));

    CHECK_THROWS_AS(j_local(rat(7, 2), 2, 3, eta, 2), DomainError); // integer s only
    CHECK_THROWS_AS(j_local(rat(3), 2, 2, eta, 2), DomainError);    // odd p only
    CHECK_THROWS_AS(j_local(rat(3), 2, 3, Vec{1, 0, 0, 0}, 2), DomainError); // ramified
    CHECK_THROWS_AS(j_local(rat(3), 2, 5, eta, 3), BudgetExceeded); // 5^12 points
}
