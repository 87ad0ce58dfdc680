#include "somf/padic_sums.h"

#include <limits>
#include <string>

#include "somf/errors.h"

namespace somf::padic {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(long p) {
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

void require_odd_prime(long p) {
    require_prime(p);
    if (p == 2) throw DomainError("p = 2 is outside the unramified setting here");
}

void require_eta(long n, const std::vector<long long>& eta) {
    if (eta.size() != static_cast<size_t>(2 * n))
        throw DimensionMismatch("eta has " + std::to_string(eta.size()) + " coordinates, expected " +
                                std::to_string(2 * n));
}

// p^e as long long, guarding the budget comparison against overflow.
long long checked_pow(long p, long e, long long cap) {
    long long v = 1;
    for (long i = 0; i < e; ++i) {
        if (v > cap / p) return cap + 1;
        v *= p;
    }
    return v;
}

void require_budget(long p, long e, long long budget) {
    if (checked_pow(p, e, budget) > budget)
        throw BudgetExceeded("enumeration of " + std::to_string(p) + "^" + std::to_string(e) +
                             " points exceeds budget " + std::to_string(budget));
}

// Odometer over (Z/m)^dim. Returns false once the whole range is exhausted.
bool next_point(std::vector<long long>& u, long long m) {
    for (size_t i = 0; i < u.size(); ++i) {
        if (++u[i] < m) return true;
        u[i] = 0;
    }
    return false;
}

long long q_mod(const std::vector<long long>& u, long long m) {
    const size_t dim = u.size();
    long long acc = 0;
    for (size_t i = 0; i < dim / 2; ++i) acc = (acc + u[i] * u[dim - 1 - i]) % m;
    return acc;
}

long long pair_mod(const std::vector<long long>& eta, const std::vector<long long>& u, long long m) {
    const size_t dim = u.size();
    long long acc = 0;
    for (size_t i = 0; i < dim; ++i) acc = (acc + (eta[i] % m) * u[dim - 1 - i]) % m;
    return (acc % m + m) % m;
}

// Exponent-count accumulation of sum over q = 0 (mod m) of zeta^{(eta, x)}.
std::vector<long long> char_counts(long n, long p, long r, const std::vector<long long>& eta,
                                   long long budget) {
    require_eta(n, eta);
    require_budget(p, 2 * n * r, budget);
    const long long m = checked_pow(p, r, std::numeric_limits<long long>::max() / 4);
    std::vector<long long> counts(static_cast<size_t>(m), 0);
    std::vector<long long> u(static_cast<size_t>(2 * n), 0);
    do {
        if (q_mod(u, m) != 0) continue;
        counts[static_cast<size_t>(pair_mod(eta, u, m))] += 1;
    } while (next_point(u, m));
    return counts;
}

} // namespace

long long q_split(const std::vector<long long>& u) {
    if (u.size() % 2 != 0) throw DimensionMismatch("split space has even dimension");
    long long acc = 0;
    for (size_t i = 0; i < u.size() / 2; ++i) acc += u[i] * u[u.size() - 1 - i];
    return acc;
}

long long pair_split(const std::vector<long long>& u, const std::vector<long long>& v) {
    if (u.size() != v.size()) throw DimensionMismatch("mismatched coordinate lengths");
    return q_split([&] {
        std::vector<long long> w(u.size());
        for (size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
        return w;
    }()) - q_split(u) - q_split(v);
}

std::vector<long long> eta_standard(long n) {
    if (n < 1) throw DomainError("n must be >= 1");
    std::vector<long long> eta(static_cast<size_t>(2 * n), 0);
    eta.front() = 1;
    eta.back() = 1;
    return eta;
}

bool is_unramified(long n, long p, const std::vector<long long>& eta) {
    require_eta(n, eta);
    require_prime(p);
    long long qe = q_split(eta) % p;
    return (qe % p + p) % p != 0;
}

bool CycloSum::is_integer() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    return true;
}

long long CycloSum::as_integer() const {
    if (!is_integer())
        throw NotConstant("cyclotomic sum does not collapse to an integer");
    return coeffs.empty() ? 0 : coeffs[0];
}

CycloSum cyclo_from_counts(long p, long r, std::vector<long long> counts) {
    require_prime(p);
    if (r < 1) throw DomainError("modulus exponent r must be >= 1");
    const long long m = checked_pow(p, r, std::numeric_limits<long long>::max() / 4);
    if (counts.size() != static_cast<size_t>(m))
        throw DimensionMismatch("counts vector must have p^r entries");
    // Phi_{p^r}(X) = 1 + X^t + ... + X^{(p-1)t} with t = p^{r-1}:
    // X^d = -(X^{d-t} + ... + X^{d-(p-1)t}) for d >= (p-1)t.
    const long long t = m / p;
    const long long phi = (p - 1) * t;
    for (long long d = m - 1; d >= phi; --d) {
        const long long c = counts[static_cast<size_t>(d)];
        if (c == 0) continue;
        counts[static_cast<size_t>(d)] = 0;
        for (long k = 1; k <= p - 1; ++k) counts[static_cast<size_t>(d - k * t)] -= c;
    }
    counts.resize(static_cast<size_t>(phi));
    CycloSum out;
    out.p = p;
    out.r = r;
    out.coeffs = std::move(counts);
    return out;
}

long long count_isotropic(long n, long p, long long budget) {
    if (n < 1) throw DomainError("n must be >= 1");
    require_prime(p);
    require_budget(p, 2 * n, budget);
    std::vector<long long> u(static_cast<size_t>(2 * n), 0);
    long long count = 0;
    do {
        if (q_mod(u, p) == 0) ++count;
    } while (next_point(u, p));
    return count;
}

long long count_isotropic_recurrence(long n, long p) {
    if (n < 1) throw DomainError("n must be >= 1");
    require_prime(p);
    long long c = 2 * p - 1;
    long long q2n = p * p; // p^{2*1}
    for (long i = 1; i < n; ++i) {
        c = p * c + (p - 1) * q2n;
        q2n *= p * p;
    }
    return c;
}

CycloSum char_sum_s(long n, long p, const std::vector<long long>& eta, long long budget) {
    if (n < 1) throw DomainError("n must be >= 1");
    require_prime(p);
    return cyclo_from_counts(p, 1, char_counts(n, p, 1, eta, budget));
}

CycloSum r2_vanishing(long n, long p, long r, const std::vector<long long>& eta, long long budget) {
    if (n < 1) throw DomainError("n must be >= 1");
    require_odd_prime(p);
    if (r < 2) throw DomainError("this sum is the r >= 2 case");
    return cyclo_from_counts(p, r, char_counts(n, p, r, eta, budget));
}

Rational j_local(const Rational& s, long n, long p, const std::vector<long long>& eta, long r_max,
                 long long budget) {
    if (n < 1) throw DomainError("n must be >= 1");
    require_odd_prime(p);
    if (r_max < 0) throw DomainError("r_max must be >= 0");
    if (!is_unramified(n, p, eta))
        throw DomainError("eta must be unramified (integral with unit norm)");
    const long s0 = to_long(s); // exact p^{-rs} needs integer s
    Rational total(0);
    for (long r = 0; r <= r_max; ++r) {
        long long term;
        if (r == 0) {
            term = 1; // single residue class, trivial character, q always integral
        } else {
            term = cyclo_from_counts(p, r, char_counts(n, p, r, eta, budget)).as_integer();
        }
        // weight p^{-r s0}, exact
        Rational w(1);
        for (long i = 0; i < r * (s0 >= 0 ? s0 : -s0); ++i) w *= p;
        Rational weight = s0 >= 0 ? Rational(1) / w : w;
        total += weight * rat(static_cast<long>(term));
    }
    return total;
}

} // namespace somf::padic
