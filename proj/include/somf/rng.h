#pragma once

#include <cstdint>

namespace somf {

// Minimal PCG32 (XSH-RR 64/32, O'Neill's reference constants). Seeded runs must
// reproduce byte-identical reports, so we pin the generator rather than using
// std::mt19937 whose distributions are implementation-defined.
class Pcg32 {
  public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t seq = 0x14057b7ef767814fULL) {
        state_ = 0u;
        inc_ = (seq << 1u) | 1u;
        next();
        state_ += seed;
        next();
    }

    std::uint32_t next() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // 53-bit uniform in [0,1).
    double uniform() {
        std::uint64_t hi = next() >> 5;   // 27 bits
        std::uint64_t lo = next() >> 6;   // 26 bits
        return static_cast<double>((hi << 26) | lo) * (1.0 / 9007199254740992.0);
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // Uniform integer in [0, n).
    std::uint32_t below(std::uint32_t n) {
        // Lemire-style rejection keeps the draw unbiased.
        std::uint64_t m = static_cast<std::uint64_t>(next()) * n;
        auto lowbits = static_cast<std::uint32_t>(m);
        if (lowbits < n) {
            std::uint32_t t = (0u - n) % n;
            while (lowbits < t) {
                m = static_cast<std::uint64_t>(next()) * n;
                lowbits = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

} // namespace somf
