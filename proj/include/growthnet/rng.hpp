// Deterministic RNG wrapper. std::mt19937_64 output is bit-exact across
// platforms; the bounded draw is hand-rolled because the standard
// distributions are not portable between library implementations.
#pragma once

#include <cstdint>
#include <random>

namespace growthnet {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Unbiased integer in [0, n). Lemire multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        while (true) {
            std::uint64_t x = eng_();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= n || lo >= (-n) % n)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    std::uint32_t below32(std::uint32_t n) {
        return static_cast<std::uint32_t>(below(n));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace growthnet
