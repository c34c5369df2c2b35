// rng.hpp
// Seeded deterministic RNG. mt19937_64 output is pinned by the standard,
// and only raw bit draws are used (std distributions are not portable).
#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace isoprod {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// n low-order random bits (n <= 64).
    std::uint64_t bits(int n) {
        if (n == 0) return 0;
        return eng_() >> (64 - n);
    }

    /// Uniform value in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t mask = ~std::uint64_t(0);
        if (n == 0) return 0;
        int width = 64 - std::countl_zero((n - 1) | 1);
        mask = width >= 64 ? mask : ((std::uint64_t(1) << width) - 1);
        for (;;) {
            std::uint64_t v = eng_() & mask;
            if (v < n) return v;
        }
    }

    /// Stream split for reproducible parallel work.
    Rng fork(std::uint64_t salt) {
        std::uint64_t z = eng_() + 0x9e3779b97f4a7c15ull * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return Rng(z ^ (z >> 31));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace isoprod
