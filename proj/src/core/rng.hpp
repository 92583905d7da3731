#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace evosir {

// Derives an independent stream seed from (base, index). Stable under growing
// index ranges, so trial i keeps its seed when more trials are added later.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded random source. Uniform and exponential draws are generated from raw
// engine output so their values do not depend on library internals; discrete
// distributions with nontrivial sampling algorithms delegate to <random>.
class rng {
  public:
    explicit rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform double in [0, 1)
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

    // uniform double in (0, 1]
    double uniform_pos() { return ((eng_() >> 11) + 1) * 0x1.0p-53; }

    double exponential(double rate) {
        if (rate <= 0.0)
            return std::numeric_limits<double>::infinity();
        return -std::log(uniform_pos()) / rate;
    }

    // uniform integer in [0, n); n must be positive
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    std::uint64_t binomial(std::uint64_t n, double p) {
        if (n == 0 || p <= 0.0)
            return 0;
        if (p >= 1.0)
            return n;
        std::binomial_distribution<std::uint64_t> dist(n, p);
        return dist(eng_);
    }

    std::uint64_t poisson(double mean) {
        if (mean <= 0.0)
            return 0;
        std::poisson_distribution<std::uint64_t> dist(mean);
        return dist(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

} // namespace evosir
