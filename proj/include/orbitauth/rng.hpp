// SPDX-License-Identifier: MIT
//
// Seeded random streams. Every stochastic operation takes an explicit
// stream, and streams for independent work units (Monte Carlo trials,
// per-N sweeps) are derived from a master seed by counter-based mixing,
// so results do not depend on scheduling or worker count.

#ifndef ORBITAUTH_RNG_HPP
#define ORBITAUTH_RNG_HPP

#include <cstdint>
#include <random>

namespace orbitauth {

/// One round of the splitmix64 output function.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Mix a master seed with up to two stream coordinates (e.g. a role tag
/// and a trial index) into an independent 64-bit stream seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ splitmix64(a));
    s = splitmix64(s ^ splitmix64(b));
    return s;
}

/// A self-contained random stream with provenance (the seed it was built
/// from is recorded into every Measurement drawn from it).
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    static RngStream derive(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
        return RngStream(derive_seed(master, a, b));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform integer in [0, bound).
    std::uint64_t uniform_below(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(gen_);
    }

    /// Zero-mean Gaussian draw with the given standard deviation.
    double normal(double sigma) { return normal_(gen_) * sigma; }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace orbitauth

#endif  // ORBITAUTH_RNG_HPP
