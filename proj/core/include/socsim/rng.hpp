#ifndef SOCSIM_RNG_HPP_
#define SOCSIM_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace socsim {

/// Seeded generator with hand-rolled samplers. mt19937_64 output is pinned by
/// the standard and the samplers avoid std::*_distribution, so equal seeds
/// give equal draws on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    bool bernoulli(double p) { return uniform01() < p; }

    /// Knuth's product method; fine for the means used here (< ~600).
    int poisson(double mean);

    /// Index drawn proportionally to the (non-negative) weights; falls back
    /// to uniform when all weights are zero.
    std::size_t weighted_index(const std::vector<double>& weights);

  private:
    std::mt19937_64 gen_;
};

/// Stateless mix for deriving per-run seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

} // namespace socsim

#endif
