#pragma once

#include <cstdint>
#include <random>

namespace base {

// Deterministic RNG shared by property tests and the CLI. Reports must be
// byte-identical for a fixed seed, so nothing else may pull randomness.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    std::mt19937_64& raw() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace base
