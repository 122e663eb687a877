#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace stlstm {

// Seedable, splittable PRNG. mt19937_64 produces a standardized raw stream;
// all distributions are implemented here so results are identical across
// standard libraries. Every stochastic operation in the project takes one of
// these explicitly, which makes runs bit-reproducible.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() { return eng_(); }

  // [0, 1)
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0, n)
  uint64_t below(uint64_t n);

  bool bernoulli(double p) { return uniform() < p; }

  // standard normal, Marsaglia polar method
  double normal();

  // child stream independent of this rng's consumption state
  Rng split(uint64_t stream) const;

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = size_t(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

uint64_t splitmix64(uint64_t x);

}  // namespace stlstm
