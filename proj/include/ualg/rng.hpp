#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace ualg {

/// Deterministic random source. All sampled checks derive their own stream
/// from (master seed, stream label), so adding a check never perturbs the
/// draws of another and reports stay byte-identical for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Stream derived from a master seed and a label (splitmix-style hash).
  static Rng derive(uint64_t master, const std::string& label) {
    uint64_t h = master ^ 0x9e3779b97f4a7c15ULL;
    for (unsigned char ch : label) {
      h ^= ch;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return Rng(h);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

  uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ualg
