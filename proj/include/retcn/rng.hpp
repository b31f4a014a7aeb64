#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace retcn {

// Counter-based deterministic generator: the i-th output is a pure function
// of (key, i), so identical seed + identical call sequence yields an
// identical stream on every platform. split() derives an independent child
// stream, which keeps per-sample randomness stable no matter how work is
// scheduled across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {}

  static Rng from_entropy() {
    std::random_device rd;
    return Rng((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; u1 is kept in (0, 1] so sigma = 0 gives exactly mu.
  double gaussian(double mu, double sigma) {
    const double u1 =
        static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * kPi * u2);
  }

  // Child stream keyed by (this key, stream id). Does not advance *this.
  Rng split(std::uint64_t stream) const {
    return Rng(mix(key_ ^ mix(stream + kGamma)));
  }

  std::uint64_t seed() const { return key_; }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace retcn
