#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qn {

// Seeded generator with hand-rolled transforms. std::uniform_real_distribution
// and friends are implementation defined, which would make frozen test values
// and manifests move between standard libraries; these do not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t bits() { return eng_(); }

  // independent stream derived from this seed and a stream id
  Rng fork(std::uint64_t stream) const {
    std::uint64_t x = seed_mix_ + 0x632be59bd9b4e019ull * (stream + 1);
    x ^= x >> 27;
    x *= 0x2545f4914f6cdd1dull;
    x ^= x >> 31;
    return Rng(x);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // uniform integer in [lo, hi] by rejection, unbiased
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // standard normal via Box-Muller, one value per call (second is discarded
  // so the stream position never depends on call parity)
  double normal() {
    double u1, u2;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

 private:
  explicit Rng(std::uint64_t seed, int) : eng_(seed) {}
  std::mt19937_64 eng_;
  std::uint64_t seed_mix_ = eng_();  // consumed once, keys fork()
};

// FNV-1a over a byte range; used for content digests in manifests.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace qn
