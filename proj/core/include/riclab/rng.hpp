#ifndef RICLAB_RNG_HPP
#define RICLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace riclab {

// Seeded generator with pinned value derivations. std::* distributions are
// implementation-defined, so the double mappings live here: identical seeds
// must reproduce identical experiment payloads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double unit_real() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_real(); }

  // Inclusive range; span is tiny in all uses, so scaling bias is irrelevant.
  int uniform_int(int lo, int hi) {
    const double span = static_cast<double>(hi) - static_cast<double>(lo) + 1.0;
    int v = lo + static_cast<int>(unit_real() * span);
    return v > hi ? hi : v;
  }

  // Standard normal via Box-Muller with one cached deviate.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = unit_real();
    } while (u1 <= 0.0);
    const double u2 = unit_real();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
  }

  // Magnitude in [0.5, 1.5] with a random sign: nonzero by construction, so a
  // drawn signal is exactly as sparse as its support.
  double signed_coefficient() {
    const double mag = uniform(0.5, 1.5);
    return (next_u64() & 1ULL) ? mag : -mag;
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// SplitMix64-style combiner for deriving per-trial streams from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace riclab

#endif
