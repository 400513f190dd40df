#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dyna {

// splitmix64, used to whiten seeds and derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// One root seed fans out into named streams (policy, env, model, init, ...) so
// that changing how one consumer draws cannot perturb the others.
inline std::uint64_t derive_stream(std::uint64_t root, std::uint64_t stream_tag) {
  return splitmix64(splitmix64(root) ^ splitmix64(stream_tag));
}

namespace stream {
constexpr std::uint64_t kPolicy = 0x706f6c69637900ULL;
constexpr std::uint64_t kEnv = 0x656e7600ULL;
constexpr std::uint64_t kModel = 0x6d6f64656c00ULL;
constexpr std::uint64_t kInit = 0x696e697400ULL;
constexpr std::uint64_t kEval = 0x6576616c00ULL;
constexpr std::uint64_t kSweep = 0x737765657000ULL;
}  // namespace stream

// Deterministic RNG. The draw functions are implemented by hand (instead of
// std::uniform_*_distribution) so sequences are identical across standard
// libraries, which the bit-reproducibility guarantees rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive; bias is < 2^-53 and
  // irrelevant at the sample sizes used here.
  int uniform_int(int n) { return static_cast<int>(uniform() * n); }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller. The spare value is cached, so a given
  // engine state always yields the same sequence.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    spare_ = mag * std::sin(two_pi * u2);
    have_spare_ = true;
    return mag * std::cos(two_pi * u2);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dyna
