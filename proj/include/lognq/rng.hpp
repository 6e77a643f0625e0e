#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace lognq {

// splitmix64; used both as a stream hasher and for seed derivation.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
  return mix_seed(mix_seed(a, b, c), d);
}

// Deterministic RNG. All derived draws go through explicit arithmetic on the
// mt19937_64 output so the produced streams do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

  uint64_t next_u64() { return gen_(); }

  // uniform in (0, 1); endpoints excluded so log()/log(-log()) stay finite
  double uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    constexpr double eps = 0x1.0p-53;
    return u < eps ? eps : (u > 1.0 - eps ? 1.0 - eps : u);
  }

  // uniform integer in [0, n)
  uint64_t below(uint64_t n) {
    // rejection sampling over the smallest covering power-of-two mask
    uint64_t mask = n - 1;
    mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
    mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
    uint64_t v;
    do { v = next_u64() & mask; } while (v >= n);
    return v;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gumbel() { return -std::log(-std::log(uniform())); }

  // Box-Muller; two uniforms per draw keeps the stream stateless
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lognq
