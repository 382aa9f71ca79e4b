#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace symdesign {

namespace detail {
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Deterministic random stream.  The engine is std::mt19937_64 (whose output
/// sequence is pinned by the standard) and the real-valued distributions are
/// hand-rolled below, so identical seeds reproduce bit-identical streams on
/// every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Independent substream for a worker/chunk index; mixing is injective
  /// enough that neighboring indices share nothing.
  static Rng substream(uint64_t seed, uint64_t index) {
    return Rng(detail::splitmix64(seed ^ detail::splitmix64(index + 1)));
  }

  uint64_t next_u64() { return eng_(); }

  /// Uniform in (0, 1]; never returns 0 so log() is safe.
  double uniform01() {
    return double((next_u64() >> 11) + 1) * 0x1p-53;
  }

  /// Standard normal via Box-Muller (explicit, portable).
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Complex standard normal with unit total variance.
  std::complex<double> cgauss() {
    const double re = gauss();
    const double im = gauss();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

  /// Uniform integer in [0, n).
  uint64_t below(uint64_t n) {
    // Rejection-free for our purposes: n is tiny compared to 2^64.
    return next_u64() % n;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace symdesign
