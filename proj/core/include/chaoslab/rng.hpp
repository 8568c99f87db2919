#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace chaoslab {

// SplitMix64 finalizer; injective for fixed master seed, so derived streams
// never collide.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed for replica / bootstrap stream `stream` under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

// Deterministic generator: mt19937_64 (fully specified by the standard) plus
// explicit transforms, so draws are reproducible bit-for-bit everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Exponential(1); finite because uniform01() < 1.
  double exponential() { return -std::log1p(-uniform01()); }

  // Exponential(1) conditioned on being < cap (inverse CDF of the truncation).
  double exponential_truncated(double cap) {
    return -std::log1p(-uniform01() * (-std::expm1(-cap)));
  }

  // Uniform integer in [0, n); Lemire multiply-shift with rejection (exact).
  std::uint64_t integer(std::uint64_t n) {
    auto mul = static_cast<unsigned __int128>(eng_()) * n;
    auto lo = static_cast<std::uint64_t>(mul);
    if (lo < n) {
      std::uint64_t t = (-n) % n;
      while (lo < t) {
        mul = static_cast<unsigned __int128>(eng_()) * n;
        lo = static_cast<std::uint64_t>(mul);
      }
    }
    return static_cast<std::uint64_t>(mul >> 64);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace chaoslab
