#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace gcx {

// SplitMix64 finaliser, used to derive independent engine seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stream ids keep the generator families statistically independent even when
// they are handed the same seed.
namespace streams {
inline constexpr std::uint64_t unit_disk = 0x0d15c;
inline constexpr std::uint64_t barabasi_albert = 0xba;
inline constexpr std::uint64_t grid_rewire = 0x9e1d;
inline constexpr std::uint64_t watts_strogatz = 0x3535;
inline constexpr std::uint64_t longest_cycle = 0xc7c1e;
inline constexpr std::uint64_t improver = 0x1a9e;
}  // namespace streams

/// Repository-wide random source: a 64-bit Mersenne Twister seeded from
/// (seed, stream) through SplitMix64. The derived quantities below are
/// computed by hand rather than with <random> distributions, whose output is
/// implementation-defined, so a seed yields the same graph on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's nearly-divisionless rejection method.
    unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gcx
