#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace tensorbound {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for stream `index` of a master seed; independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Explicitly seeded pseudorandom source. mt19937_64 seeded through splitmix64;
/// Gaussian variates by Box-Muller (cosine branch only, so draws never depend on cached state).
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64(splitmix64 seed)/box-muller";

  explicit Rng(std::uint64_t seed);

  /// Independent child stream.
  Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  double normal();
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace tensorbound
