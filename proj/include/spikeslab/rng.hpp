#pragma once

#include <cstdint>
#include <random>

namespace spikeslab {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Seeded random stream. Every stochastic routine in the library takes one of
/// these explicitly; nothing draws from hidden global state, so a run is a
/// pure function of its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Derives the seed of an independent substream, e.g. one per replication.
  /// Streams with distinct ids are decorrelated by a splitmix64 hash of
  /// (seed, stream_id), so workers can be launched in any order or thread
  /// count without changing any stream's draws.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t s = seed ^ (0xA0761D6478BD642Full * (stream_id + 1));
    (void)detail::splitmix64(s);
    return detail::splitmix64(s);
  }

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(derive_seed(seed, stream_id));
  }

  /// U(0,1)
  double uniform() { return uniform_(engine_); }

  /// N(0,1)
  double normal() { return normal_(engine_); }

  /// Gamma(shape, scale), mean shape*scale.
  double gamma(double shape, double scale) {
    return std::gamma_distribution<double>(shape, scale)(engine_);
  }

  /// Inverse-Gamma(shape a, scale b): reciprocal of a Gamma(a, rate b) draw.
  double inverse_gamma(double shape, double scale) {
    return scale / std::gamma_distribution<double>(shape, 1.0)(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace spikeslab
