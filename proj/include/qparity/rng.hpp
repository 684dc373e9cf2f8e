#ifndef QPARITY_RNG_HPP
#define QPARITY_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qparity {

/// Seedable, splittable random stream (xoshiro256++). Identical (seed, stream)
/// pairs reproduce identical output sequences; distinct stream indices select
/// non-overlapping subsequences 2^192 steps apart.
class RngStream {
 public:
  static constexpr const char* kAlgorithm = "xoshiro256++";

  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();

  /// Uniform double in (0, 1].
  double uniform01();

  /// Standard normal via Box-Muller (pairwise, second value cached).
  double normal();

  /// Exponential variate with the given rate (mean 1/rate).
  double exponential(double rate);

  static std::vector<RngStream> streams(std::uint64_t seed, std::size_t n);

 private:
  void long_jump();

  std::uint64_t state_[4];
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

} // namespace qparity

#endif
