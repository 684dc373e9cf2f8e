#include "qparity/rng.hpp"

#include <cmath>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"

namespace qparity {
namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::uint64_t s = seed;
  for (auto& w : state_) w = splitmix64(s);
  for (std::uint64_t i = 0; i < stream; ++i) long_jump();
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

void RngStream::long_jump() {
  static constexpr std::uint64_t kJump[] = {
      0x76e15d3efefdcbbfULL, 0xc5004e441c522fb3ULL,
      0x77710069854ee241ULL, 0x39109bb02acbe635ULL};
  std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  for (std::uint64_t jump : kJump) {
    for (int b = 0; b < 64; ++b) {
      if (jump & (1ULL << b)) {
        s0 ^= state_[0];
        s1 ^= state_[1];
        s2 ^= state_[2];
        s3 ^= state_[3];
      }
      next_u64();
    }
  }
  state_[0] = s0;
  state_[1] = s1;
  state_[2] = s2;
  state_[3] = s3;
}

double RngStream::uniform01() {
  // 53-bit mantissa mapped to (0, 1]
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * constants::kPi * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_normal_ = true;
  return r * std::cos(a);
}

double RngStream::exponential(double rate) {
  if (!(rate > 0.0)) throw validation_error("exponential: rate must be > 0");
  return -std::log(uniform01()) / rate;
}

std::vector<RngStream> RngStream::streams(std::uint64_t seed, std::size_t n) {
  if (n < 1) throw validation_error("rng_streams: need n >= 1");
  std::vector<RngStream> out;
  out.reserve(n);
  out.emplace_back(seed, 0);
  for (std::size_t i = 1; i < n; ++i) {
    RngStream next = out.back();
    next.long_jump();
    next.stream_ = i;
    next.has_cached_normal_ = false;
    out.push_back(next);
  }
  return out;
}

} // namespace qparity
