#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace regen {

// Counter-keyed xoshiro256++ stream. Every consumer of randomness holds an
// explicit stream constructed from (seed, stream_id), so results are
// bit-identical for identical keys regardless of evaluation order or thread
// scheduling. Distribution transforms are implemented here rather than with
// <random> distributions, whose output is not pinned down by the standard.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_(stream_id) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
    for (auto& w : state_) w = splitmix64(x);
    // A few warmup rounds decorrelate nearby keys.
    for (int i = 0; i < 8; ++i) next_u64();
  }

  // Independent child stream, deterministic in (this stream's key, salt).
  RngStream split(std::uint64_t salt) const {
    std::uint64_t a = seed_ ^ 0xbf58476d1ce4e5b9ULL;
    std::uint64_t b = stream_ + 0x94d049bb133111ebULL * (salt + 1);
    std::uint64_t x = a;
    (void)splitmix64(x);
    return RngStream(x ^ splitmix64(b), salt);
  }

  std::uint64_t next_u64() {
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

  // Uniform on the open interval (0,1); never returns 0 or 1, safe under log().
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double exponential() { return -std::log(uniform()); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double a = 6.283185307179586476925286766559 * uniform();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::array<std::uint64_t, 4> state_{};
  std::uint64_t seed_;
  std::uint64_t stream_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace regen
