#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace ruin {

// Counter-addressable random stream: the stream for (seed, index) is a pure
// function of those two numbers, so path j draws the same variates whatever
// thread runs it. xoshiro256++ core, state expanded from splitmix64.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0) noexcept {
    std::uint64_t sm = seed ^ mix(index + 0x632BE59BD9B4E019ULL);
    for (auto& word : state_) word = splitmix(sm);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
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

  // Uniform on (0, 1]; never returns 0 so -log(u) is always finite.
  double uniform_open0() noexcept {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static constexpr std::uint64_t splitmix(std::uint64_t& s) noexcept {
    s += 0x9E3779B97F4A7C15ULL;
    return mix(s);
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace ruin
