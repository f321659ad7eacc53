#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// A stream is identified by a 64-bit key plus the upper 96 bits of the
// counter; the low counter word walks the blocks inside the stream. Each
// Monte Carlo trial owns one stream, so any trial can be regenerated in
// isolation from (master seed, cell, trial index).

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

namespace pcmc {

class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::string_view name() { return "philox4x32-10"; }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  Philox4x32(Key key, Counter counter) : key_(key), counter_(counter) {}

  /// The keyed bijection applied to one counter block.
  static constexpr Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  result_type operator()() {
    if (used_ == 4) {
      buffer_ = block(counter_, key_);
      ++counter_[0];
      used_ = 0;
    }
    return buffer_[used_++];
  }

  /// Uniform on [0, 1) with 53 random bits; consumes two words.
  double uniform01() {
    const std::uint64_t hi = (*this)();
    const std::uint64_t lo = (*this)();
    return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
  }

  /// Fair coin from the top bit of one word.
  bool coin() { return ((*this)() >> 31) != 0; }

 private:
  Key key_;
  Counter counter_;
  Counter buffer_{};
  std::size_t used_ = 4;
};

/// SplitMix64 finalizer, used to spread seeds over the key space.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Stream key for one (order, deviation) cell under a master seed.
inline std::uint64_t cell_stream_key(std::uint64_t master_seed, std::size_t order, double deviation) {
  std::uint64_t k = mix64(master_seed);
  k = mix64(k ^ static_cast<std::uint64_t>(order));
  return mix64(k ^ std::bit_cast<std::uint64_t>(deviation));
}

/// Independent stream for one trial. `substream` separates uses within a trial.
inline Philox4x32 trial_stream(std::uint64_t stream_key, std::uint64_t trial_index,
                               std::uint32_t substream = 0) {
  return Philox4x32({static_cast<std::uint32_t>(stream_key), static_cast<std::uint32_t>(stream_key >> 32)},
                    {0u, substream, static_cast<std::uint32_t>(trial_index),
                     static_cast<std::uint32_t>(trial_index >> 32)});
}

}  // namespace pcmc
