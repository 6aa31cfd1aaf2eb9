#pragma once

// Counter-based Philox4x32-10 generator.  A stream is identified by
// (seed, stream id); draw i of a stream is a pure function of (seed,
// stream, i), so Monte Carlo shards reproduce bit-exactly regardless of
// scheduling.

#include <array>
#include <cstdint>

namespace spheretrace::rng {

using Block = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// Ten-round Philox4x32 bijection.
Block philox4x32_10(Block counter, Key key);

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();
  /// Standard normal (Box-Muller, both outputs used).
  double normal();

 private:
  void refill();

  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Block buffer_{};
  int used_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace spheretrace::rng
