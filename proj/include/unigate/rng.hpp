#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace unigate {

/// Philox4x32-10 block function (Salmon et al.); exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Counter-based stream keyed by `seed`, with an independent substream per
/// `stream` index. Two objects built from the same pair produce the same
/// sequence regardless of what any other stream did.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1), 53 bits.
  double uniform();
  /// Standard normal by Box-Muller.
  double normal();
  /// (x + i y) / sqrt(2) with x, y standard normal, so E|z|^2 = 1.
  std::complex<double> complex_normal();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace unigate
