#pragma once

#include <array>
#include <cstdint>

namespace seqmon {

/// Domain tags keep randomness used by different subsystems on disjoint
/// counter blocks even when the same master seed and replication index are
/// passed to more than one of them.
enum class RngDomain : std::uint64_t {
  generic = 0,
  calibration = 1,
  experiment = 2,
  bootstrap = 3,
  fixture = 4,
};

/// Philox4x64-10 block function (Salmon et al., SC'11). Verified against the
/// NumPy implementation of the same generator.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

/// Counter-based random stream. A stream is addressed by (master seed,
/// domain, stream index); draws within a stream advance a 128-bit block
/// counter. Streams never overlap, so replications can run in parallel in
/// any order and still reproduce bit-identical results.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream,
            RngDomain domain = RngDomain::generic);

  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on (0, 1]; safe as a log() argument.
  double uniform_pos();

  /// Standard normal via Box-Muller (trig form, spare value cached).
  double normal();

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> block_{};
  unsigned pos_ = 4;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace seqmon
