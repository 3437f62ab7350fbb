// Copyright 2026 The PRDA Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace prda {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// splitmix64 finalizer; used to derive stream identifiers.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Names one independent random stream: the job's master seed plus a stream
/// selector. Value type; copying it is how streams are handed to workers.
struct RandomSource {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  /// Child stream keyed by `tag`. Distinct tags give unrelated streams.
  RandomSource substream(std::uint64_t tag) const noexcept;

  friend bool operator==(const RandomSource&, const RandomSource&) = default;
};

/// Sequential draws from a RandomSource. Draw k of a stream is a pure
/// function of (master_seed, stream_id, k), so prefixes are shared between
/// generators of the same source regardless of how many values are consumed.
class Generator {
 public:
  explicit Generator(RandomSource source) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;

  /// Standard normal deviate (Marsaglia polar method).
  double normal() noexcept;

  const RandomSource& source() const noexcept { return source_; }

 private:
  void refill() noexcept;

  RandomSource source_;
  std::array<std::uint32_t, 2> key_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_words_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace prda
