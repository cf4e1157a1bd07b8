#pragma once

#include <cstdint>
#include <random>

#include "dtms/bigint.hpp"

namespace dtms {

/// Source of randomness for every sampling operation. All protocol code takes
/// an Rng explicitly; there is no global generator, so runs are reproducible
/// from a seed.
class Rng {
 public:
  virtual ~Rng() = default;

  virtual std::uint64_t next_u64() = 0;

  /// Uniform in [0, 2^bit_count).
  Int bits(unsigned bit_count);

  /// Uniform in [0, bound) by rejection over bit-masked draws.
  Int below(const Int& bound);

  /// Uniform in [1, bound-1] by rejection; bound must exceed 1.
  Int nonzero_below(const Int& bound);
};

/// Deterministic stream seeded from a 64-bit value. std::mt19937_64 output is
/// pinned by the standard, so transcripts replay byte-identically everywhere.
class SeededRng final : public Rng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dtms
