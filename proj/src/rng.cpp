#include "dtms/rng.hpp"

#include <stdexcept>

namespace dtms {

Int Rng::bits(unsigned bit_count) {
  Int out = 0;
  unsigned produced = 0;
  while (produced < bit_count) {
    out <<= 64;
    out |= Int(static_cast<unsigned long>(next_u64()));
    produced += 64;
  }
  if (produced > bit_count) {
    out >>= (produced - bit_count);
  }
  return out;
}

Int Rng::below(const Int& bound) {
  if (sgn(bound) <= 0) {
    throw std::invalid_argument("sampling bound must be positive");
  }
  const unsigned width = static_cast<unsigned>(mpz_sizeinbase(bound.get_mpz_t(), 2));
  while (true) {
    Int candidate = bits(width);
    if (candidate < bound) {
      return candidate;
    }
  }
}

Int Rng::nonzero_below(const Int& bound) {
  if (bound <= 1) {
    throw std::invalid_argument("nonzero sampling needs bound > 1");
  }
  while (true) {
    Int candidate = below(bound);
    if (sgn(candidate) != 0) {
      return candidate;
    }
  }
}

}  // namespace dtms
