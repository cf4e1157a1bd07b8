#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dtms {

using Int = mpz_class;
using Bytes = std::vector<std::uint8_t>;

/// Canonical integer encoding used by hashing and file records:
/// lowercase hexadecimal, big-endian, no leading zeros, "0" for zero.
std::string to_hex(const Int& value);

/// Inverse of to_hex. Rejects empty strings, signs, and non-hex characters.
Int from_hex(const std::string& text);

std::string bytes_to_hex(const Bytes& data);
Bytes bytes_from_hex(const std::string& text);

Bytes utf8_bytes(const std::string& text);

/// a mod m normalized into [0, m).
Int mod_reduce(const Int& a, const Int& m);

}  // namespace dtms
