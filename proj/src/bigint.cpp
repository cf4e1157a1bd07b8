#include "dtms/bigint.hpp"

#include <stdexcept>

namespace dtms {

std::string to_hex(const Int& value) {
  if (sgn(value) < 0) {
    throw std::invalid_argument("canonical hex encoding is unsigned");
  }
  return value.get_str(16);
}

Int from_hex(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty hex integer");
  }
  for (char c : text) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) {
      throw std::invalid_argument("invalid hex integer: " + text);
    }
  }
  return Int(text, 16);
}

std::string bytes_to_hex(const Bytes& data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0f]);
  }
  return out;
}

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  throw std::invalid_argument("invalid hex byte string");
}

}  // namespace

Bytes bytes_from_hex(const std::string& text) {
  if (text.size() % 2 != 0) {
    throw std::invalid_argument("hex byte string must have even length");
  }
  Bytes out;
  out.reserve(text.size() / 2);
  for (std::size_t i = 0; i < text.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(hex_nibble(text[i]) << 4 | hex_nibble(text[i + 1])));
  }
  return out;
}

Bytes utf8_bytes(const std::string& text) {
  return Bytes(text.begin(), text.end());
}

Int mod_reduce(const Int& a, const Int& m) {
  Int r = a % m;
  if (sgn(r) < 0) {
    r += m;
  }
  return r;
}

}  // namespace dtms
