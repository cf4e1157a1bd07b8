#pragma once

#include <map>
#include <string>
#include <vector>

#include "dtms/bigint.hpp"
#include "dtms/rng.hpp"

namespace dtms {

enum class HashVariant { kReal, kFixture };

/// How challenges are derived. Real mode hashes with SHA-256 under a domain
/// tag; fixture mode answers from a pinned table so known worked examples can
/// be replayed exactly. A fixture lookup miss is an error, never a default.
struct HashMode {
  HashVariant variant = HashVariant::kReal;
  std::string domain_tag = "dtms.v1";
  std::map<std::string, Int> fixture_table;

  static HashMode real(std::string tag = "dtms.v1");
  static HashMode fixture(std::map<std::string, Int> table);
};

/// The public group: prime p, prime q dividing p-1, and g generating the
/// order-q subgroup of Z_p*. All protocol arithmetic happens here.
struct GroupParams {
  Int p;
  Int q;
  Int g;
  HashMode hash;
};

struct KeyPair {
  Int x;  // secret, in [1, q-1]
  Int y;  // g^x mod p
};

struct ParamsReport {
  std::vector<std::string> violations;
  std::string size_class;  // "toy" or "standard"

  bool ok() const { return violations.empty(); }
};

/// base^exponent mod modulus. Negative exponents go through the modular
/// inverse, so g^-K is directly expressible.
Int mod_exp(const Int& base, const Int& exponent, const Int& modulus);

/// Multiplicative inverse mod a prime. Throws if a == 0 (mod modulus).
Int mod_inv(const Int& a, const Int& modulus);

bool is_probable_prime(const Int& n);

/// Samples a prime q of q_bits, searches p = 2*r*q + 1 prime of p_bits, and
/// sets g = k^((p-1)/q) mod p for random k until g > 1.
GroupParams generate_params(unsigned q_bits, unsigned p_bits, Rng& rng,
                            HashMode hash = HashMode::real());

/// Reports every violated group invariant; empty report means valid.
ParamsReport validate_params(const GroupParams& params);

/// x uniform in [1, q-1] by rejection, y = g^x mod p.
KeyPair keypair_gen(const GroupParams& params, Rng& rng);

/// Challenge derivation. Real mode hashes
///   UTF-8("<domain_tag>/<call_tag>") || 0x00 || hex(input) || 0x00 ... || message
/// with SHA-256 and reduces the digest mod q. Fixture mode returns the table
/// entry for call_tag and throws when the tag is absent.
Int hash_to_zq(const std::string& call_tag, const std::vector<Int>& group_inputs,
               const Bytes& message, const GroupParams& params);

}  // namespace dtms
