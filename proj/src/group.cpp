#include "dtms/group.hpp"

#include <openssl/evp.h>

#include <stdexcept>
#include <utility>

namespace dtms {
namespace {

constexpr int kMillerRabinRounds = 30;
constexpr unsigned kPrimeSearchAttempts = 20000;
constexpr unsigned kModulusSearchAttempts = 20000;
constexpr unsigned kGeneratorSearchAttempts = 1000;

Bytes sha256(const Bytes& data) {
  Bytes digest(32);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != 32) {
    throw std::runtime_error("SHA-256 digest failure");
  }
  return digest;
}

Int sample_prime(unsigned bit_count, Rng& rng) {
  if (bit_count < 2) {
    throw std::invalid_argument("prime width must be at least 2 bits");
  }
  for (unsigned attempt = 0; attempt < kPrimeSearchAttempts; ++attempt) {
    Int candidate = rng.bits(bit_count - 1);
    candidate |= Int(1) << (bit_count - 1);  // exact width
    candidate |= 1;                          // odd
    if (is_probable_prime(candidate)) {
      return candidate;
    }
  }
  throw std::runtime_error("prime sampling exhausted its attempt bound");
}

}  // namespace

HashMode HashMode::real(std::string tag) {
  HashMode mode;
  mode.variant = HashVariant::kReal;
  mode.domain_tag = std::move(tag);
  return mode;
}

HashMode HashMode::fixture(std::map<std::string, Int> table) {
  HashMode mode;
  mode.variant = HashVariant::kFixture;
  mode.fixture_table = std::move(table);
  return mode;
}

Int mod_exp(const Int& base, const Int& exponent, const Int& modulus) {
  if (modulus <= 1) {
    throw std::invalid_argument("modulus must exceed 1");
  }
  Int b = mod_reduce(base, modulus);
  if (sgn(exponent) < 0) {
    b = mod_inv(b, modulus);
  }
  Int e = abs(exponent);
  Int out;
  mpz_powm(out.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

Int mod_inv(const Int& a, const Int& modulus) {
  Int reduced = mod_reduce(a, modulus);
  if (sgn(reduced) == 0) {
    throw std::invalid_argument("no modular inverse: value is 0 mod modulus");
  }
  Int out;
  if (mpz_invert(out.get_mpz_t(), reduced.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw std::invalid_argument("no modular inverse: gcd(value, modulus) != 1");
  }
  return out;
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) > 0;
}

GroupParams generate_params(unsigned q_bits, unsigned p_bits, Rng& rng, HashMode hash) {
  if (q_bits < 4) {
    throw std::invalid_argument("q_bits must be at least 4");
  }
  if (p_bits <= q_bits) {
    throw std::invalid_argument("p_bits must exceed q_bits");
  }

  for (unsigned attempt = 0; attempt < 64; ++attempt) {
    const Int q = sample_prime(q_bits, rng);

    // p = 2*r*q + 1 with r drawn so p lands in [2^(p_bits-1), 2^p_bits).
    const Int p_low = Int(1) << (p_bits - 1);
    const Int p_high = (Int(1) << p_bits) - 1;
    const Int r_low = p_low / (2 * q) + 1;
    const Int r_high = (p_high - 1) / (2 * q);
    if (r_low > r_high) {
      continue;
    }

    Int p = 0;
    bool found_p = false;
    for (unsigned inner = 0; inner < kModulusSearchAttempts; ++inner) {
      const Int r = r_low + rng.below(r_high - r_low + 1);
      const Int candidate = 2 * r * q + 1;
      if (candidate < p_low || candidate > p_high) {
        continue;
      }
      if (is_probable_prime(candidate)) {
        p = candidate;
        found_p = true;
        break;
      }
    }
    if (!found_p) {
      continue;
    }

    const Int cofactor = (p - 1) / q;
    for (unsigned inner = 0; inner < kGeneratorSearchAttempts; ++inner) {
      const Int k = rng.nonzero_below(p);
      const Int g = mod_exp(k, cofactor, p);
      if (g > 1) {
        return GroupParams{p, q, g, hash};
      }
    }
  }
  throw std::runtime_error("group parameter generation exhausted its attempt bound");
}

ParamsReport validate_params(const GroupParams& params) {
  ParamsReport report;
  const Int& p = params.p;
  const Int& q = params.q;
  const Int& g = params.g;

  if (!is_probable_prime(p)) {
    report.violations.push_back("p prime");
  }
  if (!is_probable_prime(q)) {
    report.violations.push_back("q prime");
  }
  if (q <= 1 || p <= 1 || mod_reduce(p - 1, q) != 0) {
    report.violations.push_back("q divides p-1");
  }
  if (g < 1 || g >= p) {
    report.violations.push_back("g in [1, p-1]");
  } else {
    if (g == 1) {
      report.violations.push_back("g != 1");
    }
    if (q >= 1 && mod_exp(g, q, p) != 1) {
      report.violations.push_back("g^q = 1 (mod p)");
    }
  }

  const bool standard_p = p > (Int(1) << 511) && p < (Int(1) << 512);
  const bool standard_q = q > (Int(1) << 159) && q < (Int(1) << 160);
  report.size_class = (standard_p && standard_q) ? "standard" : "toy";
  return report;
}

KeyPair keypair_gen(const GroupParams& params, Rng& rng) {
  const Int x = rng.nonzero_below(params.q);
  return KeyPair{x, mod_exp(params.g, x, params.p)};
}

Int hash_to_zq(const std::string& call_tag, const std::vector<Int>& group_inputs,
               const Bytes& message, const GroupParams& params) {
  if (params.hash.variant == HashVariant::kFixture) {
    const auto it = params.hash.fixture_table.find(call_tag);
    if (it == params.hash.fixture_table.end()) {
      throw std::runtime_error("hash fixture has no entry for tag '" + call_tag + "'");
    }
    return mod_reduce(it->second, params.q);
  }

  Bytes framed;
  const std::string tag = params.hash.domain_tag + "/" + call_tag;
  framed.insert(framed.end(), tag.begin(), tag.end());
  framed.push_back(0x00);
  for (const Int& value : group_inputs) {
    const std::string hex = to_hex(value);
    framed.insert(framed.end(), hex.begin(), hex.end());
    framed.push_back(0x00);
  }
  framed.insert(framed.end(), message.begin(), message.end());

  const Bytes digest = sha256(framed);
  Int acc = 0;
  for (std::uint8_t byte : digest) {
    acc <<= 8;
    acc |= static_cast<unsigned long>(byte);
  }
  return mod_reduce(acc, params.q);
}

}  // namespace dtms
