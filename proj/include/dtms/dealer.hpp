#pragma once

#include <map>
#include <vector>

#include "dtms/shamir.hpp"

namespace dtms {

/// One member's public board entry. m = g^l and n = g^K_i for the dealer-held
/// secrets; v = l * y^K mod p carries the masked share to its owner.
struct MemberRecord {
  MemberId uid;
  Int y;  // member public key
  Int m;
  Int n;
  Int v;
};

/// Everything the share distribution center publishes. The whole board is
/// public; v_i is already masked by y_i^K.
struct DealerPublicBoard {
  Int y_s;  // group public key g^f(0)
  Int w;    // g^-K
  std::size_t t = 0;
  std::vector<MemberRecord> members;

  std::size_t n() const { return members.size(); }
  const MemberRecord* find(const MemberId& uid) const;
  const MemberRecord& require(const MemberId& uid) const;
};

/// Dealer-side secrets, retained in memory as ground truth for oracles.
/// No serialization surface ever touches this type.
struct DealerSecrets {
  SecretPolynomial polynomial;
  Int masking_key;                     // K
  std::map<MemberId, Int> nonces;      // K_i
  std::map<MemberId, Int> f_values;    // share of f used for each member
  std::map<MemberId, Int> shares;      // l_i = K_i + f_value mod q
};

struct DealerSetupResult {
  DealerPublicBoard board;
  DealerSecrets secrets;
};

struct MemberInput {
  MemberId uid;
  Int y;
};

/// Fixture input: share value and masking nonce supplied by the caller
/// instead of being drawn. Test-only entry for replaying pinned setups whose
/// member identities are not tied to the polynomial.
struct FixedMemberInput {
  MemberId uid;
  Int y;
  Int nonce;    // K_i
  Int f_value;  // stands in for f(u_i)
};

/// Full setup: samples the polynomial (secret x_S), the masking key K, and
/// per-member nonces K_i, resampling any K_i that would make l_i = 0.
DealerSetupResult dealer_setup(const GroupParams& params, std::size_t t,
                               const std::vector<MemberInput>& members, Rng& rng);

/// Setup from pinned inputs; rejects any member whose l_i comes out 0.
DealerSetupResult dealer_setup_fixed(const GroupParams& params, std::size_t t,
                                     const std::vector<FixedMemberInput>& members,
                                     const SecretPolynomial& polynomial, const Int& masking_key);

}  // namespace dtms
