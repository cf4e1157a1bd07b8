#pragma once

#include <utility>
#include <vector>

#include "dtms/dealer.hpp"

namespace dtms {

/// A member's unmasked share, recovered from the board with the member's
/// secret key. Always a canonical Z_q representative, checked against m_i.
struct RecoveredShare {
  MemberId uid;
  Int l;
};

/// Per-session nonce pair. Move-only: a nonce must never sign twice, so
/// partial_sign consumes it.
struct NonceSecret {
  Int k1;
  Int k2;

  NonceSecret(Int k1_, Int k2_) : k1(std::move(k1_)), k2(std::move(k2_)) {}
  NonceSecret(NonceSecret&&) = default;
  NonceSecret& operator=(NonceSecret&&) = default;
  NonceSecret(const NonceSecret&) = delete;
  NonceSecret& operator=(const NonceSecret&) = delete;
};

/// Nonce commitments: a = g^-k2, b = g^k1, c = g^k1 * y_R^k2 (all mod p).
/// b travels signer-to-signer on private channels; a and c are broadcast.
struct CommitmentTriple {
  Int a;
  Int b;
  Int c;
};

/// Session-wide commitment products and the challenge they bind.
struct SessionAggregates {
  Int u_s;  // prod a_i mod p
  Int v_s;  // prod b_i mod p
  Int w_s;  // prod c_i mod p
  Int r_s;  // challenge
  std::vector<MemberId> subset;
};

/// A signer's Lagrange coefficient and modified shadow ms = l * lambda mod q.
struct SignerContext {
  MemberId uid;
  Int lambda;
  Int ms;
};

struct PartialSignature {
  MemberId uid;
  Int s;
  Int b;    // the signer's commitment b, delivered with the partial
  Int r_s;  // challenge the partial answers
};

/// l = v * w^x mod p, then checks 1 <= l < q and g^l = m against the board.
RecoveredShare recover_share(const MemberRecord& record, const Int& w, const Int& member_secret,
                             const GroupParams& params);

CommitmentTriple commit_with_nonce(const GroupParams& params, const Int& receiver_public_key,
                                   const NonceSecret& nonce);

std::pair<NonceSecret, CommitmentTriple> nonce_commit(const GroupParams& params,
                                                      const Int& receiver_public_key, Rng& rng);

/// Products over the subset (mod p) plus the challenge
/// r_s = hash_to_zq("challenge", [v_s], message).
SessionAggregates aggregate_commitments(const std::vector<CommitmentTriple>& triples,
                                        const std::vector<MemberId>& subset,
                                        std::size_t threshold, const Bytes& message,
                                        const GroupParams& params);

SignerContext modify_shadow(const RecoveredShare& share, const std::vector<MemberId>& subset,
                            const Int& q, const LambdaTable* injected_lambda = nullptr);

/// s = k1 + ms * r_s mod q. Consumes the nonce.
PartialSignature partial_sign(NonceSecret nonce, const CommitmentTriple& commitment,
                              const SignerContext& context, const Int& r_s, const Int& q);

}  // namespace dtms
