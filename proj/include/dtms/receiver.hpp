#pragma once

#include <string>
#include <vector>

#include "dtms/combiner.hpp"

namespace dtms {

/// What the receiver forwards to a third party:
/// {r_r, e, s_s, u_s, message, mu} with mu = u_s^x_R mod p.
struct ConfirmationPackage {
  Int r_r;
  Int e;
  Int s_s;
  Int u_s;
  Bytes message;
  Int mu;
};

/// Transcript of the interactive confirmation. Scalars u, v, alpha are stored
/// exactly as exchanged (they may exceed q; exponentiation reduces them).
struct ZkTranscript {
  Int w;      // third party's blinded commitment u_s^u * g^v
  Int beta;   // receiver's rebinding w * g^alpha
  Int gamma;  // beta^x_R
  Int u;
  Int v;
  Int alpha;
  bool accepted = false;
  std::string failing_check;  // "w", "beta" or "gamma" when rejected
};

/// E = prod n_i^(lambda_i mod q) mod p over the signer set. Recomputed from
/// the board; during signature verification E is never taken from the wire.
Int compute_verification_value(const std::vector<MemberId>& signer_ids,
                               const DealerPublicBoard& board, const GroupParams& params,
                               const LambdaTable* injected_lambda = nullptr);

/// r_r = w_s * u_s^x mod p. Equals v_s whenever the session was honest.
Int recover_commitment(const Int& w_s, const Int& u_s, const Int& receiver_secret,
                       const GroupParams& params);

/// Directed check: recompute E and r_r, derive the challenge from r_r, and
/// test g^s_s = r_r * (E * y_s)^challenge (mod p).
bool verify_group_signature(const GroupSignature& sig, const DealerPublicBoard& board,
                            const KeyPair& receiver, const GroupParams& params,
                            const LambdaTable* injected_lambda = nullptr);

/// Requires that the signature verifies for this receiver.
ConfirmationPackage build_confirmation_package(const GroupSignature& sig,
                                               const DealerPublicBoard& board,
                                               const KeyPair& receiver, const GroupParams& params,
                                               const LambdaTable* injected_lambda = nullptr);

/// Third-party congruence check on the package as transmitted (E trusted).
bool third_party_check(const ConfirmationPackage& package, const Int& group_public_key,
                       const GroupParams& params);

/// Stronger, optional variant: also recomputes E from the board and the
/// claimed signer set and compares it with the packaged one.
bool third_party_check_against_board(const ConfirmationPackage& package,
                                     const std::vector<MemberId>& signer_ids,
                                     const DealerPublicBoard& board, const GroupParams& params,
                                     const LambdaTable* injected_lambda = nullptr);

/// Re-runs the closing checks of the confirmation protocol against transcript
/// values. Returns "" on acceptance, else the label of the first failing
/// check: "w" (receiver's opening check), "beta" or "gamma" (third party's).
std::string zk_audit(const ConfirmationPackage& package, const Int& receiver_public_key,
                     const ZkTranscript& transcript, const GroupParams& params);

/// Four-move confirmation run with pinned randomness.
ZkTranscript zk_run_with_randomness(const ConfirmationPackage& package, const KeyPair& receiver,
                                    const Int& u, const Int& v, const Int& alpha,
                                    const GroupParams& params);

/// Four-move confirmation: the third party blinds with u, v; the receiver
/// rebinds with alpha and proves log_{u_s} mu = log_g y_R.
ZkTranscript zk_run(const ConfirmationPackage& package, const KeyPair& receiver,
                    Rng& third_party_rng, Rng& receiver_rng, const GroupParams& params);

}  // namespace dtms
