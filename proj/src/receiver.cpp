#include "dtms/receiver.hpp"

#include <stdexcept>

namespace dtms {

Int compute_verification_value(const std::vector<MemberId>& signer_ids,
                               const DealerPublicBoard& board, const GroupParams& params,
                               const LambdaTable* injected_lambda) {
  Int e = 1;
  for (const MemberId& uid : signer_ids) {
    const MemberRecord& record = board.require(uid);
    const Int lambda = lambda_for(uid, signer_ids, params.q, injected_lambda);
    e = mod_reduce(e * mod_exp(record.n, lambda, params.p), params.p);
  }
  return e;
}

Int recover_commitment(const Int& w_s, const Int& u_s, const Int& receiver_secret,
                       const GroupParams& params) {
  return mod_reduce(w_s * mod_exp(u_s, receiver_secret, params.p), params.p);
}

bool verify_group_signature(const GroupSignature& sig, const DealerPublicBoard& board,
                            const KeyPair& receiver, const GroupParams& params,
                            const LambdaTable* injected_lambda) {
  const Int e = compute_verification_value(sig.signer_ids, board, params, injected_lambda);
  const Int r_r = recover_commitment(sig.w_s, sig.u_s, receiver.x, params);
  const Int r_s = hash_to_zq("challenge", {r_r}, sig.message, params);
  const Int lhs = mod_exp(params.g, sig.s_s, params.p);
  const Int rhs =
      mod_reduce(r_r * mod_exp(mod_reduce(e * board.y_s, params.p), r_s, params.p), params.p);
  return lhs == rhs;
}

ConfirmationPackage build_confirmation_package(const GroupSignature& sig,
                                               const DealerPublicBoard& board,
                                               const KeyPair& receiver, const GroupParams& params,
                                               const LambdaTable* injected_lambda) {
  if (!verify_group_signature(sig, board, receiver, params, injected_lambda)) {
    throw std::invalid_argument("signature does not verify for this receiver");
  }
  ConfirmationPackage package;
  package.e = compute_verification_value(sig.signer_ids, board, params, injected_lambda);
  package.mu = mod_exp(sig.u_s, receiver.x, params.p);
  package.r_r = mod_reduce(package.mu * sig.w_s, params.p);
  package.s_s = sig.s_s;
  package.u_s = sig.u_s;
  package.message = sig.message;
  return package;
}

bool third_party_check(const ConfirmationPackage& package, const Int& group_public_key,
                       const GroupParams& params) {
  const Int r_s = hash_to_zq("challenge", {package.r_r}, package.message, params);
  const Int lhs = mod_exp(params.g, package.s_s, params.p);
  const Int rhs = mod_reduce(
      package.r_r * mod_exp(mod_reduce(package.e * group_public_key, params.p), r_s, params.p),
      params.p);
  return lhs == rhs;
}

bool third_party_check_against_board(const ConfirmationPackage& package,
                                     const std::vector<MemberId>& signer_ids,
                                     const DealerPublicBoard& board, const GroupParams& params,
                                     const LambdaTable* injected_lambda) {
  const Int e = compute_verification_value(signer_ids, board, params, injected_lambda);
  if (e != package.e) {
    return false;
  }
  return third_party_check(package, board.y_s, params);
}

std::string zk_audit(const ConfirmationPackage& package, const Int& receiver_public_key,
                     const ZkTranscript& transcript, const GroupParams& params) {
  const Int& p = params.p;
  const Int opened =
      mod_reduce(mod_exp(package.u_s, transcript.u, p) * mod_exp(params.g, transcript.v, p), p);
  if (opened != transcript.w) {
    return "w";
  }
  const Int blinded_exp = transcript.v + transcript.alpha;
  const Int beta_expected =
      mod_reduce(mod_exp(package.u_s, transcript.u, p) * mod_exp(params.g, blinded_exp, p), p);
  if (beta_expected != transcript.beta) {
    return "beta";
  }
  const Int gamma_expected = mod_reduce(
      mod_exp(package.mu, transcript.u, p) * mod_exp(receiver_public_key, blinded_exp, p), p);
  if (gamma_expected != transcript.gamma) {
    return "gamma";
  }
  return "";
}

ZkTranscript zk_run_with_randomness(const ConfirmationPackage& package, const KeyPair& receiver,
                                    const Int& u, const Int& v, const Int& alpha,
                                    const GroupParams& params) {
  ZkTranscript t;
  t.u = u;
  t.v = v;
  t.alpha = alpha;
  t.w = mod_reduce(mod_exp(package.u_s, u, params.p) * mod_exp(params.g, v, params.p), params.p);
  t.beta = mod_reduce(t.w * mod_exp(params.g, alpha, params.p), params.p);
  t.gamma = mod_exp(t.beta, receiver.x, params.p);

  t.failing_check = zk_audit(package, receiver.y, t, params);
  t.accepted = t.failing_check.empty();
  return t;
}

ZkTranscript zk_run(const ConfirmationPackage& package, const KeyPair& receiver,
                    Rng& third_party_rng, Rng& receiver_rng, const GroupParams& params) {
  const Int u = third_party_rng.nonzero_below(params.p);
  const Int v = third_party_rng.nonzero_below(params.p);
  const Int alpha = receiver_rng.nonzero_below(params.p);
  return zk_run_with_randomness(package, receiver, u, v, alpha, params);
}

}  // namespace dtms
