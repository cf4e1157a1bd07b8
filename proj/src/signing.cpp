#include "dtms/signing.hpp"

#include <stdexcept>

namespace dtms {

RecoveredShare recover_share(const MemberRecord& record, const Int& w, const Int& member_secret,
                             const GroupParams& params) {
  const Int l = mod_reduce(record.v * mod_exp(w, member_secret, params.p), params.p);
  if (l < 1 || l >= params.q) {
    throw std::runtime_error("board/key inconsistency: recovered share outside [1, q-1]");
  }
  if (mod_exp(params.g, l, params.p) != record.m) {
    throw std::runtime_error("board/key inconsistency: recovered share does not match m");
  }
  return RecoveredShare{record.uid, l};
}

CommitmentTriple commit_with_nonce(const GroupParams& params, const Int& receiver_public_key,
                                   const NonceSecret& nonce) {
  if (receiver_public_key < 1 || receiver_public_key >= params.p) {
    throw std::invalid_argument("receiver public key out of range");
  }
  CommitmentTriple triple;
  triple.a = mod_exp(params.g, -nonce.k2, params.p);
  triple.b = mod_exp(params.g, nonce.k1, params.p);
  triple.c = mod_reduce(triple.b * mod_exp(receiver_public_key, nonce.k2, params.p), params.p);
  return triple;
}

std::pair<NonceSecret, CommitmentTriple> nonce_commit(const GroupParams& params,
                                                      const Int& receiver_public_key, Rng& rng) {
  NonceSecret nonce(rng.nonzero_below(params.q), rng.nonzero_below(params.q));
  CommitmentTriple triple = commit_with_nonce(params, receiver_public_key, nonce);
  return {std::move(nonce), triple};
}

SessionAggregates aggregate_commitments(const std::vector<CommitmentTriple>& triples,
                                        const std::vector<MemberId>& subset,
                                        std::size_t threshold, const Bytes& message,
                                        const GroupParams& params) {
  if (triples.size() != subset.size()) {
    throw std::invalid_argument("need exactly one commitment triple per subset member");
  }
  if (subset.size() < threshold) {
    throw std::invalid_argument("signer subset is smaller than the threshold");
  }

  SessionAggregates agg;
  agg.u_s = 1;
  agg.v_s = 1;
  agg.w_s = 1;
  for (const CommitmentTriple& triple : triples) {
    agg.u_s = mod_reduce(agg.u_s * triple.a, params.p);
    agg.v_s = mod_reduce(agg.v_s * triple.b, params.p);
    agg.w_s = mod_reduce(agg.w_s * triple.c, params.p);
  }
  agg.r_s = hash_to_zq("challenge", {agg.v_s}, message, params);
  agg.subset = subset;
  return agg;
}

SignerContext modify_shadow(const RecoveredShare& share, const std::vector<MemberId>& subset,
                            const Int& q, const LambdaTable* injected_lambda) {
  const Int lambda = lambda_for(share.uid, subset, q, injected_lambda);
  return SignerContext{share.uid, lambda, mod_reduce(share.l * lambda, q)};
}

PartialSignature partial_sign(NonceSecret nonce, const CommitmentTriple& commitment,
                              const SignerContext& context, const Int& r_s, const Int& q) {
  if (r_s < 0 || r_s >= q) {
    throw std::invalid_argument("challenge out of range [0, q-1]");
  }
  const Int s = mod_reduce(nonce.k1 + context.ms * r_s, q);
  return PartialSignature{context.uid, s, commitment.b, r_s};
}

}  // namespace dtms
