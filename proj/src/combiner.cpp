#include "dtms/combiner.hpp"

#include <algorithm>

namespace dtms {

bool verify_partial(const PartialSignature& ps, const DealerPublicBoard& board,
                    const std::vector<MemberId>& subset, const GroupParams& params,
                    const LambdaTable* injected_lambda) {
  const MemberRecord& record = board.require(ps.uid);
  if (std::find(subset.begin(), subset.end(), ps.uid) == subset.end()) {
    throw std::invalid_argument("partial signer is not in the session subset");
  }
  const Int lambda = lambda_for(ps.uid, subset, params.q, injected_lambda);
  const Int exponent = mod_reduce(lambda * ps.r_s, params.q);
  const Int lhs = mod_exp(params.g, ps.s, params.p);
  const Int rhs = mod_reduce(ps.b * mod_exp(record.m, exponent, params.p), params.p);
  return lhs == rhs;
}

GroupSignature combine(const std::vector<PartialSignature>& partials,
                       const SessionAggregates& aggregates, const Bytes& message,
                       const DealerPublicBoard& board, const GroupParams& params,
                       const CombinePolicy& policy, const LambdaTable* injected_lambda) {
  if (partials.empty()) {
    throw CombineError("no partial signatures to combine");
  }
  if (partials.size() != aggregates.subset.size()) {
    throw CombineError("partial count does not match the session subset");
  }
  if (partials.size() < board.t) {
    throw CombineError("fewer partials than the threshold");
  }

  std::vector<MemberId> signers;
  for (const PartialSignature& ps : partials) {
    if (std::find(aggregates.subset.begin(), aggregates.subset.end(), ps.uid) ==
        aggregates.subset.end()) {
      throw CombineError("partial from a member outside the session subset", ps.uid);
    }
    if (std::find(signers.begin(), signers.end(), ps.uid) != signers.end()) {
      throw CombineError("two partials from one member", ps.uid);
    }
    signers.push_back(ps.uid);
  }

  const Int& r_s = partials.front().r_s;
  for (const PartialSignature& ps : partials) {
    if (ps.r_s != r_s) {
      throw CombineError("partials disagree on the challenge");
    }
  }
  if (aggregates.r_s != r_s) {
    throw CombineError("partials disagree with the session challenge");
  }
  if (policy.recompute_challenge) {
    const Int expected = hash_to_zq("challenge", {aggregates.v_s}, message, params);
    if (expected != r_s) {
      throw CombineError("challenge does not match the recomputed hash");
    }
  }

  Int sum = 0;
  for (const PartialSignature& ps : partials) {
    if (!verify_partial(ps, board, aggregates.subset, params, injected_lambda)) {
      throw CombineError("partial signature from member " + ps.uid.value.get_str(10) +
                             " failed verification",
                         ps.uid);
    }
    sum = mod_reduce(sum + ps.s, params.q);
  }

  GroupSignature sig;
  sig.s_s = sum;
  sig.u_s = aggregates.u_s;
  sig.w_s = aggregates.w_s;
  sig.message = message;
  sig.signer_ids = signers;
  std::sort(sig.signer_ids.begin(), sig.signer_ids.end());
  return sig;
}

}  // namespace dtms
