#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtms/signing.hpp"

namespace dtms {

/// The transmitted group signature plus the signer set. The signer set is
/// carried explicitly: the receiver cannot form its verification value E
/// without knowing who signed, and it is what makes the signing set traceable.
struct GroupSignature {
  Int s_s;
  Int u_s;
  Int w_s;
  Bytes message;
  std::vector<MemberId> signer_ids;  // sorted ascending
};

/// Raised when combination must stop. `offender` names the member whose
/// partial failed verification, when that is the cause.
class CombineError : public std::runtime_error {
 public:
  explicit CombineError(const std::string& what, std::optional<MemberId> offender_ = std::nullopt)
      : std::runtime_error(what), offender(std::move(offender_)) {}

  std::optional<MemberId> offender;
};

struct CombinePolicy {
  /// Recompute the challenge from v_s instead of trusting the partials'
  /// common r_s. The combiner can do this because partials deliver b_i.
  bool recompute_challenge = true;
};

/// Partial check: g^s = b * m_i^(lambda_i * r_s mod q) (mod p).
/// A member missing from board or subset is an error, distinct from false.
bool verify_partial(const PartialSignature& ps, const DealerPublicBoard& board,
                    const std::vector<MemberId>& subset, const GroupParams& params,
                    const LambdaTable* injected_lambda = nullptr);

/// Checks every partial and sums s_s = sum s_i mod q. The combiner holds no
/// secret state: everything here is board data and received partials.
GroupSignature combine(const std::vector<PartialSignature>& partials,
                       const SessionAggregates& aggregates, const Bytes& message,
                       const DealerPublicBoard& board, const GroupParams& params,
                       const CombinePolicy& policy = {},
                       const LambdaTable* injected_lambda = nullptr);

}  // namespace dtms
