#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dtms/group.hpp"

namespace dtms {

/// Public member identity. Zero is forbidden (u = 0 would hand out f(0)
/// itself as a share) and identities must stay distinct mod q.
struct MemberId {
  Int value{0};

  friend bool operator==(const MemberId& a, const MemberId& b) { return cmp(a.value, b.value) == 0; }
  friend bool operator!=(const MemberId& a, const MemberId& b) { return !(a == b); }
  friend bool operator<(const MemberId& a, const MemberId& b) { return cmp(a.value, b.value) < 0; }
};

inline MemberId member_id(long v) { return MemberId{Int(v)}; }

/// Degree-(t-1) polynomial over Z_q; coefficients a_0..a_{t-1} with a_0 the
/// shared secret f(0).
struct SecretPolynomial {
  std::vector<Int> coefficients;

  std::size_t threshold() const { return coefficients.size(); }
};

/// Injected Lagrange coefficients, used where a fixture pins lambda values
/// instead of deriving them from member identities.
using LambdaTable = std::map<MemberId, Int>;

SecretPolynomial poly_sample(std::size_t t, const Int& secret, const GroupParams& params, Rng& rng);

Int poly_eval(const SecretPolynomial& poly, const Int& u, const Int& q);

/// lambda_i = prod_{j in subset, j != i} (-u_j) * (u_i - u_j)^-1 mod q.
Int lagrange_at_zero(const MemberId& i, const std::vector<MemberId>& subset, const Int& q);

/// lagrange_at_zero, unless an injected table supplies the coefficient.
Int lambda_for(const MemberId& i, const std::vector<MemberId>& subset, const Int& q,
               const LambdaTable* injected = nullptr);

/// f(0) = sum share_i * lambda_i mod q over the given shares.
Int reconstruct_at_zero(const std::vector<std::pair<MemberId, Int>>& shares, const Int& q);

}  // namespace dtms
