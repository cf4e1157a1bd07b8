#include "dtms/shamir.hpp"

#include <stdexcept>

namespace dtms {

SecretPolynomial poly_sample(std::size_t t, const Int& secret, const GroupParams& params,
                             Rng& rng) {
  if (t < 1) {
    throw std::invalid_argument("threshold must be at least 1");
  }
  if (secret < 1 || secret >= params.q) {
    throw std::invalid_argument("secret must lie in [1, q-1]");
  }
  SecretPolynomial poly;
  poly.coefficients.reserve(t);
  poly.coefficients.push_back(secret);
  for (std::size_t i = 1; i < t; ++i) {
    poly.coefficients.push_back(rng.below(params.q));
  }
  return poly;
}

Int poly_eval(const SecretPolynomial& poly, const Int& u, const Int& q) {
  Int acc = 0;
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it) {
    acc = mod_reduce(acc * u + *it, q);
  }
  return acc;
}

Int lagrange_at_zero(const MemberId& i, const std::vector<MemberId>& subset, const Int& q) {
  bool present = false;
  for (const MemberId& j : subset) {
    if (j == i) {
      present = true;
      break;
    }
  }
  if (!present) {
    throw std::invalid_argument("member is not part of the subset");
  }

  Int lambda = 1;
  for (const MemberId& j : subset) {
    if (j == i) {
      continue;
    }
    const Int diff = mod_reduce(i.value - j.value, q);
    if (sgn(diff) == 0) {
      throw std::invalid_argument("member identities collide mod q");
    }
    lambda = mod_reduce(lambda * mod_reduce(-j.value, q) % q * mod_inv(diff, q), q);
  }
  return lambda;
}

Int lambda_for(const MemberId& i, const std::vector<MemberId>& subset, const Int& q,
               const LambdaTable* injected) {
  if (injected != nullptr) {
    const auto it = injected->find(i);
    if (it == injected->end()) {
      throw std::invalid_argument("injected lambda table has no entry for this member");
    }
    return mod_reduce(it->second, q);
  }
  return lagrange_at_zero(i, subset, q);
}

Int reconstruct_at_zero(const std::vector<std::pair<MemberId, Int>>& shares, const Int& q) {
  if (shares.empty()) {
    throw std::invalid_argument("reconstruction needs at least one share");
  }
  std::vector<MemberId> subset;
  subset.reserve(shares.size());
  for (const auto& [uid, value] : shares) {
    for (const MemberId& seen : subset) {
      if (seen == uid) {
        throw std::invalid_argument("duplicate member identity in share list");
      }
    }
    subset.push_back(uid);
  }

  Int secret = 0;
  for (const auto& [uid, value] : shares) {
    secret = mod_reduce(secret + value * lagrange_at_zero(uid, subset, q), q);
  }
  return secret;
}

}  // namespace dtms
