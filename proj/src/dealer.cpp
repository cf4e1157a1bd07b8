#include "dtms/dealer.hpp"

#include <stdexcept>

namespace dtms {
namespace {

constexpr unsigned kNonceResampleBound = 256;

void check_member_inputs(const GroupParams& params, std::size_t t, std::size_t n,
                         const std::vector<MemberId>& uids, const std::vector<Int>& keys) {
  if (t < 1) {
    throw std::invalid_argument("threshold must be at least 1");
  }
  if (t > n) {
    throw std::invalid_argument("threshold exceeds group size");
  }
  for (std::size_t i = 0; i < uids.size(); ++i) {
    const Int reduced = mod_reduce(uids[i].value, params.q);
    if (sgn(reduced) == 0) {
      throw std::invalid_argument("member identity must be nonzero mod q");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (mod_reduce(uids[j].value, params.q) == reduced) {
        throw std::invalid_argument("duplicate member identity");
      }
    }
  }
  for (const Int& y : keys) {
    if (y < 2 || y >= params.p) {
      throw std::invalid_argument("member public key out of range [2, p-1]");
    }
  }
}

MemberRecord make_record(const GroupParams& params, const MemberId& uid, const Int& y,
                         const Int& nonce, const Int& share, const Int& masking_key) {
  MemberRecord rec;
  rec.uid = uid;
  rec.y = y;
  rec.m = mod_exp(params.g, share, params.p);
  rec.n = mod_exp(params.g, nonce, params.p);
  rec.v = mod_reduce(share * mod_exp(y, masking_key, params.p), params.p);
  return rec;
}

}  // namespace

const MemberRecord* DealerPublicBoard::find(const MemberId& uid) const {
  for (const MemberRecord& rec : members) {
    if (rec.uid == uid) {
      return &rec;
    }
  }
  return nullptr;
}

const MemberRecord& DealerPublicBoard::require(const MemberId& uid) const {
  const MemberRecord* rec = find(uid);
  if (rec == nullptr) {
    throw std::invalid_argument("member " + uid.value.get_str(10) + " is not on the board");
  }
  return *rec;
}

DealerSetupResult dealer_setup(const GroupParams& params, std::size_t t,
                               const std::vector<MemberInput>& members, Rng& rng) {
  std::vector<MemberId> uids;
  std::vector<Int> keys;
  for (const MemberInput& m : members) {
    uids.push_back(m.uid);
    keys.push_back(m.y);
  }
  check_member_inputs(params, t, members.size(), uids, keys);

  DealerSetupResult out;
  const Int group_secret = rng.nonzero_below(params.q);
  out.secrets.polynomial = poly_sample(t, group_secret, params, rng);
  out.secrets.masking_key = rng.nonzero_below(params.q);

  out.board.t = t;
  out.board.y_s = mod_exp(params.g, group_secret, params.p);
  out.board.w = mod_exp(params.g, -out.secrets.masking_key, params.p);

  for (const MemberInput& m : members) {
    const Int f_value = poly_eval(out.secrets.polynomial, m.uid.value, params.q);

    Int nonce;
    Int share;
    bool ok = false;
    for (unsigned attempt = 0; attempt < kNonceResampleBound; ++attempt) {
      nonce = rng.nonzero_below(params.q);
      share = mod_reduce(nonce + f_value, params.q);
      if (sgn(share) != 0) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw std::runtime_error("masking nonce resampling bound exceeded");
    }

    out.secrets.nonces[m.uid] = nonce;
    out.secrets.f_values[m.uid] = f_value;
    out.secrets.shares[m.uid] = share;
    out.board.members.push_back(
        make_record(params, m.uid, m.y, nonce, share, out.secrets.masking_key));
  }
  return out;
}

DealerSetupResult dealer_setup_fixed(const GroupParams& params, std::size_t t,
                                     const std::vector<FixedMemberInput>& members,
                                     const SecretPolynomial& polynomial,
                                     const Int& masking_key) {
  std::vector<MemberId> uids;
  std::vector<Int> keys;
  for (const FixedMemberInput& m : members) {
    uids.push_back(m.uid);
    keys.push_back(m.y);
  }
  check_member_inputs(params, t, members.size(), uids, keys);
  if (masking_key < 1 || masking_key >= params.q) {
    throw std::invalid_argument("masking key must lie in [1, q-1]");
  }

  DealerSetupResult out;
  out.secrets.polynomial = polynomial;
  out.secrets.masking_key = masking_key;

  out.board.t = t;
  out.board.y_s = mod_exp(params.g, poly_eval(polynomial, 0, params.q), params.p);
  out.board.w = mod_exp(params.g, -masking_key, params.p);

  for (const FixedMemberInput& m : members) {
    const Int share = mod_reduce(m.nonce + m.f_value, params.q);
    if (sgn(share) == 0) {
      throw std::invalid_argument("fixed inputs give a zero masked share");
    }
    out.secrets.nonces[m.uid] = mod_reduce(m.nonce, params.q);
    out.secrets.f_values[m.uid] = mod_reduce(m.f_value, params.q);
    out.secrets.shares[m.uid] = share;
    out.board.members.push_back(make_record(params, m.uid, m.y, m.nonce, share, masking_key));
  }
  return out;
}

}  // namespace dtms
