#include "dtms/sim.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <stdexcept>

#include "dtms/demo_fixture.hpp"

namespace dtms {
namespace {

std::string digest16(const std::string& payload) {
  unsigned char out[32];
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), out, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failure");
  }
  static const char* digits = "0123456789abcdef";
  std::string hex;
  for (int i = 0; i < 8; ++i) {
    hex.push_back(digits[out[i] >> 4]);
    hex.push_back(digits[out[i] & 0x0f]);
  }
  return hex;
}

std::string signer_role(const MemberId& uid) { return "S" + uid.value.get_str(10); }

std::string private_to(const std::string& role) { return "PRIVATE(" + role + ")"; }

class Tape {
 public:
  void add(const std::string& sender, const std::string& receiver, const std::string& kind,
           const std::string& payload) {
    steps_.push_back(SimStep{steps_.size() + 1, sender, receiver, kind, digest16(payload)});
  }

  std::vector<SimStep> take() { return std::move(steps_); }

 private:
  std::vector<SimStep> steps_;
};

struct Session {
  GroupParams params;
  DealerSetupResult dealer;
  KeyPair receiver_keys;
  std::map<MemberId, Int> member_secrets;
  std::vector<MemberId> subset;
  const LambdaTable* lambda = nullptr;  // injected only in worked-example mode
  Bytes message;
};

std::vector<MemberId> resolve_subset(const SimConfig& config, std::size_t n) {
  std::vector<MemberId> subset;
  if (config.signer_subset.empty()) {
    for (std::size_t uid = 1; uid <= config.t; ++uid) {
      subset.push_back(member_id(static_cast<long>(uid)));
    }
  } else {
    for (long uid : config.signer_subset) {
      if (uid < 1 || static_cast<std::size_t>(uid) > n) {
        throw std::invalid_argument("signer subset names a uid outside 1..n");
      }
      subset.push_back(member_id(uid));
    }
  }
  std::sort(subset.begin(), subset.end());
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (subset[i] == subset[i - 1]) {
      throw std::invalid_argument("signer subset contains a duplicate uid");
    }
  }
  return subset;
}

Session establish(const SimConfig& config, Rng& rng, Tape& tape) {
  Session session;

  if (config.params.mode == ParamsSource::Mode::kWorkedExample) {
    const demo::WorkedExample& ex = demo::worked_example();
    session.params = ex.params;
    session.receiver_keys = ex.receiver;
    session.member_secrets = ex.member_secrets;
    session.dealer = demo::worked_example_setup();
    session.subset = ex.subset;
    session.lambda = &ex.lambda;
    session.message = ex.message;
  } else {
    if (config.params.mode == ParamsSource::Mode::kGenerated) {
      session.params = generate_params(config.params.q_bits, config.params.p_bits, rng);
    } else {
      session.params = GroupParams{config.params.p, config.params.q, config.params.g,
                                   HashMode::real()};
    }
    session.receiver_keys = keypair_gen(session.params, rng);

    std::vector<MemberInput> members;
    for (std::size_t uid = 1; uid <= config.n; ++uid) {
      const MemberId id = member_id(static_cast<long>(uid));
      const KeyPair kp = keypair_gen(session.params, rng);
      session.member_secrets[id] = kp.x;
      members.push_back(MemberInput{id, kp.y});
    }
    session.dealer = dealer_setup(session.params, config.t, members, rng);
    session.subset = resolve_subset(config, config.n);
    session.message = config.message;
  }

  tape.add("SDC", "BROADCAST", "board",
           board_to_record(session.dealer.board, session.params).emit());
  return session;
}

MemberId resolve_target(const SimConfig& config, const std::vector<MemberId>& subset) {
  if (!config.target_uid.has_value()) {
    return subset.front();
  }
  const MemberId target = member_id(*config.target_uid);
  if (std::find(subset.begin(), subset.end(), target) == subset.end()) {
    throw std::invalid_argument("target uid is not in the signer subset");
  }
  return target;
}

/// Commitment round: broadcast a/c, deliver b privately to peers (and to the
/// combiner when it recomputes the challenge).
std::map<MemberId, CommitmentTriple> commitment_round(const Session& session,
                                                      const SimConfig& config, Rng& rng,
                                                      Tape& tape,
                                                      std::map<MemberId, NonceSecret>& nonces) {
  const demo::WorkedExample& ex = demo::worked_example();
  std::map<MemberId, CommitmentTriple> triples;
  for (const MemberId& uid : session.subset) {
    CommitmentTriple triple;
    if (config.params.mode == ParamsSource::Mode::kWorkedExample) {
      const auto& [k1, k2] = ex.nonces.at(uid);
      NonceSecret nonce(k1, k2);
      triple = commit_with_nonce(session.params, session.receiver_keys.y, nonce);
      nonces.emplace(uid, std::move(nonce));
    } else {
      auto [nonce, fresh] = nonce_commit(session.params, session.receiver_keys.y, rng);
      nonces.emplace(uid, std::move(nonce));
      triple = fresh;
    }
    triples.emplace(uid, triple);

    const std::string role = signer_role(uid);
    tape.add(role, "BROADCAST", "commit_public",
             "uid=" + to_hex(uid.value) + ",a=" + to_hex(triple.a) + ",c=" + to_hex(triple.c));
    const std::string b_payload = "uid=" + to_hex(uid.value) + ",b=" + to_hex(triple.b);
    for (const MemberId& peer : session.subset) {
      if (peer == uid) {
        continue;
      }
      tape.add(role, private_to(signer_role(peer)), "commit_private", b_payload);
    }
    if (config.dc_recomputes_challenge) {
      tape.add(role, "DC", "commit_private", b_payload);
    }
  }
  return triples;
}

struct Outcome {
  bool accepted = false;
  std::string reason;
};

Outcome run_signing_pipeline(const SimConfig& config, const Session& session, Rng& rng,
                             Tape& tape, SessionInternals* internals) {
  std::map<MemberId, NonceSecret> nonces;
  auto triples = commitment_round(session, config, rng, tape, nonces);

  std::vector<CommitmentTriple> ordered;
  for (const MemberId& uid : session.subset) {
    ordered.push_back(triples.at(uid));
  }
  SessionAggregates aggregates = aggregate_commitments(ordered, session.subset,
                                                       session.dealer.board.t, session.message,
                                                       session.params);
  if (internals != nullptr) {
    internals->aggregates = aggregates;
  }

  const MemberId target = (config.scenario == Scenario::kImpersonate ||
                           config.scenario == Scenario::kTamperPartial)
                              ? resolve_target(config, session.subset)
                              : MemberId{};

  std::vector<PartialSignature> partials;
  for (const MemberId& uid : session.subset) {
    auto nonce_it = nonces.find(uid);
    PartialSignature ps;
    if (config.scenario == Scenario::kImpersonate && uid == target) {
      // The forger holds no share, so it covers MS_i with a blind guess.
      const Int guess = rng.nonzero_below(session.params.q);
      SignerContext forged{uid, 0, guess};
      ps = partial_sign(std::move(nonce_it->second), triples.at(uid), forged, aggregates.r_s,
                        session.params.q);
    } else {
      const RecoveredShare share =
          recover_share(session.dealer.board.require(uid), session.dealer.board.w,
                        session.member_secrets.at(uid), session.params);
      const SignerContext context =
          modify_shadow(share, session.subset, session.params.q, session.lambda);
      if (internals != nullptr) {
        internals->shadows[uid] = context.ms;
      }
      ps = partial_sign(std::move(nonce_it->second), triples.at(uid), context, aggregates.r_s,
                        session.params.q);
    }
    nonces.erase(nonce_it);

    if (config.scenario == Scenario::kTamperPartial && uid == target) {
      ps.s = mod_reduce(ps.s + 1, session.params.q);  // in-transit corruption
    }
    partials.push_back(ps);
    tape.add(signer_role(uid), "DC", "partial", partial_to_record(ps).emit());
  }
  if (internals != nullptr) {
    internals->partials = partials;
  }

  GroupSignature signature;
  try {
    CombinePolicy policy{config.dc_recomputes_challenge};
    signature = combine(partials, aggregates, session.message, session.dealer.board,
                        session.params, policy, session.lambda);
  } catch (const CombineError& err) {
    return Outcome{false, std::string("combiner rejected: ") + err.what()};
  }
  if (internals != nullptr) {
    internals->signature = signature;
  }
  tape.add("DC", "R", "signature", signature_to_record(signature).emit());

  KeyPair verifier = session.receiver_keys;
  if (config.scenario == Scenario::kWrongReceiver) {
    do {
      verifier = keypair_gen(session.params, rng);
    } while (verifier.x == session.receiver_keys.x);
  }

  const bool valid =
      verify_group_signature(signature, session.dealer.board, verifier, session.params,
                             session.lambda);
  if (internals != nullptr) {
    internals->signature_valid = valid;
    internals->verification_value = compute_verification_value(
        signature.signer_ids, session.dealer.board, session.params, session.lambda);
    internals->recovered_commitment =
        recover_commitment(signature.w_s, signature.u_s, verifier.x, session.params);
  }

  if (config.scenario == Scenario::kWrongReceiver) {
    if (valid) {
      return Outcome{true, "non-designated receiver verified the signature"};
    }
    return Outcome{false, "verification failed for the non-designated receiver"};
  }
  if (!valid) {
    return Outcome{false, "group signature verification failed"};
  }

  const ConfirmationPackage package = build_confirmation_package(
      signature, session.dealer.board, verifier, session.params, session.lambda);
  if (internals != nullptr) {
    internals->package = package;
  }
  tape.add("R", "C", "package", package_to_record(package).emit());

  bool confirmed = third_party_check(package, session.dealer.board.y_s, session.params);
  if (confirmed && config.third_party_checks_board) {
    confirmed = third_party_check_against_board(package, signature.signer_ids,
                                                session.dealer.board, session.params,
                                                session.lambda);
  }
  if (internals != nullptr) {
    internals->third_party_ok = confirmed;
  }
  if (!confirmed) {
    return Outcome{false, "third party rejected the confirmation package"};
  }

  const Int u = rng.nonzero_below(session.params.p);
  const Int v = rng.nonzero_below(session.params.p);
  const Int alpha = rng.nonzero_below(session.params.p);
  const ZkTranscript zk =
      zk_run_with_randomness(package, verifier, u, v, alpha, session.params);
  tape.add("C", "R", "zk_commit", "w=" + to_hex(zk.w));
  tape.add("R", "C", "zk_response", "beta=" + to_hex(zk.beta) + ",gamma=" + to_hex(zk.gamma));
  tape.add("C", "R", "zk_open", "u=" + to_hex(zk.u) + ",v=" + to_hex(zk.v));
  tape.add("R", "C", "zk_reveal", "alpha=" + to_hex(zk.alpha));
  if (internals != nullptr) {
    internals->zk = zk;
  }
  if (!zk.accepted) {
    return Outcome{false, "confirmation protocol failed at check " + zk.failing_check};
  }
  return Outcome{true, ""};
}

Outcome run_forge(const Session& session, Rng& rng, Tape& tape) {
  // The adversary only sees the board. It draws a commitment recovery value
  // and a signature scalar and hopes the verification congruence holds.
  const Int forged_r_r = rng.nonzero_below(session.params.p);
  const Int forged_s_s = rng.below(session.params.q);
  const Int r_s = hash_to_zq("challenge", {forged_r_r}, session.message, session.params);
  const Int e = compute_verification_value(session.subset, session.dealer.board, session.params,
                                           session.lambda);
  tape.add("ADV", "R", "forged_signature",
           "rr=" + to_hex(forged_r_r) + ",ss=" + to_hex(forged_s_s));

  const Int lhs = mod_exp(session.params.g, forged_s_s, session.params.p);
  const Int rhs = mod_reduce(
      forged_r_r *
          mod_exp(mod_reduce(e * session.dealer.board.y_s, session.params.p), r_s,
                  session.params.p),
      session.params.p);
  if (lhs == rhs) {
    return Outcome{true, "forged tuple satisfied the verification congruence"};
  }
  return Outcome{false, "forged tuple failed the verification congruence"};
}

Outcome run_collusion(const Session& session, Tape& tape, SessionInternals* internals) {
  const Int& q = session.params.q;
  const MemberId leader = session.subset.front();

  Int pooled = 0;
  Int masked_sum = 0;  // sum K_i * lambda_i
  for (const MemberId& uid : session.subset) {
    const Int lambda = lambda_for(uid, session.subset, q, session.lambda);
    const Int share = session.dealer.secrets.shares.at(uid);
    pooled = mod_reduce(pooled + share * lambda, q);
    masked_sum = mod_reduce(masked_sum + session.dealer.secrets.nonces.at(uid) * lambda, q);
    if (!(uid == leader)) {
      tape.add(signer_role(uid), private_to(signer_role(leader)), "pooled_share",
               "uid=" + to_hex(uid.value) + ",l=" + to_hex(share));
    }
  }
  if (internals != nullptr) {
    internals->pooled_reconstruction = pooled;
  }

  const Int f0 = poly_eval(session.dealer.secrets.polynomial, 0, q);
  if (pooled != mod_reduce(f0 + masked_sum, q)) {
    throw std::logic_error("pooled reconstruction disagrees with f(0) + sum K_i*lambda_i");
  }

  if (pooled == f0) {
    return Outcome{true, "collusion recovered the group secret (masking nonces cancelled)"};
  }

  // What the colluders actually learned: g^pooled lands on E*y_s, not y_s.
  const Int e = compute_verification_value(session.subset, session.dealer.board, session.params,
                                           session.lambda);
  const Int g_pooled = mod_exp(session.params.g, pooled, session.params.p);
  const Int e_ys = mod_reduce(e * session.dealer.board.y_s, session.params.p);
  if (g_pooled != e_ys) {
    throw std::logic_error("g^pooled does not match E*y_s");
  }
  return Outcome{false, "pooled shares reconstruct the nonce-masked sum, not the group secret"};
}

}  // namespace

std::string scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::kHonest: return "honest";
    case Scenario::kImpersonate: return "impersonate";
    case Scenario::kTamperPartial: return "tamper_partial";
    case Scenario::kForgeSignature: return "forge_signature";
    case Scenario::kColludeReconstruct: return "collude_reconstruct";
    case Scenario::kWrongReceiver: return "wrong_receiver";
  }
  throw std::logic_error("unreachable");
}

std::optional<Scenario> scenario_from_name(const std::string& name) {
  for (Scenario s : {Scenario::kHonest, Scenario::kImpersonate, Scenario::kTamperPartial,
                     Scenario::kForgeSignature, Scenario::kColludeReconstruct,
                     Scenario::kWrongReceiver}) {
    if (scenario_name(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

ParamsSource ParamsSource::fixed(Int p, Int q, Int g) {
  ParamsSource src;
  src.mode = Mode::kFixed;
  src.p = std::move(p);
  src.q = std::move(q);
  src.g = std::move(g);
  return src;
}

ParamsSource ParamsSource::fixed_toy() { return fixed(47, 23, 25); }

ParamsSource ParamsSource::generated(unsigned q_bits, unsigned p_bits) {
  ParamsSource src;
  src.mode = Mode::kGenerated;
  src.q_bits = q_bits;
  src.p_bits = p_bits;
  return src;
}

ParamsSource ParamsSource::generated_toy() { return generated(16, 24); }

ParamsSource ParamsSource::generated_standard() { return generated(160, 512); }

ParamsSource ParamsSource::worked_example() {
  ParamsSource src;
  src.mode = Mode::kWorkedExample;
  return src;
}

std::string SimTranscript::to_text() const {
  std::string out;
  for (const SimStep& step : steps) {
    out += "step " + std::to_string(step.index) + " | " + step.sender + " | " + step.receiver +
           " | " + step.kind + " | " + step.digest + "\n";
  }
  out += accepted ? "outcome ACCEPT" : "outcome REJECT | " + reason;
  out += "\n";
  return out;
}

SimTranscript run_session(const SimConfig& config) { return run_session(config, nullptr); }

SimTranscript run_session(const SimConfig& config, SessionInternals* internals) {
  if (config.params.mode != ParamsSource::Mode::kWorkedExample) {
    if (config.t < 1 || config.t > config.n) {
      throw std::invalid_argument("need 1 <= t <= n");
    }
    if (resolve_subset(config, config.n).size() < config.t) {
      throw std::invalid_argument("signer subset is smaller than the threshold");
    }
  }

  SeededRng rng(config.seed);
  Tape tape;
  Session session = establish(config, rng, tape);

  if (internals != nullptr) {
    internals->params = session.params;
    internals->dealer = session.dealer;
    internals->receiver_keys = session.receiver_keys;
    internals->subset = session.subset;
  }

  Outcome outcome;
  switch (config.scenario) {
    case Scenario::kForgeSignature:
      outcome = run_forge(session, rng, tape);
      break;
    case Scenario::kColludeReconstruct:
      outcome = run_collusion(session, tape, internals);
      break;
    default:
      outcome = run_signing_pipeline(config, session, rng, tape, internals);
      break;
  }

  SimTranscript transcript;
  transcript.steps = tape.take();
  transcript.accepted = outcome.accepted;
  transcript.reason = outcome.reason;
  return transcript;
}

bool replay(const SimTranscript& transcript, const SimConfig& config) {
  return run_session(config).to_text() == transcript.to_text();
}

}  // namespace dtms
