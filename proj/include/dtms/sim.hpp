#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtms/records.hpp"

namespace dtms {

enum class Scenario {
  kHonest,
  kImpersonate,
  kTamperPartial,
  kForgeSignature,
  kColludeReconstruct,
  kWrongReceiver,
};

std::string scenario_name(Scenario scenario);
std::optional<Scenario> scenario_from_name(const std::string& name);

struct ParamsSource {
  enum class Mode { kFixed, kGenerated, kWorkedExample };

  Mode mode = Mode::kFixed;
  Int p{47};
  Int q{23};
  Int g{25};
  unsigned q_bits = 16;
  unsigned p_bits = 24;

  static ParamsSource fixed(Int p, Int q, Int g);
  static ParamsSource fixed_toy();          // the 47/23/25 group
  static ParamsSource generated(unsigned q_bits, unsigned p_bits);
  static ParamsSource generated_toy();      // 16-bit q
  static ParamsSource generated_standard(); // 160-bit q, 512-bit p
  static ParamsSource worked_example();     // pinned demo session
};

/// The seed fully determines every random draw, so a config replays to a
/// byte-identical transcript.
struct SimConfig {
  ParamsSource params;
  std::size_t t = 3;
  std::size_t n = 5;
  std::vector<long> signer_subset;  // member uids; empty means 1..t
  Bytes message = utf8_bytes("transfer 42");
  std::uint64_t seed = 0;
  Scenario scenario = Scenario::kHonest;
  std::optional<long> target_uid;   // impersonation / tampering victim
  bool dc_recomputes_challenge = true;
  bool third_party_checks_board = false;
};

struct SimStep {
  std::size_t index;
  std::string sender;
  std::string receiver;  // role, "BROADCAST", or "PRIVATE(<role>)"
  std::string kind;
  std::string digest;
};

struct SimTranscript {
  std::vector<SimStep> steps;
  bool accepted = false;
  std::string reason;

  /// "step N | from | to | kind | digest" lines, outcome line last.
  std::string to_text() const;
};

/// Intermediate state exposed for oracle checks; not part of any protocol
/// surface.
struct SessionInternals {
  GroupParams params;
  DealerSetupResult dealer;
  KeyPair receiver_keys;
  std::vector<MemberId> subset;
  std::optional<SessionAggregates> aggregates;
  std::vector<PartialSignature> partials;
  std::map<MemberId, Int> shadows;  // modified shadows MS_i
  std::optional<GroupSignature> signature;
  std::optional<Int> verification_value;    // E as the receiver computed it
  std::optional<Int> recovered_commitment;  // R_R
  std::optional<ConfirmationPackage> package;
  std::optional<ZkTranscript> zk;
  bool signature_valid = false;
  bool third_party_ok = false;
  std::optional<Int> pooled_reconstruction;  // collusion scenario
};

SimTranscript run_session(const SimConfig& config);
SimTranscript run_session(const SimConfig& config, SessionInternals* internals);

/// True iff regenerating the transcript from the config reproduces it
/// byte-identically.
bool replay(const SimTranscript& transcript, const SimConfig& config);

}  // namespace dtms
