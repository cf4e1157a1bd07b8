#pragma once

#include <map>

#include "dtms/receiver.hpp"

namespace dtms::demo {

/// Name accepted by the CLI's --fixture flag.
inline constexpr const char* kFixtureName = "paper5";

/// A fully pinned (5,7) signing session over the toy group p=47, q=23, g=25,
/// used for golden tests and the demo-paper command. Member identities are
/// labels 1..7; the share values and Lagrange coefficients are injected, not
/// derived from the labels, so every published number reproduces exactly.
struct WorkedExample {
  GroupParams params;  // fixture hash: "challenge" -> 9

  SecretPolynomial polynomial;  // 13 + 18x^4 over Z_23
  Int masking_key;              // K = 14
  KeyPair receiver;             // x_R = 9, y_R = 2

  std::vector<FixedMemberInput> members;        // uid, y, K_i, f-value
  std::map<MemberId, Int> member_secrets;       // x_i
  std::vector<MemberId> subset;                 // signers 2,4,5,6,7
  std::map<MemberId, std::pair<Int, Int>> nonces;  // k1, k2 per signer
  LambdaTable lambda;                           // injected coefficients
  Bytes message;

  // Expected values, in board order / subset order.
  std::vector<Int> expected_l, expected_m, expected_n, expected_v;
  Int expected_y_s, expected_w;
  std::map<MemberId, CommitmentTriple> expected_triples;
  Int expected_u_s, expected_v_s, expected_w_s, expected_r_s;
  std::map<MemberId, Int> expected_ms, expected_s;
  Int expected_s_s, expected_e, expected_r_r, expected_mu;
  Int zk_u, zk_v, zk_alpha;
  Int expected_zk_w, expected_zk_beta, expected_zk_gamma;
};

const WorkedExample& worked_example();

/// Board and retained dealer secrets built from the fixture inputs.
DealerSetupResult worked_example_setup();

}  // namespace dtms::demo
