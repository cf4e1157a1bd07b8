#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtms/demo_fixture.hpp"
#include "dtms/records.hpp"
#include "dtms/sim.hpp"

namespace fs = std::filesystem;
using namespace dtms;

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

std::vector<Int> parse_decimal_list(const std::string& csv) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string item =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) {
      throw std::invalid_argument("empty item in list: " + csv);
    }
    out.emplace_back(item, 10);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

Bytes message_from_flags(const std::string& hex, const std::string& utf8) {
  if (!hex.empty() && !utf8.empty()) {
    throw std::invalid_argument("give the message as hex or as UTF-8, not both");
  }
  if (!hex.empty()) {
    return bytes_from_hex(hex);
  }
  return utf8_bytes(utf8);
}

struct GenParamsArgs {
  unsigned q_bits = 160;
  unsigned p_bits = 512;
  std::uint64_t seed = 0;
  std::string fixed;
  std::string hash_tag = "dtms.v1";
  std::string out;
};

int cmd_gen_params(const GenParamsArgs& args) {
  GroupParams params;
  if (!args.fixed.empty()) {
    const auto triple = parse_decimal_list(args.fixed);
    if (triple.size() != 3) {
      std::cerr << "--fixed expects p,q,g\n";
      return kExitUsage;
    }
    params = GroupParams{triple[0], triple[1], triple[2], HashMode::real(args.hash_tag)};
    const ParamsReport report = validate_params(params);
    if (!report.ok()) {
      std::cerr << "fixed parameters are invalid:";
      for (const std::string& v : report.violations) {
        std::cerr << " [" << v << "]";
      }
      std::cerr << "\n";
      return kExitUsage;
    }
  } else {
    SeededRng rng(args.seed);
    try {
      params = generate_params(args.q_bits, args.p_bits, rng, HashMode::real(args.hash_tag));
    } catch (const std::exception& err) {
      std::cerr << "parameter generation failed: " << err.what() << "\n";
      return kExitReject;
    }
  }
  write_record_file(args.out, params_to_record(params));
  std::cout << "wrote " << args.out << " (size class "
            << validate_params(params).size_class << ")\n";
  return kExitAccept;
}

struct KeygenArgs {
  std::string params_path;
  std::uint64_t seed = 0;
  std::optional<long> uid;
  std::string out;
  std::string pub_out;
  std::string fixture;
};

int cmd_keygen(const KeygenArgs& args) {
  KeypairRecord record;
  if (args.fixture == demo::kFixtureName) {
    record.x = demo::worked_example().receiver.x;
    record.y = demo::worked_example().receiver.y;
  } else {
    const GroupParams params = params_from_record(read_record_file(args.params_path));
    SeededRng rng(args.seed);
    const KeyPair kp = keypair_gen(params, rng);
    record.x = kp.x;
    record.y = kp.y;
  }
  if (args.uid.has_value()) {
    record.uid = member_id(*args.uid);
  }
  write_record_file(args.out, keypair_to_record(record));
  if (!args.pub_out.empty()) {
    KeypairRecord pub = record;
    pub.x.reset();
    write_record_file(args.pub_out, keypair_to_record(pub));
  }
  std::cout << "wrote " << args.out << "\n";
  return kExitAccept;
}

struct DealerArgs {
  std::string params_path;
  std::size_t t = 0;
  std::string members_path;
  std::uint64_t seed = 0;
  std::string fixture;
  std::string out;
};

int cmd_dealer_setup(const DealerArgs& args) {
  DealerSetupResult setup;
  GroupParams params;
  if (args.fixture == demo::kFixtureName) {
    params = demo::worked_example().params;
    setup = demo::worked_example_setup();
  } else {
    params = params_from_record(read_record_file(args.params_path));
    const auto members = members_from_record(read_record_file(args.members_path));
    SeededRng rng(args.seed);
    setup = dealer_setup(params, args.t, members, rng);
  }
  write_record_file(args.out, board_to_record(setup.board, params));
  std::cout << "wrote " << args.out << " (t=" << setup.board.t << ", n=" << setup.board.n()
            << ")\n";
  return kExitAccept;
}

struct SignArgs {
  std::string board_path;
  std::vector<std::string> member_secret_paths;
  std::string subset;
  std::string receiver_pub_path;
  std::string message_hex;
  std::string message_utf8;
  std::uint64_t seed = 0;
  std::string fixture;
  std::string out_dir;
};

int cmd_sign(const SignArgs& args) {
  fs::create_directories(args.out_dir);

  if (args.fixture == demo::kFixtureName) {
    const demo::WorkedExample& ex = demo::worked_example();
    const DealerSetupResult setup = demo::worked_example_setup();

    std::map<MemberId, NonceSecret> nonces;
    std::map<MemberId, CommitmentTriple> triples;
    std::vector<CommitmentTriple> ordered;
    for (const MemberId& uid : ex.subset) {
      const auto& [k1, k2] = ex.nonces.at(uid);
      NonceSecret nonce(k1, k2);
      triples.emplace(uid, commit_with_nonce(ex.params, ex.receiver.y, nonce));
      nonces.emplace(uid, std::move(nonce));
      ordered.push_back(triples.at(uid));
    }
    const SessionAggregates aggregates =
        aggregate_commitments(ordered, ex.subset, setup.board.t, ex.message, ex.params);

    for (const MemberId& uid : ex.subset) {
      const RecoveredShare share = recover_share(
          setup.board.require(uid), setup.board.w, ex.member_secrets.at(uid), ex.params);
      const SignerContext context = modify_shadow(share, ex.subset, ex.params.q, &ex.lambda);
      auto nonce_it = nonces.find(uid);
      const PartialSignature ps = partial_sign(std::move(nonce_it->second), triples.at(uid),
                                               context, aggregates.r_s, ex.params.q);
      write_record_file(args.out_dir + "/partial_" + uid.value.get_str(10) + ".rec",
                        partial_to_record(ps));
    }
    write_record_file(args.out_dir + "/session.rec", session_to_record(aggregates, ex.message));
    std::cout << "wrote " << ex.subset.size() << " partials and session record to "
              << args.out_dir << "\n";
    return kExitAccept;
  }

  auto [board, params] = board_from_record(read_record_file(args.board_path));
  const KeypairRecord receiver_pub = keypair_from_record(read_record_file(args.receiver_pub_path));
  const Bytes message = message_from_flags(args.message_hex, args.message_utf8);

  std::vector<MemberId> subset;
  for (const Int& uid : parse_decimal_list(args.subset)) {
    subset.push_back(MemberId{uid});
  }
  std::sort(subset.begin(), subset.end());

  std::map<MemberId, Int> secrets;
  for (const std::string& path : args.member_secret_paths) {
    const KeypairRecord kp = keypair_from_record(read_record_file(path));
    if (!kp.uid.has_value() || !kp.x.has_value()) {
      std::cerr << path << ": member secret file needs uid and x\n";
      return kExitUsage;
    }
    secrets[*kp.uid] = *kp.x;
  }
  for (const MemberId& uid : subset) {
    if (secrets.find(uid) == secrets.end()) {
      std::cerr << "no member secret supplied for uid " << uid.value.get_str(10) << "\n";
      return kExitUsage;
    }
  }

  SeededRng rng(args.seed);
  std::map<MemberId, NonceSecret> nonces;
  std::map<MemberId, CommitmentTriple> triples;
  std::vector<CommitmentTriple> ordered;
  for (const MemberId& uid : subset) {
    auto [nonce, triple] = nonce_commit(params, receiver_pub.y, rng);
    triples.emplace(uid, triple);
    nonces.emplace(uid, std::move(nonce));
    ordered.push_back(triple);
  }
  const SessionAggregates aggregates =
      aggregate_commitments(ordered, subset, board.t, message, params);

  for (const MemberId& uid : subset) {
    const RecoveredShare share =
        recover_share(board.require(uid), board.w, secrets.at(uid), params);
    const SignerContext context = modify_shadow(share, subset, params.q);
    auto nonce_it = nonces.find(uid);
    const PartialSignature ps = partial_sign(std::move(nonce_it->second), triples.at(uid),
                                             context, aggregates.r_s, params.q);
    write_record_file(args.out_dir + "/partial_" + uid.value.get_str(10) + ".rec",
                      partial_to_record(ps));
  }
  write_record_file(args.out_dir + "/session.rec", session_to_record(aggregates, message));
  std::cout << "wrote " << subset.size() << " partials and session record to " << args.out_dir
            << "\n";
  return kExitAccept;
}

struct CombineArgs {
  std::string board_path;
  std::string session_path;
  std::vector<std::string> partial_paths;
  bool trust_challenge = false;
  std::string fixture;
  std::string out;
};

int cmd_combine(const CombineArgs& args) {
  auto [board, params] = board_from_record(read_record_file(args.board_path));
  auto [aggregates, message] = session_from_record(read_record_file(args.session_path));

  std::vector<PartialSignature> partials;
  for (const std::string& path : args.partial_paths) {
    partials.push_back(partial_from_record(read_record_file(path)));
  }

  const LambdaTable* lambda =
      args.fixture == demo::kFixtureName ? &demo::worked_example().lambda : nullptr;
  try {
    const GroupSignature sig = combine(partials, aggregates, message, board, params,
                                       CombinePolicy{!args.trust_challenge}, lambda);
    write_record_file(args.out, signature_to_record(sig));
    std::cout << "wrote " << args.out << " (s_s = " << to_hex(sig.s_s) << ")\n";
    return kExitAccept;
  } catch (const CombineError& err) {
    std::cerr << "combine rejected: " << err.what() << "\n";
    return kExitReject;
  }
}

struct VerifyArgs {
  std::string sig_path;
  std::string board_path;
  std::string receiver_secret_path;
  std::string fixture;
};

int cmd_verify(const VerifyArgs& args) {
  auto [board, params] = board_from_record(read_record_file(args.board_path));
  const GroupSignature sig = signature_from_record(read_record_file(args.sig_path));
  const KeypairRecord receiver = keypair_from_record(read_record_file(args.receiver_secret_path));
  if (!receiver.x.has_value()) {
    std::cerr << "receiver keypair file carries no secret\n";
    return kExitUsage;
  }
  const LambdaTable* lambda =
      args.fixture == demo::kFixtureName ? &demo::worked_example().lambda : nullptr;
  const bool ok = verify_group_signature(sig, board, KeyPair{*receiver.x, receiver.y}, params,
                                         lambda);
  std::cout << (ok ? "signature VALID for this receiver\n"
                   : "signature INVALID for this receiver\n");
  return ok ? kExitAccept : kExitReject;
}

struct ConfirmArgs {
  std::string sig_path;
  std::string board_path;
  std::string receiver_secret_path;
  std::uint64_t seed = 0;
  bool check_board = false;
  std::string fixture;
  std::string out_package;
  std::string out_transcript;
};

int cmd_confirm(const ConfirmArgs& args) {
  auto [board, params] = board_from_record(read_record_file(args.board_path));
  const GroupSignature sig = signature_from_record(read_record_file(args.sig_path));
  const KeypairRecord receiver = keypair_from_record(read_record_file(args.receiver_secret_path));
  if (!receiver.x.has_value()) {
    std::cerr << "receiver keypair file carries no secret\n";
    return kExitUsage;
  }
  const KeyPair receiver_keys{*receiver.x, receiver.y};
  const LambdaTable* lambda =
      args.fixture == demo::kFixtureName ? &demo::worked_example().lambda : nullptr;

  if (!verify_group_signature(sig, board, receiver_keys, params, lambda)) {
    std::cerr << "signature does not verify for this receiver; nothing to confirm\n";
    return kExitReject;
  }

  const ConfirmationPackage package =
      build_confirmation_package(sig, board, receiver_keys, params, lambda);
  if (!args.out_package.empty()) {
    write_record_file(args.out_package, package_to_record(package));
  }

  bool congruence = third_party_check(package, board.y_s, params);
  if (congruence && args.check_board) {
    congruence = third_party_check_against_board(package, sig.signer_ids, board, params, lambda);
  }
  std::cout << "third-party congruence: " << (congruence ? "holds" : "fails") << "\n";
  if (!congruence) {
    return kExitReject;
  }

  SeededRng third_party_rng(args.seed);
  SeededRng receiver_rng(args.seed ^ 0x517cc1b727220a95ULL);
  const ZkTranscript zk = zk_run(package, receiver_keys, third_party_rng, receiver_rng, params);
  if (!args.out_transcript.empty()) {
    write_record_file(args.out_transcript, transcript_to_record(zk));
  }
  std::cout << "confirmation protocol: "
            << (zk.accepted ? "ACCEPT" : "REJECT at check " + zk.failing_check) << "\n";
  return zk.accepted ? kExitAccept : kExitReject;
}

class CheckTable {
 public:
  void row(const std::string& label, const Int& got, const Int& want) {
    print_row(label, got.get_str(10), want.get_str(10), got == want);
  }

  void row_list(const std::string& label, const std::vector<Int>& got,
                const std::vector<Int>& want) {
    print_row(label, render(got), render(want), got == want);
  }

  void row_bool(const std::string& label, bool got) {
    print_row(label, got ? "true" : "false", "true", got);
  }

  bool all_ok() const { return all_ok_; }

 private:
  static std::string render(const std::vector<Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) {
        out.push_back(',');
      }
      out += values[i].get_str(10);
    }
    return out;
  }

  void print_row(const std::string& label, const std::string& got, const std::string& want,
                 bool ok) {
    std::cout << (ok ? "  OK   " : "  FAIL ") << label << ": got " << got;
    if (!ok) {
      std::cout << " want " << want;
    }
    std::cout << "\n";
    all_ok_ = all_ok_ && ok;
  }

  bool all_ok_ = true;
};

int cmd_demo_paper() {
  const demo::WorkedExample& ex = demo::worked_example();
  CheckTable table;

  std::cout << "worked example: p=" << ex.params.p.get_str(10) << " q=" << ex.params.q.get_str(10)
            << " g=" << ex.params.g.get_str(10) << ", t=5, n=7, signers 2,4,5,6,7\n";

  const DealerSetupResult setup = demo::worked_example_setup();
  table.row("group public key y_s", setup.board.y_s, ex.expected_y_s);
  table.row("masking value w", setup.board.w, ex.expected_w);

  std::vector<Int> got_l, got_m, got_n, got_v;
  for (const MemberRecord& rec : setup.board.members) {
    got_l.push_back(setup.secrets.shares.at(rec.uid));
    got_m.push_back(rec.m);
    got_n.push_back(rec.n);
    got_v.push_back(rec.v);
  }
  table.row_list("masked shares l", got_l, ex.expected_l);
  table.row_list("board column m", got_m, ex.expected_m);
  table.row_list("board column n", got_n, ex.expected_n);
  table.row_list("board column v", got_v, ex.expected_v);

  std::map<MemberId, NonceSecret> nonces;
  std::map<MemberId, CommitmentTriple> triples;
  std::vector<CommitmentTriple> ordered;
  for (const MemberId& uid : ex.subset) {
    const auto& [k1, k2] = ex.nonces.at(uid);
    NonceSecret nonce(k1, k2);
    triples.emplace(uid, commit_with_nonce(ex.params, ex.receiver.y, nonce));
    nonces.emplace(uid, std::move(nonce));
    ordered.push_back(triples.at(uid));
    const CommitmentTriple& got = triples.at(uid);
    const CommitmentTriple& want = ex.expected_triples.at(uid);
    table.row_list("commitments (a,b,c) signer " + uid.value.get_str(10),
                   {got.a, got.b, got.c}, {want.a, want.b, want.c});
  }

  const SessionAggregates aggregates =
      aggregate_commitments(ordered, ex.subset, setup.board.t, ex.message, ex.params);
  table.row_list("aggregates (u_s,v_s,w_s)", {aggregates.u_s, aggregates.v_s, aggregates.w_s},
                 {ex.expected_u_s, ex.expected_v_s, ex.expected_w_s});
  table.row("challenge r_s", aggregates.r_s, ex.expected_r_s);

  std::vector<PartialSignature> partials;
  for (const MemberId& uid : ex.subset) {
    const RecoveredShare share = recover_share(setup.board.require(uid), setup.board.w,
                                               ex.member_secrets.at(uid), ex.params);
    const SignerContext context = modify_shadow(share, ex.subset, ex.params.q, &ex.lambda);
    std::cout << "       lambda derivation signer " << uid.value.get_str(10) << ": ms*l^-1 = "
              << context.ms.get_str(10) << "*" << share.l.get_str(10) << "^-1 = "
              << mod_reduce(context.ms * mod_inv(share.l, ex.params.q), ex.params.q).get_str(10)
              << " (injected " << context.lambda.get_str(10) << ")\n";
    table.row("modified shadow signer " + uid.value.get_str(10), context.ms,
              ex.expected_ms.at(uid));
    auto nonce_it = nonces.find(uid);
    const PartialSignature ps = partial_sign(std::move(nonce_it->second), triples.at(uid),
                                             context, aggregates.r_s, ex.params.q);
    table.row("partial s signer " + uid.value.get_str(10), ps.s, ex.expected_s.at(uid));
    partials.push_back(ps);
  }

  for (const PartialSignature& ps : partials) {
    table.row_bool("partial check signer " + ps.uid.value.get_str(10),
                   verify_partial(ps, setup.board, ex.subset, ex.params, &ex.lambda));
  }

  const GroupSignature sig = combine(partials, aggregates, ex.message, setup.board, ex.params,
                                     CombinePolicy{}, &ex.lambda);
  table.row("group value s_s", sig.s_s, ex.expected_s_s);

  const Int e =
      compute_verification_value(sig.signer_ids, setup.board, ex.params, &ex.lambda);
  table.row("verification value e", e, ex.expected_e);
  const Int r_r = recover_commitment(sig.w_s, sig.u_s, ex.receiver.x, ex.params);
  table.row("recovered commitment r_r", r_r, ex.expected_r_r);
  table.row_bool("group signature verifies",
                 verify_group_signature(sig, setup.board, ex.receiver, ex.params, &ex.lambda));

  const ConfirmationPackage package =
      build_confirmation_package(sig, setup.board, ex.receiver, ex.params, &ex.lambda);
  table.row("package mu", package.mu, ex.expected_mu);
  table.row_bool("third-party congruence", third_party_check(package, setup.board.y_s, ex.params));

  const ZkTranscript zk = zk_run_with_randomness(package, ex.receiver, ex.zk_u, ex.zk_v,
                                                 ex.zk_alpha, ex.params);
  table.row("zk commitment w", zk.w, ex.expected_zk_w);
  table.row("zk response beta", zk.beta, ex.expected_zk_beta);
  table.row("zk response gamma", zk.gamma, ex.expected_zk_gamma);
  table.row_bool("zk checks", zk.accepted);

  std::cout << (table.all_ok() ? "verdict ACCEPT\n" : "verdict FAIL\n");
  return table.all_ok() ? kExitAccept : kExitReject;
}

struct SimulateArgs {
  std::string scenario = "honest";
  std::uint64_t seed = 0;
  std::size_t t = 3;
  std::size_t n = 5;
  std::string subset;
  std::string message_hex;
  std::string message_utf8 = "transfer 42";
  std::string params_fixed;
  std::string params_bits;
  bool params_demo = false;
  bool trust_challenge = false;
  bool check_board = false;
  std::optional<long> target;
  std::string out;
};

int cmd_simulate(const SimulateArgs& args) {
  SimConfig config;
  const auto scenario = scenario_from_name(args.scenario);
  if (!scenario.has_value()) {
    std::cerr << "unknown scenario: " << args.scenario << "\n";
    return kExitUsage;
  }
  config.scenario = *scenario;
  config.seed = args.seed;
  config.t = args.t;
  config.n = args.n;
  config.message = message_from_flags(args.message_hex, args.message_utf8);
  config.dc_recomputes_challenge = !args.trust_challenge;
  config.third_party_checks_board = args.check_board;
  config.target_uid = args.target;

  if (args.params_demo) {
    config.params = ParamsSource::worked_example();
  } else if (!args.params_fixed.empty()) {
    const auto triple = parse_decimal_list(args.params_fixed);
    if (triple.size() != 3) {
      std::cerr << "--params-fixed expects p,q,g\n";
      return kExitUsage;
    }
    config.params = ParamsSource::fixed(triple[0], triple[1], triple[2]);
  } else if (!args.params_bits.empty()) {
    const auto bits = parse_decimal_list(args.params_bits);
    if (bits.size() != 2) {
      std::cerr << "--params-bits expects q_bits,p_bits\n";
      return kExitUsage;
    }
    config.params = ParamsSource::generated(static_cast<unsigned>(bits[0].get_ui()),
                                            static_cast<unsigned>(bits[1].get_ui()));
  } else {
    config.params = ParamsSource::generated_toy();
  }
  if (!args.subset.empty()) {
    for (const Int& uid : parse_decimal_list(args.subset)) {
      config.signer_subset.push_back(uid.get_si());
    }
  }

  const SimTranscript transcript = run_session(config);
  std::cout << transcript.to_text();
  if (!args.out.empty()) {
    std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
    file << transcript.to_text();
  }
  return transcript.accepted ? kExitAccept : kExitReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed threshold multi-signature: dealer, signers, combiner, receiver"};
  app.require_subcommand(1);

  GenParamsArgs gen_args;
  auto* gen = app.add_subcommand("gen-params", "generate or pin group parameters");
  gen->add_option("--q-bits", gen_args.q_bits);
  gen->add_option("--p-bits", gen_args.p_bits);
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--fixed", gen_args.fixed, "decimal p,q,g instead of searching");
  gen->add_option("--hash-tag", gen_args.hash_tag);
  gen->add_option("--out", gen_args.out)->required();

  KeygenArgs key_args;
  auto* key = app.add_subcommand("keygen", "generate a keypair record");
  key->add_option("--params", key_args.params_path);
  key->add_option("--seed", key_args.seed);
  key->add_option("--uid", key_args.uid);
  key->add_option("--fixture", key_args.fixture, "paper5: the built-in receiver keypair");
  key->add_option("--out", key_args.out)->required();
  key->add_option("--pub-out", key_args.pub_out, "also write a public-only record");

  DealerArgs dealer_args;
  auto* dealer = app.add_subcommand("dealer-setup", "run the share distribution center");
  dealer->add_option("--params", dealer_args.params_path);
  dealer->add_option("--t", dealer_args.t);
  dealer->add_option("--members", dealer_args.members_path);
  dealer->add_option("--seed", dealer_args.seed);
  dealer->add_option("--fixture", dealer_args.fixture, "paper5: the built-in board");
  dealer->add_option("--out", dealer_args.out)->required();

  SignArgs sign_args;
  auto* sign = app.add_subcommand("sign", "produce partial signatures for a subset");
  sign->add_option("--board", sign_args.board_path);
  sign->add_option("--member-secret", sign_args.member_secret_paths)->take_all();
  sign->add_option("--subset", sign_args.subset, "decimal uids, comma-separated");
  sign->add_option("--receiver-pub", sign_args.receiver_pub_path);
  sign->add_option("--message", sign_args.message_hex);
  sign->add_option("--message-utf8", sign_args.message_utf8);
  sign->add_option("--seed", sign_args.seed);
  sign->add_option("--fixture", sign_args.fixture, "paper5: the built-in signing round");
  sign->add_option("--out-dir", sign_args.out_dir)->required();

  CombineArgs combine_args;
  auto* comb = app.add_subcommand("combine", "verify partials and form the group signature");
  comb->add_option("--board", combine_args.board_path)->required();
  comb->add_option("--session", combine_args.session_path)->required();
  comb->add_option("--partials", combine_args.partial_paths)->required()->take_all();
  comb->add_flag("--trust-challenge", combine_args.trust_challenge,
                 "trust the partials' challenge instead of recomputing it");
  comb->add_option("--fixture", combine_args.fixture);
  comb->add_option("--out", combine_args.out)->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "receiver-side signature verification");
  verify->add_option("--sig", verify_args.sig_path)->required();
  verify->add_option("--board", verify_args.board_path)->required();
  verify->add_option("--receiver-secret", verify_args.receiver_secret_path)->required();
  verify->add_option("--fixture", verify_args.fixture);

  ConfirmArgs confirm_args;
  auto* confirm = app.add_subcommand("confirm", "prove validity to a third party");
  confirm->add_option("--sig", confirm_args.sig_path)->required();
  confirm->add_option("--board", confirm_args.board_path)->required();
  confirm->add_option("--receiver-secret", confirm_args.receiver_secret_path)->required();
  confirm->add_option("--seed", confirm_args.seed);
  confirm->add_flag("--check-board", confirm_args.check_board,
                    "third party also recomputes e from the board");
  confirm->add_option("--fixture", confirm_args.fixture);
  confirm->add_option("--out-package", confirm_args.out_package);
  confirm->add_option("--out-transcript", confirm_args.out_transcript);

  auto* demo_cmd = app.add_subcommand("demo-paper", "replay the built-in worked example");
  (void)demo_cmd;

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "deterministic multi-party session");
  sim->add_option("--scenario", sim_args.scenario,
                  "honest|impersonate|tamper_partial|forge_signature|collude_reconstruct|"
                  "wrong_receiver");
  sim->add_option("--seed", sim_args.seed);
  sim->add_option("--t", sim_args.t);
  sim->add_option("--n", sim_args.n);
  sim->add_option("--subset", sim_args.subset);
  sim->add_option("--message", sim_args.message_hex);
  sim->add_option("--message-utf8", sim_args.message_utf8);
  sim->add_option("--params-fixed", sim_args.params_fixed, "decimal p,q,g");
  sim->add_option("--params-bits", sim_args.params_bits, "q_bits,p_bits to generate");
  sim->add_flag("--params-demo", sim_args.params_demo, "use the built-in worked example");
  sim->add_flag("--trust-challenge", sim_args.trust_challenge);
  sim->add_flag("--check-board", sim_args.check_board);
  sim->add_option("--target", sim_args.target, "victim uid for impersonate/tamper_partial");
  sim->add_option("--out", sim_args.out, "also write the transcript to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen_params(gen_args);
    if (key->parsed()) return cmd_keygen(key_args);
    if (dealer->parsed()) return cmd_dealer_setup(dealer_args);
    if (sign->parsed()) return cmd_sign(sign_args);
    if (comb->parsed()) return cmd_combine(combine_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (confirm->parsed()) return cmd_confirm(confirm_args);
    if (demo_cmd->parsed()) return cmd_demo_paper();
    if (sim->parsed()) return cmd_simulate(sim_args);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
