#include "dtms/records.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dtms {
namespace {

const std::set<std::string> kRecordTypes = {"params", "keypair", "members", "board",
                                            "partial", "session", "sig",     "package",
                                            "transcript"};

bool valid_key(const std::string& key) {
  if (key.empty()) {
    return false;
  }
  for (char c : key) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) {
      return false;
    }
  }
  return true;
}

bool valid_value(const std::string& value) {
  for (char c : value) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == ',' ||
                    c == '.' || c == ':' || c == '-';
    if (!ok) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  if (value.empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = value.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(value.substr(start));
      break;
    }
    out.push_back(value.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += items[i];
  }
  return out;
}

std::vector<Int> int_list(const FileRecord& record, const std::string& key) {
  std::vector<Int> out;
  for (const std::string& item : split_list(record.require(key))) {
    out.push_back(from_hex(item));
  }
  return out;
}

std::string hex_list(const std::vector<Int>& values) {
  std::vector<std::string> items;
  items.reserve(values.size());
  for (const Int& v : values) {
    items.push_back(to_hex(v));
  }
  return join_list(items);
}

std::size_t size_from_hex(const std::string& text) {
  return static_cast<std::size_t>(from_hex(text).get_ui());
}

void add_hash_fields(FileRecord& record, const HashMode& hash) {
  if (hash.variant == HashVariant::kReal) {
    record.add("hash", "sha256");
    record.add("hash_tag", hash.domain_tag);
  } else {
    record.add("hash", "fixture");
    std::vector<std::string> tags;
    std::vector<std::string> values;
    for (const auto& [tag, value] : hash.fixture_table) {
      tags.push_back(tag);
      values.push_back(to_hex(value));
    }
    record.add("fixture_tags", join_list(tags));
    record.add("fixture_values", join_list(values));
  }
}

HashMode hash_from_fields(const FileRecord& record) {
  const std::string& kind = record.require("hash");
  if (kind == "sha256") {
    return HashMode::real(record.require("hash_tag"));
  }
  if (kind == "fixture") {
    const auto tags = split_list(record.require("fixture_tags"));
    const auto values = split_list(record.require("fixture_values"));
    if (tags.size() != values.size()) {
      throw std::invalid_argument("fixture tag/value lists differ in length");
    }
    std::map<std::string, Int> table;
    for (std::size_t i = 0; i < tags.size(); ++i) {
      table[tags[i]] = from_hex(values[i]);
    }
    return HashMode::fixture(std::move(table));
  }
  throw std::invalid_argument("unknown hash descriptor: " + kind);
}

}  // namespace

const std::string* FileRecord::find(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) {
      return &v;
    }
  }
  return nullptr;
}

const std::string& FileRecord::require(const std::string& key) const {
  const std::string* value = find(key);
  if (value == nullptr) {
    throw std::invalid_argument("record '" + type + "' is missing key '" + key + "'");
  }
  return *value;
}

void FileRecord::add(const std::string& key, const std::string& value) {
  if (!valid_key(key)) {
    throw std::invalid_argument("invalid record key: " + key);
  }
  if (!valid_value(value)) {
    throw std::invalid_argument("invalid record value for key '" + key + "'");
  }
  if (find(key) != nullptr) {
    throw std::invalid_argument("duplicate record key: " + key);
  }
  fields.emplace_back(key, value);
}

std::string FileRecord::emit() const {
  std::string out = "%DTMS v1 " + type + "\n";
  for (const auto& [key, value] : fields) {
    out += key + " = " + value + "\n";
  }
  return out;
}

FileRecord FileRecord::parse(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  if (!std::getline(stream, line)) {
    throw std::invalid_argument("empty record");
  }
  const std::string prefix = "%DTMS v1 ";
  if (line.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("bad record header: " + line);
  }

  FileRecord record;
  record.type = line.substr(prefix.size());
  if (kRecordTypes.find(record.type) == kRecordTypes.end()) {
    throw std::invalid_argument("unknown record type: " + record.type);
  }

  while (std::getline(stream, line)) {
    if (line.empty()) {
      continue;
    }
    const std::size_t sep = line.find(" = ");
    if (sep == std::string::npos) {
      throw std::invalid_argument("malformed record line: " + line);
    }
    record.add(line.substr(0, sep), line.substr(sep + 3));
  }
  return record;
}

FileRecord read_record_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FileRecord::parse(buffer.str());
}

void write_record_file(const std::string& path, const FileRecord& record) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path);
  }
  out << record.emit();
}

FileRecord params_to_record(const GroupParams& params) {
  FileRecord record;
  record.type = "params";
  record.add("p", to_hex(params.p));
  record.add("q", to_hex(params.q));
  record.add("g", to_hex(params.g));
  add_hash_fields(record, params.hash);
  return record;
}

GroupParams params_from_record(const FileRecord& record) {
  if (record.type != "params") {
    throw std::invalid_argument("expected a params record, got " + record.type);
  }
  GroupParams params;
  params.p = from_hex(record.require("p"));
  params.q = from_hex(record.require("q"));
  params.g = from_hex(record.require("g"));
  params.hash = hash_from_fields(record);
  return params;
}

FileRecord keypair_to_record(const KeypairRecord& keypair) {
  FileRecord record;
  record.type = "keypair";
  if (keypair.uid.has_value()) {
    record.add("uid", to_hex(keypair.uid->value));
  }
  if (keypair.x.has_value()) {
    record.add("x", to_hex(*keypair.x));
  }
  record.add("y", to_hex(keypair.y));
  return record;
}

KeypairRecord keypair_from_record(const FileRecord& record) {
  if (record.type != "keypair") {
    throw std::invalid_argument("expected a keypair record, got " + record.type);
  }
  KeypairRecord out;
  if (const std::string* uid = record.find("uid")) {
    out.uid = MemberId{from_hex(*uid)};
  }
  if (const std::string* x = record.find("x")) {
    out.x = from_hex(*x);
  }
  out.y = from_hex(record.require("y"));
  return out;
}

FileRecord members_to_record(const std::vector<MemberInput>& members) {
  FileRecord record;
  record.type = "members";
  std::vector<Int> uids;
  std::vector<Int> keys;
  for (const MemberInput& m : members) {
    uids.push_back(m.uid.value);
    keys.push_back(m.y);
  }
  record.add("uids", hex_list(uids));
  record.add("keys", hex_list(keys));
  return record;
}

std::vector<MemberInput> members_from_record(const FileRecord& record) {
  if (record.type != "members") {
    throw std::invalid_argument("expected a members record, got " + record.type);
  }
  const auto uids = int_list(record, "uids");
  const auto keys = int_list(record, "keys");
  if (uids.size() != keys.size()) {
    throw std::invalid_argument("members record lists differ in length");
  }
  std::vector<MemberInput> out;
  for (std::size_t i = 0; i < uids.size(); ++i) {
    out.push_back(MemberInput{MemberId{uids[i]}, keys[i]});
  }
  return out;
}

FileRecord board_to_record(const DealerPublicBoard& board, const GroupParams& params) {
  FileRecord record;
  record.type = "board";
  record.add("p", to_hex(params.p));
  record.add("q", to_hex(params.q));
  record.add("g", to_hex(params.g));
  add_hash_fields(record, params.hash);
  record.add("y_s", to_hex(board.y_s));
  record.add("w", to_hex(board.w));
  record.add("t", to_hex(Int(static_cast<unsigned long>(board.t))));
  record.add("n", to_hex(Int(static_cast<unsigned long>(board.n()))));
  std::vector<Int> uids, ys, ms, ns, vs;
  for (const MemberRecord& m : board.members) {
    uids.push_back(m.uid.value);
    ys.push_back(m.y);
    ms.push_back(m.m);
    ns.push_back(m.n);
    vs.push_back(m.v);
  }
  record.add("uids", hex_list(uids));
  record.add("ys", hex_list(ys));
  record.add("ms", hex_list(ms));
  record.add("ns", hex_list(ns));
  record.add("vs", hex_list(vs));
  return record;
}

std::pair<DealerPublicBoard, GroupParams> board_from_record(const FileRecord& record) {
  if (record.type != "board") {
    throw std::invalid_argument("expected a board record, got " + record.type);
  }
  GroupParams params;
  params.p = from_hex(record.require("p"));
  params.q = from_hex(record.require("q"));
  params.g = from_hex(record.require("g"));
  params.hash = hash_from_fields(record);

  DealerPublicBoard board;
  board.y_s = from_hex(record.require("y_s"));
  board.w = from_hex(record.require("w"));
  board.t = size_from_hex(record.require("t"));
  const std::size_t n = size_from_hex(record.require("n"));

  const auto uids = int_list(record, "uids");
  const auto ys = int_list(record, "ys");
  const auto ms = int_list(record, "ms");
  const auto ns = int_list(record, "ns");
  const auto vs = int_list(record, "vs");
  if (uids.size() != n || ys.size() != n || ms.size() != n || ns.size() != n || vs.size() != n) {
    throw std::invalid_argument("board member lists do not match n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    board.members.push_back(MemberRecord{MemberId{uids[i]}, ys[i], ms[i], ns[i], vs[i]});
  }
  return {board, params};
}

FileRecord partial_to_record(const PartialSignature& partial) {
  FileRecord record;
  record.type = "partial";
  record.add("uid", to_hex(partial.uid.value));
  record.add("s", to_hex(partial.s));
  record.add("b", to_hex(partial.b));
  record.add("rs", to_hex(partial.r_s));
  return record;
}

PartialSignature partial_from_record(const FileRecord& record) {
  if (record.type != "partial") {
    throw std::invalid_argument("expected a partial record, got " + record.type);
  }
  PartialSignature out;
  out.uid = MemberId{from_hex(record.require("uid"))};
  out.s = from_hex(record.require("s"));
  out.b = from_hex(record.require("b"));
  out.r_s = from_hex(record.require("rs"));
  return out;
}

FileRecord session_to_record(const SessionAggregates& aggregates, const Bytes& message) {
  FileRecord record;
  record.type = "session";
  record.add("us", to_hex(aggregates.u_s));
  record.add("vs", to_hex(aggregates.v_s));
  record.add("ws", to_hex(aggregates.w_s));
  record.add("rs", to_hex(aggregates.r_s));
  std::vector<Int> signers;
  for (const MemberId& uid : aggregates.subset) {
    signers.push_back(uid.value);
  }
  record.add("signers", hex_list(signers));
  record.add("msg", bytes_to_hex(message));
  return record;
}

std::pair<SessionAggregates, Bytes> session_from_record(const FileRecord& record) {
  if (record.type != "session") {
    throw std::invalid_argument("expected a session record, got " + record.type);
  }
  SessionAggregates aggregates;
  aggregates.u_s = from_hex(record.require("us"));
  aggregates.v_s = from_hex(record.require("vs"));
  aggregates.w_s = from_hex(record.require("ws"));
  aggregates.r_s = from_hex(record.require("rs"));
  for (const Int& uid : int_list(record, "signers")) {
    aggregates.subset.push_back(MemberId{uid});
  }
  return {aggregates, bytes_from_hex(record.require("msg"))};
}

FileRecord signature_to_record(const GroupSignature& sig) {
  FileRecord record;
  record.type = "sig";
  record.add("ss", to_hex(sig.s_s));
  record.add("us", to_hex(sig.u_s));
  record.add("ws", to_hex(sig.w_s));
  std::vector<Int> signers;
  for (const MemberId& uid : sig.signer_ids) {
    signers.push_back(uid.value);
  }
  record.add("signers", hex_list(signers));
  record.add("msg", bytes_to_hex(sig.message));
  return record;
}

GroupSignature signature_from_record(const FileRecord& record) {
  if (record.type != "sig") {
    throw std::invalid_argument("expected a sig record, got " + record.type);
  }
  GroupSignature sig;
  sig.s_s = from_hex(record.require("ss"));
  sig.u_s = from_hex(record.require("us"));
  sig.w_s = from_hex(record.require("ws"));
  for (const Int& uid : int_list(record, "signers")) {
    sig.signer_ids.push_back(MemberId{uid});
  }
  sig.message = bytes_from_hex(record.require("msg"));
  return sig;
}

FileRecord package_to_record(const ConfirmationPackage& package) {
  FileRecord record;
  record.type = "package";
  record.add("rr", to_hex(package.r_r));
  record.add("e", to_hex(package.e));
  record.add("ss", to_hex(package.s_s));
  record.add("us", to_hex(package.u_s));
  record.add("msg", bytes_to_hex(package.message));
  record.add("mu", to_hex(package.mu));
  return record;
}

ConfirmationPackage package_from_record(const FileRecord& record) {
  if (record.type != "package") {
    throw std::invalid_argument("expected a package record, got " + record.type);
  }
  ConfirmationPackage package;
  package.r_r = from_hex(record.require("rr"));
  package.e = from_hex(record.require("e"));
  package.s_s = from_hex(record.require("ss"));
  package.u_s = from_hex(record.require("us"));
  package.message = bytes_from_hex(record.require("msg"));
  package.mu = from_hex(record.require("mu"));
  return package;
}

FileRecord transcript_to_record(const ZkTranscript& transcript) {
  FileRecord record;
  record.type = "transcript";
  record.add("c_w", to_hex(transcript.w));
  record.add("r_beta", to_hex(transcript.beta));
  record.add("r_gamma", to_hex(transcript.gamma));
  record.add("c_u", to_hex(transcript.u));
  record.add("c_v", to_hex(transcript.v));
  record.add("r_alpha", to_hex(transcript.alpha));
  record.add("verdict",
             transcript.accepted ? "accept" : std::string("reject:") + transcript.failing_check);
  return record;
}

ZkTranscript transcript_from_record(const FileRecord& record) {
  if (record.type != "transcript") {
    throw std::invalid_argument("expected a transcript record, got " + record.type);
  }
  ZkTranscript transcript;
  transcript.w = from_hex(record.require("c_w"));
  transcript.beta = from_hex(record.require("r_beta"));
  transcript.gamma = from_hex(record.require("r_gamma"));
  transcript.u = from_hex(record.require("c_u"));
  transcript.v = from_hex(record.require("c_v"));
  transcript.alpha = from_hex(record.require("r_alpha"));
  const std::string& verdict = record.require("verdict");
  if (verdict == "accept") {
    transcript.accepted = true;
  } else if (verdict.rfind("reject:", 0) == 0) {
    transcript.accepted = false;
    transcript.failing_check = verdict.substr(7);
  } else {
    throw std::invalid_argument("unknown transcript verdict: " + verdict);
  }
  return transcript;
}

}  // namespace dtms
