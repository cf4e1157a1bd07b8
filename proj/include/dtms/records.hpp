#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtms/receiver.hpp"

namespace dtms {

/// Line-oriented record file: a "%DTMS v1 <record-type>" header followed by
/// "key = value" lines. Values are canonical lowercase hex integers,
/// comma-separated lists, or lowercase tokens; messages are hex-encoded
/// bytes. Unknown record types and duplicate keys are parse errors, and
/// parse/emit round-trips canonical files byte-exactly.
struct FileRecord {
  std::string type;
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string* find(const std::string& key) const;
  const std::string& require(const std::string& key) const;
  void add(const std::string& key, const std::string& value);

  std::string emit() const;
  static FileRecord parse(const std::string& text);
};

FileRecord read_record_file(const std::string& path);
void write_record_file(const std::string& path, const FileRecord& record);

// Typed encoders/decoders for each record type.

FileRecord params_to_record(const GroupParams& params);
GroupParams params_from_record(const FileRecord& record);

struct KeypairRecord {
  std::optional<MemberId> uid;
  std::optional<Int> x;  // absent in public-only files
  Int y;
};
FileRecord keypair_to_record(const KeypairRecord& keypair);
KeypairRecord keypair_from_record(const FileRecord& record);

FileRecord members_to_record(const std::vector<MemberInput>& members);
std::vector<MemberInput> members_from_record(const FileRecord& record);

/// Board files embed the group parameters: the dealer publishes both.
FileRecord board_to_record(const DealerPublicBoard& board, const GroupParams& params);
std::pair<DealerPublicBoard, GroupParams> board_from_record(const FileRecord& record);

FileRecord partial_to_record(const PartialSignature& partial);
PartialSignature partial_from_record(const FileRecord& record);

FileRecord session_to_record(const SessionAggregates& aggregates, const Bytes& message);
std::pair<SessionAggregates, Bytes> session_from_record(const FileRecord& record);

FileRecord signature_to_record(const GroupSignature& sig);
GroupSignature signature_from_record(const FileRecord& record);

FileRecord package_to_record(const ConfirmationPackage& package);
ConfirmationPackage package_from_record(const FileRecord& record);

FileRecord transcript_to_record(const ZkTranscript& transcript);
ZkTranscript transcript_from_record(const FileRecord& record);

}  // namespace dtms
