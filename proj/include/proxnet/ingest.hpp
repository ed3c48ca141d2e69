#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxnet/model.hpp"
#include "proxnet/time.hpp"

namespace proxnet {

struct RosterEntry {
  ParticipantId participant;
  OsKind os{OsKind::Ios};
};

// Pseudonym -> participant map; injective in both directions.
class Roster {
 public:
  void insert(std::string pseudonym, ParticipantId participant, OsKind os);

  bool contains_pseudonym(const std::string& pseudonym) const;
  bool contains_participant(const ParticipantId& id) const;
  const RosterEntry& entry(const std::string& pseudonym) const;
  OsKind os(const ParticipantId& id) const;

  // Participant ids in sorted order.
  std::vector<ParticipantId> participants() const;
  std::map<ParticipantId, OsKind> os_by_participant() const;
  std::size_t size() const { return by_pseudonym_.size(); }

  static Roster load_csv(std::istream& in);
  void save_csv(std::ostream& out) const;

 private:
  std::map<std::string, RosterEntry> by_pseudonym_;
  std::map<ParticipantId, std::string> by_participant_;
};

struct IngestReport {
  long total_lines = 0;
  long parsed = 0;  // includes duplicates that were later dropped
  long rejected = 0;
  std::map<std::string, long> rejected_by_reason;
  long non_participant_detections = 0;
  long duplicate_events = 0;
  long unknown_scanner_events = 0;
};

struct ParseResult {
  std::vector<ScanEvent> events;  // sorted, deduplicated, pseudonymized
  IngestReport report;
};

// Parses JSON Lines scan records:
//   {"scanner": "...", "mac": "AA:BB:..."|"<pseudonym>"|null,
//    "ts": "RFC3339", "name": "...", "type": "..."}
// Malformed lines and events outside the study window are counted per
// reason, not fatal. Throws IoError if the stream is unreadable and
// ValidationError when no line parses at all.
ParseResult parse_scan_log(std::istream& in, const StudyConfig& config);

// Writes events in the same wire format with pre-hashed addresses, in
// event order; parse_scan_log on the output (macs_prehashed=true)
// reproduces the input exactly.
void serialize_events(std::ostream& out, std::span<const ScanEvent> events);

struct FilterResult {
  std::vector<ScanEvent> events;
  long dropped_detections = 0;       // detections of non-roster devices
  long dropped_unknown_scanner = 0;  // events whose scanner is not enrolled
};

// Keeps detections of roster devices and empty-scan records; drops events
// from unknown scanners. With retain_scan_instants, a dropped detection
// leaves an empty-scan record behind so the scan still counts as performed.
// Idempotent.
FilterResult filter_to_participants(std::vector<ScanEvent> events, const Roster& roster,
                                    bool retain_scan_instants = false);

// Maps detected pseudonyms to participant ids. Requires roster-filtered
// events; throws ValidationError on a detection of an unenrolled address.
std::vector<ContactEvent> resolve_detections(std::span<const ScanEvent> events,
                                             const Roster& roster);

}  // namespace proxnet
