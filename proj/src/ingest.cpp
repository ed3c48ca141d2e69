#include "proxnet/ingest.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "proxnet/pseudonym.hpp"

namespace proxnet {

using nlohmann::json;

void Roster::insert(std::string pseudonym, ParticipantId participant, OsKind os) {
  if (participant.empty()) {
    throw ValidationError("roster entry with empty participant id");
  }
  if (!is_pseudonym(pseudonym)) {
    throw ValidationError("roster address for " + participant +
                          " is not a pseudonym (64 lowercase hex digits expected)");
  }
  if (by_pseudonym_.count(pseudonym)) {
    throw ValidationError("duplicate roster address for participant " + participant);
  }
  if (by_participant_.count(participant)) {
    throw ValidationError("participant " + participant + " appears twice in the roster");
  }
  by_participant_.emplace(participant, pseudonym);
  by_pseudonym_.emplace(std::move(pseudonym), RosterEntry{std::move(participant), os});
}

bool Roster::contains_pseudonym(const std::string& pseudonym) const {
  return by_pseudonym_.count(pseudonym) > 0;
}

bool Roster::contains_participant(const ParticipantId& id) const {
  return by_participant_.count(id) > 0;
}

const RosterEntry& Roster::entry(const std::string& pseudonym) const {
  auto it = by_pseudonym_.find(pseudonym);
  if (it == by_pseudonym_.end()) {
    throw ValidationError("address not in roster");
  }
  return it->second;
}

OsKind Roster::os(const ParticipantId& id) const {
  auto it = by_participant_.find(id);
  if (it == by_participant_.end()) {
    throw ValidationError("participant " + id + " not in roster");
  }
  return by_pseudonym_.at(it->second).os;
}

std::vector<ParticipantId> Roster::participants() const {
  std::vector<ParticipantId> ids;
  ids.reserve(by_participant_.size());
  for (const auto& [id, _] : by_participant_) ids.push_back(id);
  return ids;  // std::map keeps them sorted
}

std::map<ParticipantId, OsKind> Roster::os_by_participant() const {
  std::map<ParticipantId, OsKind> out;
  for (const auto& [pseudonym, entry] : by_pseudonym_) out[entry.participant] = entry.os;
  return out;
}

Roster Roster::load_csv(std::istream& in) {
  if (!in) throw IoError("cannot read roster");
  Roster roster;
  std::string line;
  bool first = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("participant_id", 0) == 0) continue;  // header
    }
    std::istringstream row(line);
    std::string id, pseudonym, os;
    if (!std::getline(row, id, ',') || !std::getline(row, pseudonym, ',') ||
        !std::getline(row, os)) {
      throw ValidationError("roster line " + std::to_string(line_no) +
                            ": expected participant_id,mac_pseudonym,os");
    }
    roster.insert(pseudonym, id, os_from_name(os));
  }
  if (roster.size() == 0) throw ValidationError("roster is empty");
  return roster;
}

void Roster::save_csv(std::ostream& out) const {
  out << "participant_id,mac_pseudonym,os\n";
  for (const auto& [id, pseudonym] : by_participant_) {
    out << id << ',' << pseudonym << ',' << os_name(by_pseudonym_.at(pseudonym).os) << '\n';
  }
}

namespace {

struct LineOutcome {
  std::optional<ScanEvent> event;
  std::string reject_reason;  // empty when accepted
};

LineOutcome parse_line(const std::string& line, const StudyConfig& config) {
  json record = json::parse(line, nullptr, false);
  if (record.is_discarded() || !record.is_object()) return {std::nullopt, "malformed_json"};
  if (!record.contains("scanner") || !record["scanner"].is_string() || !record.contains("ts") ||
      !record["ts"].is_string()) {
    return {std::nullopt, "missing_field"};
  }
  ScanEvent event;
  event.scanner = record["scanner"].get<std::string>();
  if (event.scanner.empty()) return {std::nullopt, "missing_field"};
  try {
    event.timestamp = parse_rfc3339(record["ts"].get<std::string>());
  } catch (const ValidationError&) {
    return {std::nullopt, "bad_timestamp"};
  }
  if (event.timestamp < config.study_start || event.timestamp > config.study_end) {
    return {std::nullopt, "out_of_window"};
  }
  if (record.contains("mac") && !record["mac"].is_null()) {
    if (!record["mac"].is_string()) return {std::nullopt, "bad_mac"};
    const std::string mac = record["mac"].get<std::string>();
    if (config.macs_prehashed) {
      if (!is_pseudonym(mac)) return {std::nullopt, "bad_mac"};
      event.detected = mac;
    } else {
      try {
        event.detected = pseudonymize_mac(mac, config.salt);
      } catch (const ValidationError&) {
        return {std::nullopt, "bad_mac"};
      }
    }
    if (record.contains("name") && record["name"].is_string()) {
      event.device_name = record["name"].get<std::string>();
    }
    if (record.contains("type") && record["type"].is_string()) {
      event.device_type = record["type"].get<std::string>();
    }
  }
  return {std::move(event), ""};
}

}  // namespace

ParseResult parse_scan_log(std::istream& in, const StudyConfig& config) {
  if (!in) throw IoError("cannot read scan log");
  ParseResult result;
  IngestReport& report = result.report;

  using DedupeKey = std::tuple<ParticipantId, std::optional<std::string>, TimePoint>;
  std::set<DedupeKey> seen;

  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++report.total_lines;
    if (line.empty()) {
      ++report.rejected;
      ++report.rejected_by_reason["empty_line"];
      continue;
    }
    LineOutcome outcome = parse_line(line, config);
    if (!outcome.event) {
      ++report.rejected;
      ++report.rejected_by_reason[outcome.reject_reason];
      continue;
    }
    ++report.parsed;
    DedupeKey key{outcome.event->scanner, outcome.event->detected, outcome.event->timestamp};
    if (!seen.insert(key).second) {
      ++report.duplicate_events;
      continue;
    }
    result.events.push_back(std::move(*outcome.event));
  }
  if (in.bad()) throw IoError("I/O failure while reading scan log");
  if (report.parsed == 0) {
    throw ValidationError("scan log contains no parseable in-window records (" +
                          std::to_string(report.total_lines) + " lines read)");
  }
  std::sort(result.events.begin(), result.events.end(), event_order);
  return result;
}

void serialize_events(std::ostream& out, std::span<const ScanEvent> events) {
  for (const ScanEvent& event : events) {
    json record;
    record["scanner"] = event.scanner;
    record["mac"] = event.detected ? json(*event.detected) : json(nullptr);
    record["ts"] = format_rfc3339(event.timestamp);
    if (event.device_name) record["name"] = *event.device_name;
    if (event.device_type) record["type"] = *event.device_type;
    out << record.dump() << '\n';
  }
}

FilterResult filter_to_participants(std::vector<ScanEvent> events, const Roster& roster,
                                    bool retain_scan_instants) {
  FilterResult result;
  result.events.reserve(events.size());
  for (ScanEvent& event : events) {
    if (!roster.contains_participant(event.scanner)) {
      ++result.dropped_unknown_scanner;
      continue;
    }
    if (event.is_empty_scan() || roster.contains_pseudonym(*event.detected)) {
      result.events.push_back(std::move(event));
      continue;
    }
    ++result.dropped_detections;
    if (retain_scan_instants) {
      result.events.push_back(ScanEvent{event.scanner, std::nullopt, event.timestamp, {}, {}});
    }
  }
  std::sort(result.events.begin(), result.events.end(), event_order);
  result.events.erase(std::unique(result.events.begin(), result.events.end()),
                      result.events.end());
  // Drop empty-scan records at instants that still carry a detection; the
  // detection already proves the scan was performed.
  std::set<std::pair<ParticipantId, TimePoint>> detection_instants;
  for (const ScanEvent& event : result.events) {
    if (!event.is_empty_scan()) detection_instants.emplace(event.scanner, event.timestamp);
  }
  std::erase_if(result.events, [&](const ScanEvent& event) {
    return event.is_empty_scan() &&
           detection_instants.count({event.scanner, event.timestamp}) > 0;
  });
  return result;
}

std::vector<ContactEvent> resolve_detections(std::span<const ScanEvent> events,
                                             const Roster& roster) {
  std::vector<ContactEvent> out;
  out.reserve(events.size());
  for (const ScanEvent& event : events) {
    ContactEvent contact{event.scanner, std::nullopt, event.timestamp};
    if (!event.is_empty_scan()) {
      contact.detected = roster.entry(*event.detected).participant;
    }
    out.push_back(std::move(contact));
  }
  return out;
}

}  // namespace proxnet
