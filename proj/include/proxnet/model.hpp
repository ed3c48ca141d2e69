#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxnet/errors.hpp"
#include "proxnet/time.hpp"

namespace proxnet {

// Participants are identified by an opaque, non-empty string token.
using ParticipantId = std::string;

// One directed Bluetooth detection as it appears on the wire, or an
// empty-scan record (a scan that detected nobody) when `detected` is
// empty. `detected` is a salted pseudonym once an event has been through
// ingest; raw addresses never leave the parser.
struct ScanEvent {
  ParticipantId scanner;
  std::optional<std::string> detected;
  TimePoint timestamp{};
  std::optional<std::string> device_name;
  std::optional<std::string> device_type;

  bool is_empty_scan() const { return !detected.has_value(); }
  bool operator==(const ScanEvent&) const = default;
};

// Total order: (timestamp, scanner, detected, name, type).
bool event_order(const ScanEvent& a, const ScanEvent& b);

// A detection resolved to participant space via the roster; what the
// tally and the simulator work with.
struct ContactEvent {
  ParticipantId scanner;
  std::optional<ParticipantId> detected;
  TimePoint timestamp{};

  bool is_empty_scan() const { return !detected.has_value(); }
  bool operator==(const ContactEvent&) const = default;
};

bool event_order(const ContactEvent& a, const ContactEvent& b);

enum class OsKind { Ios, Android };

std::string_view os_name(OsKind os);
OsKind os_from_name(std::string_view name);

enum class Instrument { Phq9, Gad7 };

std::string_view instrument_name(Instrument instrument);
Instrument instrument_from_name(std::string_view name);
int instrument_item_count(Instrument instrument);  // 9 or 7
int instrument_max_total(Instrument instrument);   // 27 or 21

struct SurveyResponse {
  ParticipantId participant;
  Instrument instrument{Instrument::Phq9};
  std::vector<int> items;  // each in 0..=3
  TimePoint completed_at{};
};

struct SeverityBand {
  std::string label;
  int min_score = 0;
  int max_score = 0;
};

// Ordered, contiguous bands covering 0..=max_total of the instrument.
struct SeverityBandTable {
  Instrument instrument{Instrument::Phq9};
  std::vector<SeverityBand> bands;

  static SeverityBandTable default_phq9();
  static SeverityBandTable default_gad7();

  // Throws ValidationError if bands are empty, overlap, leave gaps, or do
  // not cover 0..=max_total exactly.
  void validate() const;
};

// Sum of items. Throws ValidationError naming the first offending item
// index when the item count or an item value is invalid.
int score_survey(const SurveyResponse& response);

// Label of the unique band containing total. Throws RangeError when total
// falls outside the table's coverage.
std::string band_score(int total, const SeverityBandTable& table);

enum class BackboneRule { Disjunctive, Conjunctive };  // "or" / "and"

std::string_view backbone_rule_name(BackboneRule rule);
BackboneRule backbone_rule_from_name(std::string_view name);

enum class CoverageSemantics { MeanInterval, MaxGap };

std::string_view coverage_semantics_name(CoverageSemantics semantics);
CoverageSemantics coverage_semantics_from_name(std::string_view name);

struct StudyConfig {
  TimePoint study_start{};
  TimePoint study_end{};
  Duration scan_interval{300};
  std::string salt;
  std::string digest_algorithm = "sha256";
  SeverityBandTable phq9_bands = SeverityBandTable::default_phq9();
  SeverityBandTable gad7_bands = SeverityBandTable::default_gad7();
  double backbone_alpha = 0.05;
  BackboneRule backbone_rule = BackboneRule::Disjunctive;
  CoverageSemantics coverage_semantics = CoverageSemantics::MeanInterval;
  bool macs_prehashed = false;
  // Keep the scan instants of detections that only saw non-participant
  // devices, as empty-scan records, so they still count as performed scans.
  bool retain_nonparticipant_scan_instants = false;

  TimeWindow window() const { return {study_start, study_end}; }
  const SeverityBandTable& bands(Instrument instrument) const;

  void validate() const;
};

}  // namespace proxnet
