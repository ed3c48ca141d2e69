#include "proxnet/model.hpp"

#include <algorithm>
#include <tuple>

namespace proxnet {

bool event_order(const ScanEvent& a, const ScanEvent& b) {
  return std::tie(a.timestamp, a.scanner, a.detected, a.device_name, a.device_type) <
         std::tie(b.timestamp, b.scanner, b.detected, b.device_name, b.device_type);
}

bool event_order(const ContactEvent& a, const ContactEvent& b) {
  return std::tie(a.timestamp, a.scanner, a.detected) <
         std::tie(b.timestamp, b.scanner, b.detected);
}

std::string_view os_name(OsKind os) {
  return os == OsKind::Ios ? "ios" : "android";
}

OsKind os_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "ios") return OsKind::Ios;
  if (lower == "android") return OsKind::Android;
  throw ValidationError("unknown OS \"" + std::string(name) + "\" (expected ios or android)");
}

std::string_view instrument_name(Instrument instrument) {
  return instrument == Instrument::Phq9 ? "PHQ9" : "GAD7";
}

Instrument instrument_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "PHQ9" || upper == "PHQ-9") return Instrument::Phq9;
  if (upper == "GAD7" || upper == "GAD-7") return Instrument::Gad7;
  throw ValidationError("unknown instrument \"" + std::string(name) + "\"");
}

int instrument_item_count(Instrument instrument) {
  return instrument == Instrument::Phq9 ? 9 : 7;
}

int instrument_max_total(Instrument instrument) {
  return instrument == Instrument::Phq9 ? 27 : 21;
}

SeverityBandTable SeverityBandTable::default_phq9() {
  return {Instrument::Phq9,
          {{"minimal", 0, 4},
           {"mild", 5, 9},
           {"moderate", 10, 14},
           {"moderately-severe", 15, 19},
           {"severe", 20, 27}}};
}

SeverityBandTable SeverityBandTable::default_gad7() {
  return {Instrument::Gad7,
          {{"minimal", 0, 4}, {"mild", 5, 9}, {"moderate", 10, 14}, {"severe", 15, 21}}};
}

void SeverityBandTable::validate() const {
  if (bands.empty()) {
    throw ValidationError("severity band table has no bands");
  }
  const int max = instrument_max_total(instrument);
  int expected_min = 0;
  for (const SeverityBand& band : bands) {
    if (band.label.empty()) {
      throw ValidationError("severity band with empty label");
    }
    if (band.min_score != expected_min) {
      throw ValidationError("severity bands must be contiguous from 0: band \"" + band.label +
                            "\" starts at " + std::to_string(band.min_score) + ", expected " +
                            std::to_string(expected_min));
    }
    if (band.max_score < band.min_score) {
      throw ValidationError("severity band \"" + band.label + "\" has max < min");
    }
    expected_min = band.max_score + 1;
  }
  if (expected_min != max + 1) {
    throw ValidationError("severity bands for " + std::string(instrument_name(instrument)) +
                          " must cover 0..=" + std::to_string(max) + ", got 0..=" +
                          std::to_string(expected_min - 1));
  }
}

int score_survey(const SurveyResponse& response) {
  const int expected = instrument_item_count(response.instrument);
  if (static_cast<int>(response.items.size()) != expected) {
    throw ValidationError("survey response for " + response.participant + " has " +
                          std::to_string(response.items.size()) + " items, " +
                          std::string(instrument_name(response.instrument)) + " requires " +
                          std::to_string(expected));
  }
  int total = 0;
  for (std::size_t i = 0; i < response.items.size(); ++i) {
    const int item = response.items[i];
    if (item < 0 || item > 3) {
      throw ValidationError("survey item " + std::to_string(i + 1) + " for " +
                            response.participant + " is " + std::to_string(item) +
                            ", must be in 0..=3");
    }
    total += item;
  }
  return total;
}

std::string band_score(int total, const SeverityBandTable& table) {
  for (const SeverityBand& band : table.bands) {
    if (total >= band.min_score && total <= band.max_score) return band.label;
  }
  throw RangeError("score " + std::to_string(total) + " is outside the " +
                   std::string(instrument_name(table.instrument)) + " band table");
}

std::string_view backbone_rule_name(BackboneRule rule) {
  return rule == BackboneRule::Disjunctive ? "or" : "and";
}

BackboneRule backbone_rule_from_name(std::string_view name) {
  if (name == "or" || name == "OR" || name == "disjunctive") return BackboneRule::Disjunctive;
  if (name == "and" || name == "AND" || name == "conjunctive") return BackboneRule::Conjunctive;
  throw ValidationError("unknown backbone rule \"" + std::string(name) +
                        "\" (expected or / and)");
}

std::string_view coverage_semantics_name(CoverageSemantics semantics) {
  return semantics == CoverageSemantics::MeanInterval ? "mean" : "maxgap";
}

CoverageSemantics coverage_semantics_from_name(std::string_view name) {
  if (name == "mean" || name == "mean-interval") return CoverageSemantics::MeanInterval;
  if (name == "maxgap" || name == "max-gap") return CoverageSemantics::MaxGap;
  throw ValidationError("unknown coverage semantics \"" + std::string(name) +
                        "\" (expected mean / maxgap)");
}

const SeverityBandTable& StudyConfig::bands(Instrument instrument) const {
  return instrument == Instrument::Phq9 ? phq9_bands : gad7_bands;
}

void StudyConfig::validate() const {
  window().validate();
  if (scan_interval <= Duration::zero()) {
    throw ValidationError("scan_interval must be positive");
  }
  if (!(backbone_alpha > 0.0 && backbone_alpha < 1.0)) {
    throw ValidationError("backbone_alpha must lie in (0,1), got " +
                          std::to_string(backbone_alpha));
  }
  if (digest_algorithm != "sha256") {
    throw ValidationError("unsupported digest algorithm \"" + digest_algorithm +
                          "\" (only sha256 is available)");
  }
  phq9_bands.validate();
  gad7_bands.validate();
}

}  // namespace proxnet
