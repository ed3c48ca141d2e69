#include "proxnet/proximity.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>

namespace proxnet {

namespace {

std::unordered_map<ParticipantId, Eigen::Index> build_index(
    const std::vector<ParticipantId>& ids) {
  std::unordered_map<ParticipantId, Eigen::Index> index;
  index.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    index.emplace(ids[k], static_cast<Eigen::Index>(k));
  }
  return index;
}

std::vector<ParticipantId> sorted_unique(std::vector<ParticipantId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const ParticipantId& id : ids) {
    if (id.empty()) throw ValidationError("empty participant id");
  }
  return ids;
}

}  // namespace

Eigen::Index ScanTally::index_of(const ParticipantId& id) const {
  auto it = std::lower_bound(participants.begin(), participants.end(), id);
  if (it == participants.end() || *it != id) {
    throw ValidationError("participant " + id + " not in tally");
  }
  return static_cast<Eigen::Index>(it - participants.begin());
}

void ScanTally::validate() const {
  window.validate();
  const Eigen::Index n = size();
  if (performed.size() != n || detections.rows() != n || detections.cols() != n) {
    throw ValidationError("tally dimensions do not match participant count");
  }
  if ((performed.array() < 0).any() || (detections.array() < 0).any()) {
    throw ValidationError("tally counts must be non-negative");
  }
  if (detections.diagonal().any()) {
    throw ValidationError("tally has self-detections");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (detections.row(i).maxCoeff() > performed(i)) {
      throw ValidationError("participant " + participants[i] +
                            " detects a peer more often than it scanned");
    }
  }
}

ScanTally tally_scans(std::span<const ScanEvent> events, const TimeWindow& window,
                      std::vector<ParticipantId> participants,
                      const TimeWindow& study_period) {
  window.validate();
  study_period.validate();
  if (window.start < study_period.start || window.end > study_period.end) {
    throw RangeError("tally window [" + format_rfc3339(window.start) + ", " +
                     format_rfc3339(window.end) + ") is outside the study period");
  }

  ScanTally tally;
  tally.window = window;
  tally.participants = sorted_unique(std::move(participants));
  const Eigen::Index n = tally.size();
  tally.performed = CountVector::Zero(n);
  tally.detections = CountMatrix::Zero(n, n);
  auto index = build_index(tally.participants);

  // One scan instant = one distinct (scanner, timestamp); a detection of
  // the same peer twice in one instant counts once. Sets keep the fold
  // independent of event order.
  std::set<std::pair<Eigen::Index, TimePoint>> instants;
  std::set<std::tuple<Eigen::Index, TimePoint, Eigen::Index>> pair_instants;
  for (const ScanEvent& event : events) {
    if (!window.contains(event.timestamp)) continue;
    auto it = index.find(event.scanner);
    if (it == index.end()) {
      throw ValidationError("event scanner " + event.scanner +
                            " is not in the participant list (filter events first)");
    }
    const Eigen::Index i = it->second;
    if (instants.emplace(i, event.timestamp).second) ++tally.performed(i);
    if (event.is_empty_scan()) continue;
    auto jt = index.find(*event.detected);
    if (jt == index.end()) {
      throw ValidationError("detected address not in participant list (filter events first)");
    }
    const Eigen::Index j = jt->second;
    if (j == i) continue;  // self-detections carry no pair information
    if (pair_instants.emplace(i, event.timestamp, j).second) ++tally.detections(i, j);
  }
  return tally;
}

double edge_weight(const ScanTally& tally, Eigen::Index i, Eigen::Index j) {
  if (i == j) throw DomainError("edge weight is undefined for i == j");
  const Eigen::Index n = tally.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("participant index out of range");
  const long denominator = tally.performed(i) + tally.performed(j);
  if (denominator == 0) return 0.0;  // no evidence of proximity
  return static_cast<double>(tally.detections(i, j) + tally.detections(j, i)) /
         static_cast<double>(denominator);
}

Eigen::MatrixXd weight_matrix(const ScanTally& tally) {
  const Eigen::Index n = tally.size();
  Eigen::MatrixXd mutual =
      (tally.detections + tally.detections.transpose()).cast<double>();
  Eigen::VectorXd performed = tally.performed.cast<double>();
  Eigen::MatrixXd combined = performed.replicate(1, n) + performed.transpose().replicate(n, 1);
  Eigen::MatrixXd weights =
      (combined.array() > 0.0).select(mutual.array() / combined.array().max(1.0), 0.0);
  weights.diagonal().setZero();
  return weights;
}

std::vector<WeightedNetwork::Edge> WeightedNetwork::edges() const {
  std::vector<Edge> out;
  for (Eigen::Index i = 0; i < size(); ++i) {
    for (Eigen::Index j = i + 1; j < size(); ++j) {
      if (weights(i, j) > 0.0) out.push_back({i, j, weights(i, j)});
    }
  }
  return out;
}

Eigen::Index WeightedNetwork::index_of(const ParticipantId& id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) {
    throw ValidationError("participant " + id + " not in network");
  }
  return static_cast<Eigen::Index>(it - nodes.begin());
}

void WeightedNetwork::validate() const {
  const Eigen::Index n = size();
  if (weights.rows() != n || weights.cols() != n) {
    throw ValidationError("weight matrix dimensions do not match node count");
  }
  if (!weights.isApprox(weights.transpose())) {
    throw ValidationError("weight matrix must be symmetric");
  }
  if (weights.diagonal().any()) throw ValidationError("self-edges are not allowed");
  if ((weights.array() < 0.0).any() || (weights.array() > 1.0).any()) {
    throw ValidationError("edge weights must lie in [0,1]");
  }
}

WeightedNetwork build_weighted_network(const ScanTally& tally) {
  tally.validate();
  WeightedNetwork network;
  network.nodes = tally.participants;
  network.weights = weight_matrix(tally);
  network.window = tally.window;
  return network;
}

std::vector<WeightedNetwork> window_series(std::span<const ScanEvent> events,
                                           std::vector<ParticipantId> participants,
                                           const TimeWindow& study_period, Duration win_length,
                                           Duration stride) {
  if (stride <= Duration::zero() || win_length < stride) {
    throw ValidationError("window series requires win_length >= stride > 0");
  }
  study_period.validate();
  std::vector<WeightedNetwork> series;
  for (TimePoint start = study_period.start; start + win_length <= study_period.end;
       start += stride) {
    TimeWindow window{start, start + win_length};
    series.push_back(
        build_weighted_network(tally_scans(events, window, participants, study_period)));
  }
  return series;
}

}  // namespace proxnet
