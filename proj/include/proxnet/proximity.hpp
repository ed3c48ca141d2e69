#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "proxnet/model.hpp"

namespace proxnet {

using CountVector = Eigen::Matrix<long, Eigen::Dynamic, 1>;
using CountMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

// Scan statistics over a window: performed(i) is the number of distinct
// scan instants of device i (an instant with several detections is one
// scan), detections(i,j) the number of those instants in which j was seen.
// detections(i,j) <= performed(i) by construction.
struct ScanTally {
  TimeWindow window;
  std::vector<ParticipantId> participants;  // sorted, unique
  CountVector performed;                    // N_i
  CountMatrix detections;                   // N_ij, zero diagonal

  Eigen::Index size() const { return static_cast<Eigen::Index>(participants.size()); }
  Eigen::Index index_of(const ParticipantId& id) const;  // ValidationError if absent
  long candidate_pairs() const { return static_cast<long>(size()) * (size() - 1) / 2; }

  void validate() const;
};

// Folds resolved events (including empty-scan records) into a tally over
// [window.start, window.end). Every listed participant gets a row even
// with zero scans. Throws RangeError when the window falls outside the
// study period, ValidationError on events naming unlisted participants.
ScanTally tally_scans(std::span<const ContactEvent> events, const TimeWindow& window,
                      std::vector<ParticipantId> participants,
                      const TimeWindow& study_period);

// Connection strength (N_ij + N_ji) / (N_i + N_j) in [0,1]; 0 when the
// pair never scanned. Symmetric in (i, j); throws DomainError when i == j.
double edge_weight(const ScanTally& tally, Eigen::Index i, Eigen::Index j);

// All pairwise weights as a symmetric matrix with zero diagonal.
Eigen::MatrixXd weight_matrix(const ScanTally& tally);

// Undirected weighted proximity graph. Zero-weight pairs carry no stored
// edge but still count among the candidate pairs.
struct WeightedNetwork {
  std::vector<ParticipantId> nodes;  // sorted
  Eigen::MatrixXd weights;           // symmetric, zero diagonal, entries in [0,1]
  TimeWindow window;

  struct Edge {
    Eigen::Index i, j;  // i < j
    double weight;
  };

  Eigen::Index size() const { return static_cast<Eigen::Index>(nodes.size()); }
  long candidate_edge_count() const { return static_cast<long>(size()) * (size() - 1) / 2; }
  std::vector<Edge> edges() const;  // positive-weight pairs, ordered
  Eigen::Index index_of(const ParticipantId& id) const;

  void validate() const;
};

WeightedNetwork build_weighted_network(const ScanTally& tally);

// One network per window of win_length sliding by stride, aligned to
// study_period.start; only fully contained windows are produced. Throws
// ValidationError unless win_length >= stride > 0.
std::vector<WeightedNetwork> window_series(std::span<const ScanEvent> events,
                                           std::vector<ParticipantId> participants,
                                           const TimeWindow& study_period, Duration win_length,
                                           Duration stride);

}  // namespace proxnet
