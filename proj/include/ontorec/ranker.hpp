// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_RANKER_HPP
#define ONTOREC_RANKER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontorec/criteria.hpp"
#include "ontorec/sets.hpp"

namespace ontorec {

/// Criterion weights; must be non-negative and sum to 1 within 1e-9.
struct Weights {
  double coverage = 0.55;
  double acceptance = 0.15;
  double detail = 0.15;
  double specialization = 0.15;

  /// Throws Error{kInvalidWeights}.
  void validate() const;
};

/// 0..100 min-max position of each criterion among the ranked entries.
struct DisplayScores {
  int coverage = 0;
  int acceptance = 0;
  int detail = 0;
  int specialization = 0;
};

struct RankedEntry {
  std::vector<std::string> members;  // one acronym, or a set in ascending order
  double final_score = 0.0;
  CriterionScores criterion_scores;
  DisplayScores display_scores;
  std::size_t annotation_count = 0;
  std::vector<MemberContribution> contributions;  // sets only
  std::optional<double> legacy_score;             // legacy algorithm only
};

/// w_c * coverage + w_a * acceptance + w_d * detail + w_s * specialization.
/// Throws Error{kInvalidWeights}.
double aggregate(const CriterionScores& scores, const Weights& weights);

/// Strict ranking order: higher final score, higher raw coverage, fewer
/// members, then member acronyms ascending.
bool ranks_before(const RankedEntry& a, const RankedEntry& b);

/// Sorts by ranks_before(), keeps the first ranking_size entries and fills in
/// display scores over the kept entries. A criterion with a single distinct
/// value displays as 100.
std::vector<RankedEntry> rank(std::vector<RankedEntry> entries, std::size_t ranking_size);

}  // namespace ontorec

#endif  // ONTOREC_RANKER_HPP
