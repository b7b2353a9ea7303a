// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/ranker.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ontorec/error.hpp"

namespace ontorec {

namespace {

void fill_display(std::vector<RankedEntry>& entries, double CriterionScores::*field,
                  int DisplayScores::*out) {
  if (entries.empty()) return;
  double lo = entries.front().criterion_scores.*field;
  double hi = lo;
  for (const auto& e : entries) {
    lo = std::min(lo, e.criterion_scores.*field);
    hi = std::max(hi, e.criterion_scores.*field);
  }
  for (auto& e : entries) {
    if (hi == lo) {
      e.display_scores.*out = 100;
    } else {
      const double scaled = (e.criterion_scores.*field - lo) / (hi - lo);
      e.display_scores.*out = static_cast<int>(std::lround(scaled * 100.0));
    }
  }
}

}  // namespace

void Weights::validate() const {
  const double parts[] = {coverage, acceptance, detail, specialization};
  double sum = 0.0;
  for (double w : parts) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidWeights,
                  fmt::format("weights must be non-negative, got ({}, {}, {}, {})", coverage,
                              acceptance, detail, specialization));
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidWeights,
                fmt::format("weights must sum to 1, got {} ({}, {}, {}, {})", sum, coverage,
                            acceptance, detail, specialization));
  }
}

double aggregate(const CriterionScores& scores, const Weights& weights) {
  weights.validate();
  return weights.coverage * scores.coverage + weights.acceptance * scores.acceptance +
         weights.detail * scores.detail + weights.specialization * scores.specialization;
}

bool ranks_before(const RankedEntry& a, const RankedEntry& b) {
  if (a.final_score != b.final_score) return a.final_score > b.final_score;
  if (a.criterion_scores.raw_coverage_sum != b.criterion_scores.raw_coverage_sum)
    return a.criterion_scores.raw_coverage_sum > b.criterion_scores.raw_coverage_sum;
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

std::vector<RankedEntry> rank(std::vector<RankedEntry> entries, std::size_t ranking_size) {
  std::sort(entries.begin(), entries.end(), ranks_before);
  if (entries.size() > ranking_size) entries.resize(ranking_size);
  fill_display(entries, &CriterionScores::coverage, &DisplayScores::coverage);
  fill_display(entries, &CriterionScores::acceptance, &DisplayScores::acceptance);
  fill_display(entries, &CriterionScores::detail, &DisplayScores::detail);
  fill_display(entries, &CriterionScores::specialization, &DisplayScores::specialization);
  return entries;
}

}  // namespace ontorec
