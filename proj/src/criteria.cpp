// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "ontorec/error.hpp"

namespace ontorec {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw Error(ErrorCode::kInvalidConfig, fmt::format("{} must lie in [0,1], got {}", name, v));
}

void check_weight_map(const std::map<std::string, double>& weights, const char* name) {
  if (weights.empty()) throw Error(ErrorCode::kInvalidConfig, fmt::format("{} is empty", name));
  double sum = 0.0;
  for (const auto& [repo, w] : weights) {
    check_unit(w, name);
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw Error(ErrorCode::kInvalidConfig, fmt::format("{} must sum to 1, got {}", name, sum));
}

double class_level_term(const Annotation& a, const OntologyRepository& repository) {
  return 2.0 * repository.find_class(a.ontology_acronym, a.class_id).hierarchy_level;
}

double capped_ratio(std::uint32_t count, std::uint32_t threshold) {
  return count >= threshold ? 1.0 : static_cast<double>(count) / threshold;
}

std::vector<Annotation> greedy(std::vector<Annotation> accepted, std::vector<Annotation> candidates,
                               const ScoringConstants& c) {
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return selection_priority_less(candidates[a], candidates[b], c);
  });

  std::size_t extent = 0;
  for (const auto& a : accepted) extent = std::max(extent, a.word_span.end + 1);
  for (const auto& a : candidates) extent = std::max(extent, a.word_span.end + 1);
  std::vector<bool> occupied(extent, false);
  for (const auto& a : accepted)
    for (auto w = a.word_span.start; w <= a.word_span.end; ++w) occupied[w] = true;

  for (auto i : order) {
    auto& cand = candidates[i];
    bool free = true;
    for (auto w = cand.word_span.start; w <= cand.word_span.end && free; ++w) free = !occupied[w];
    if (!free) continue;
    for (auto w = cand.word_span.start; w <= cand.word_span.end; ++w) occupied[w] = true;
    accepted.push_back(std::move(cand));
  }
  sort_canonical(accepted);
  return accepted;
}

}  // namespace

void ScoringConstants::validate() const {
  if (k_d == 0 || k_s == 0 || k_p == 0)
    throw Error(ErrorCode::kInvalidConfig, "detail thresholds k_d, k_s, k_p must be positive");
  if (pref_score < 0 || syn_score < 0 || multiword_bonus < 0 || legacy_pref < 0 || legacy_syn < 0)
    throw Error(ErrorCode::kInvalidConfig, "annotation type scores must be non-negative");
  check_unit(w_presence, "w_presence");
  check_unit(w_visits, "w_visits");
  if (std::abs(w_presence + w_visits - 1.0) > kSumTolerance)
    throw Error(ErrorCode::kInvalidConfig, "w_presence + w_visits must equal 1");
  check_weight_map(presence_repo_weights, "presence_repo_weights");
  check_weight_map(visits_repo_weights, "visits_repo_weights");
}

double annotation_score_v2(const Annotation& a, const ScoringConstants& c) {
  const auto words = a.annotated_words();
  const double type = a.match_type == MatchType::kPref ? c.pref_score : c.syn_score;
  const double bonus = words > 1 ? c.multiword_bonus : 0.0;
  return (type + bonus) * static_cast<double>(words);
}

double total_score(std::span<const Annotation> annotations, const ScoringConstants& c) {
  double sum = 0.0;
  for (const auto& a : annotations) sum += annotation_score_v2(a, c);
  return sum;
}

bool selection_priority_less(const Annotation& a, const Annotation& b, const ScoringConstants& c) {
  const double sa = annotation_score_v2(a, c);
  const double sb = annotation_score_v2(b, c);
  if (sa != sb) return sa > sb;
  if (a.word_span.start != b.word_span.start) return a.word_span.start < b.word_span.start;
  if (a.word_span.length() != b.word_span.length()) return a.word_span.length() > b.word_span.length();
  return std::tie(a.match_type, a.ontology_acronym, a.class_id) <
         std::tie(b.match_type, b.ontology_acronym, b.class_id);
}

std::vector<Annotation> select_annotations(std::vector<Annotation> annotations,
                                           const ScoringConstants& c) {
  return greedy({}, std::move(annotations), c);
}

std::vector<Annotation> extend_selection(std::span<const Annotation> seed,
                                         std::vector<Annotation> candidates,
                                         const ScoringConstants& c) {
  return greedy(std::vector<Annotation>(seed.begin(), seed.end()), std::move(candidates), c);
}

double union_selection_score(std::vector<Annotation> all_annotations, const ScoringConstants& c) {
  return total_score(select_annotations(std::move(all_annotations), c), c);
}

CoverageResult coverage_score(std::vector<Annotation> ontology_annotations, double global_normalizer,
                              const ScoringConstants& c) {
  if (!(global_normalizer > 0.0))
    throw Error(ErrorCode::kZeroNormalizer, "no candidate ontology annotates the input");
  CoverageResult result;
  result.selected = select_annotations(std::move(ontology_annotations), c);
  result.raw = total_score(result.selected, c);
  result.normalized = std::clamp(result.raw / global_normalizer, 0.0, 1.0);
  return result;
}

double acceptance_score(std::string_view acronym, const AcceptanceTable& table,
                        const ScoringConstants& c) {
  double presence = 0.0;
  for (const auto& [repo, w] : c.presence_repo_weights)
    if (table.present(acronym, repo)) presence += w;

  double visits = 0.0;
  for (const auto& [repo, w] : c.visits_repo_weights) {
    const auto max = table.max_visits(repo);
    if (max == 0) continue;
    visits += w * static_cast<double>(table.visits(acronym, repo)) / static_cast<double>(max);
  }
  return std::clamp(c.w_presence * presence + c.w_visits * visits, 0.0, 1.0);
}

double class_detail_score(const ClassRecord& klass, const ScoringConstants& c) {
  const auto synonyms = static_cast<std::uint32_t>(klass.synonyms.size());
  return (capped_ratio(klass.definitions_count, c.k_d) + capped_ratio(synonyms, c.k_s) +
          capped_ratio(klass.properties_count, c.k_p)) /
         3.0;
}

double detail_score(std::span<const Annotation> selected_annotations,
                    const OntologyRepository& repository, const ScoringConstants& c) {
  if (selected_annotations.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& a : selected_annotations)
    sum += class_detail_score(repository.find_class(a.ontology_acronym, a.class_id), c);
  return sum / static_cast<double>(selected_annotations.size());
}

double specialization_raw(std::span<const Annotation> all_annotations, std::size_t ontology_size,
                          const OntologyRepository& repository, const ScoringConstants& c) {
  if (ontology_size < 2)
    throw Error(ErrorCode::kSingletonOntology, "specialization requires at least 2 classes");
  double sum = 0.0;
  for (const auto& a : all_annotations) sum += annotation_score_v2(a, c) + class_level_term(a, repository);
  return sum / std::log10(static_cast<double>(ontology_size));
}

double legacy_score_v1(std::span<const Annotation> all_annotations, std::size_t ontology_size,
                       const OntologyRepository& repository, const ScoringConstants& c) {
  if (ontology_size < 2)
    throw Error(ErrorCode::kSingletonOntology, "legacy score requires at least 2 classes");
  double sum = 0.0;
  for (const auto& a : all_annotations) {
    const double type = a.match_type == MatchType::kPref ? c.legacy_pref : c.legacy_syn;
    sum += type + class_level_term(a, repository);
  }
  return sum / std::log10(static_cast<double>(ontology_size));
}

}  // namespace ontorec
