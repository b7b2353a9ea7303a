// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_CRITERIA_HPP
#define ONTOREC_CRITERIA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontorec/annotator.hpp"
#include "ontorec/corpus.hpp"

namespace ontorec {

/// Tunable constants for the four evaluation criteria and the legacy scorer.
struct ScoringConstants {
  double pref_score = 10.0;
  double syn_score = 5.0;
  double multiword_bonus = 3.0;
  double legacy_pref = 10.0;
  double legacy_syn = 8.0;
  std::uint32_t k_d = 1;
  std::uint32_t k_s = 3;
  std::uint32_t k_p = 17;
  double w_presence = 0.5;
  double w_visits = 0.5;
  std::map<std::string, double> presence_repo_weights{{"UMLS", 1.0}};
  std::map<std::string, double> visits_repo_weights{{"BioPortal", 1.0}};

  /// Throws Error{kInvalidConfig} when thresholds are zero, weights are out of
  /// [0,1], or a weight group does not sum to 1 within 1e-9.
  void validate() const;
};

struct CriterionScores {
  double coverage = 0.0;
  double acceptance = 0.0;
  double detail = 0.0;
  double specialization = 0.0;
  double raw_coverage_sum = 0.0;
  double raw_specialization = 0.0;
  std::vector<Annotation> selected_annotations;  // canonical order
};

/// (type score + multi-word bonus if more than one word) * annotated words.
double annotation_score_v2(const Annotation& a, const ScoringConstants& c = {});

/// Sum of annotation_score_v2 over the given annotations.
double total_score(std::span<const Annotation> annotations, const ScoringConstants& c = {});

/// Greedy non-overlapping selection. Candidates are visited by descending
/// score, then span start, longer span, PREF before SYN, ontology, class_id;
/// each is accepted iff its span intersects no accepted span. The result is
/// in canonical order.
std::vector<Annotation> select_annotations(std::vector<Annotation> annotations,
                                           const ScoringConstants& c = {});

/// Same greedy pass, but starting from an already accepted, pairwise
/// non-overlapping seed. The seed is always kept.
std::vector<Annotation> extend_selection(std::span<const Annotation> seed,
                                         std::vector<Annotation> candidates,
                                         const ScoringConstants& c = {});

/// Order used by the greedy pass; true if `a` is visited before `b`.
bool selection_priority_less(const Annotation& a, const Annotation& b, const ScoringConstants& c);

struct CoverageResult {
  double normalized = 0.0;
  double raw = 0.0;
  std::vector<Annotation> selected;
};

/// Sum of the greedy selection over the union of all candidates' annotations.
double union_selection_score(std::vector<Annotation> all_annotations, const ScoringConstants& c = {});

/// raw = selected-annotation score sum; normalized = raw / normalizer, clamped
/// to [0,1]. Throws Error{kZeroNormalizer} when normalizer <= 0.
CoverageResult coverage_score(std::vector<Annotation> ontology_annotations, double global_normalizer,
                              const ScoringConstants& c = {});

/// w_presence * presence + w_visits * normalized visits. Visits are divided by
/// the table-wide maximum for each repository; a zero maximum contributes 0.
double acceptance_score(std::string_view acronym, const AcceptanceTable& table,
                        const ScoringConstants& c = {});

/// Mean of the capped definition / synonym / property ratios of one class.
double class_detail_score(const ClassRecord& klass, const ScoringConstants& c = {});

/// Mean class_detail_score over the selected annotations; 0 when empty.
double detail_score(std::span<const Annotation> selected_annotations,
                    const OntologyRepository& repository, const ScoringConstants& c = {});

/// Sum over ALL annotations of (annotation_score_v2 + 2 * level), divided by
/// log10(ontology_size). Levels come from the repository.
double specialization_raw(std::span<const Annotation> all_annotations, std::size_t ontology_size,
                          const OntologyRepository& repository, const ScoringConstants& c = {});

/// Legacy single-formula score: sum of (10 PREF / 8 SYN + 2 * level) over all
/// annotations, divided by log10(ontology_size).
double legacy_score_v1(std::span<const Annotation> all_annotations, std::size_t ontology_size,
                       const OntologyRepository& repository, const ScoringConstants& c = {});

}  // namespace ontorec

#endif  // ONTOREC_CRITERIA_HPP
