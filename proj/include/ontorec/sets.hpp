// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_SETS_HPP
#define ONTOREC_SETS_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ontorec/annotator.hpp"
#include "ontorec/corpus.hpp"
#include "ontorec/criteria.hpp"

namespace ontorec {

/// Per-member share of a set's selected coverage and the member values the
/// proportional set scores are built from.
struct MemberContribution {
  std::string acronym;
  double fraction = 0.0;        // share of the set's raw coverage
  double raw_coverage = 0.0;    // score mass of this member's winning annotations
  double acceptance = 0.0;
  double detail = 0.0;          // over this member's winning annotations only
  double specialization = 0.0;  // member's normalized single-ontology value
  std::size_t annotation_count = 0;
};

struct OntologySet {
  std::vector<std::string> members;  // ascending, distinct
  CriterionScores set_scores;
  std::vector<MemberContribution> contributions;  // same order as members
};

/// What the set scorer needs to know about one candidate ontology, taken
/// from its single-ontology evaluation.
struct MemberInputs {
  std::vector<Annotation> annotations;  // all annotations of the ontology
  std::vector<Annotation> selected;     // its own greedy selection
  // Best annotation per distinct span, in selection priority order. Lower
  // ranked annotations on the same span can never be selected.
  std::vector<Annotation> ranked;
  std::vector<double> ranked_score;   // annotation_score_v2 of each ranked entry
  std::vector<double> ranked_detail;  // class_detail_score of each ranked entry
  double acceptance = 0.0;
  double specialization = 0.0;      // normalized
  double raw_specialization = 0.0;
};

/// Fills the annotation lists; the scalar fields stay zero.
MemberInputs make_member_inputs(std::vector<Annotation> annotations, const OntologyRepository& repository,
                                const ScoringConstants& c = {});

using MemberTable = std::map<std::string, MemberInputs, std::less<>>;
using CoveredSpans = std::set<WordSpan>;

/// Selections already computed for smaller sets, keyed by ascending members.
/// Entries point into the `ranked` lists of the MemberTable they came from.
using SelectionCache = std::map<std::vector<std::string>, std::vector<const Annotation*>>;

/// All subsets of size 2..max_set_size in canonical member order, ordered by
/// size and then lexicographically. Duplicate candidates are ignored.
std::vector<std::vector<std::string>> enumerate_sets(std::span<const std::string> candidates,
                                                     std::size_t max_set_size);

/// False when some member's covered spans are a subset of the other members'
/// combined spans, i.e. the member adds nothing.
bool prune_set(std::span<const std::string> members,
               const std::map<std::string, CoveredSpans, std::less<>>& covered);

/// Selected annotations of a member combination. The greedy union selection
/// is used unless extending the selection of a one-smaller subset does
/// strictly better, so a set never covers less than any of its subsets.
std::vector<Annotation> select_set_annotations(std::span<const std::string> members,
                                               const MemberTable& table,
                                               const ScoringConstants& c = {},
                                               const SelectionCache* cache = nullptr);

/// Scores a surviving set: coverage over its selected annotations against the
/// global normalizer, the other criteria weighted by member contribution.
/// With `handles` given, the selection is returned there as a cache entry and
/// set_scores.selected_annotations stays empty.
OntologySet score_set(std::span<const std::string> members, const MemberTable& table,
                      double global_normalizer, const ScoringConstants& c = {},
                      const SelectionCache* cache = nullptr,
                      std::vector<const Annotation*>* handles = nullptr);

}  // namespace ontorec

#endif  // ONTOREC_SETS_HPP
