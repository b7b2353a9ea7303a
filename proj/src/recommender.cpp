// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/recommender.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>

#include "ontorec/error.hpp"
#include "ontorec/sets.hpp"
#include "parallel.hpp"

namespace ontorec {

namespace {

std::set<std::string> presence_names(const ScoringConstants& c) {
  std::set<std::string> out;
  for (const auto& [name, w] : c.presence_repo_weights) out.insert(name);
  return out;
}

std::set<std::string> visits_names(const ScoringConstants& c) {
  std::set<std::string> out;
  for (const auto& [name, w] : c.visits_repo_weights) out.insert(name);
  return out;
}

struct SingleEvaluation {
  std::vector<Annotation> selected;
  double raw_coverage = 0.0;
  double acceptance = 0.0;
  double detail = 0.0;
  double raw_specialization = 0.0;
  double legacy = 0.0;
};

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r\n\f\v") == std::string_view::npos; }

}  // namespace

Recommender::Recommender(OntologyRepository repository, AcceptanceTable acceptance,
                         RecommenderConfig config)
    : repository_(std::move(repository)),
      acceptance_(std::move(acceptance)),
      config_(std::move(config)),
      index_(TermIndex::build(repository_)) {
  config_.validate();
  acceptance_.validate_repositories(presence_names(config_.constants), visits_names(config_.constants));
}

RecommendResponse Recommender::recommend(const RecommendRequest& request) const {
  const auto& c = config_.constants;
  const Weights weights = request.weights.value_or(config_.weights);
  weights.validate();
  const std::size_t set_size =
      request.max_set_size ? clamp_set_size(*request.max_set_size) : config_.max_set_size;
  if (request.algorithm == Algorithm::kV1 && request.output_type == OutputType::kSets)
    throw Error(ErrorCode::kInvalidRequest, "the v1 algorithm does not evaluate ontology sets");

  std::set<std::string, std::less<>> filter;
  for (const auto& acronym : request.ontologies) {
    if (!repository_.contains(acronym)) {
      throw Error(ErrorCode::kUnknownOntologyFilter,
                  fmt::format("ontology filter names unknown ontology \"{}\"", acronym));
    }
    filter.insert(acronym);
  }

  if (blank(request.input)) throw Error(ErrorCode::kEmptyInput, "input is empty");

  RecommendResponse response;
  response.input_type = request.input_type;
  response.output_type = request.output_type;
  response.algorithm = request.algorithm;

  std::vector<Annotation> annotations;
  if (request.input_type == InputType::kText) {
    response.tokens = tokenize(request.input);
    if (response.tokens.empty()) throw Error(ErrorCode::kEmptyInput, "input contains no words");
    annotations = annotate_text(index_, request.input);
  } else {
    auto keywords = tokenize_keywords(request.input);
    if (keywords.keywords.empty()) throw Error(ErrorCode::kEmptyInput, "input contains no keywords");
    annotations = request.algorithm == Algorithm::kV2
                      ? annotate_keywords(index_, request.input, keywords)
                      : annotate_within_keywords(index_, request.input, keywords);
    response.tokens = std::move(keywords.tokens);
    response.keywords = std::move(keywords.keywords);
  }

  // Ontologies without annotations are not candidates.
  std::map<std::string, std::vector<Annotation>> by_ontology;
  std::vector<Annotation> pool;
  for (auto& a : annotations) {
    if (!filter.empty() && !filter.count(a.ontology_acronym)) continue;
    pool.push_back(a);
    by_ontology[a.ontology_acronym].push_back(std::move(a));
  }
  response.annotation_total = pool.size();
  if (by_ontology.empty()) return response;
  response.union_selection = select_annotations(std::move(pool), c);

  std::vector<std::string> acronyms;
  std::vector<const std::vector<Annotation>*> inputs;
  for (const auto& [acronym, list] : by_ontology) {
    acronyms.push_back(acronym);
    inputs.push_back(&list);
  }

  std::vector<SingleEvaluation> singles(acronyms.size());
  detail::parallel_for(acronyms.size(), config_.threads, [&](std::size_t i) {
    const auto& all = *inputs[i];
    const auto size = ontology_size(repository_, acronyms[i]);
    auto& eval = singles[i];
    eval.selected = select_annotations(all, c);
    eval.raw_coverage = total_score(eval.selected, c);
    eval.acceptance = acceptance_score(acronyms[i], acceptance_, c);
    eval.detail = detail_score(eval.selected, repository_, c);
    eval.raw_specialization = specialization_raw(all, size, repository_, c);
    eval.legacy = legacy_score_v1(all, size, repository_, c);
  });

  // The greedy union selection is not always optimal; taking the max keeps
  // every normalized coverage within [0,1] without clamping singles.
  double normalizer = total_score(response.union_selection, c);
  double max_specialization = 0.0;
  for (const auto& s : singles) {
    normalizer = std::max(normalizer, s.raw_coverage);
    max_specialization = std::max(max_specialization, s.raw_specialization);
  }
  response.coverage_normalizer = normalizer;

  std::vector<RankedEntry> entries;
  MemberTable members;
  for (std::size_t i = 0; i < acronyms.size(); ++i) {
    auto& s = singles[i];
    RankedEntry entry;
    entry.members = {acronyms[i]};
    auto& scores = entry.criterion_scores;
    scores.raw_coverage_sum = s.raw_coverage;
    scores.coverage = std::clamp(s.raw_coverage / normalizer, 0.0, 1.0);
    scores.acceptance = s.acceptance;
    scores.detail = s.detail;
    scores.raw_specialization = s.raw_specialization;
    scores.specialization =
        max_specialization > 0.0 ? s.raw_specialization / max_specialization : 0.0;
    scores.selected_annotations = s.selected;
    entry.annotation_count = s.selected.size();
    if (request.algorithm == Algorithm::kV1) {
      entry.final_score = s.legacy;
      entry.legacy_score = s.legacy;
    } else {
      entry.final_score = aggregate(scores, weights);
    }
    if (request.output_type == OutputType::kSets) {
      auto member = make_member_inputs(*inputs[i], repository_, c);
      member.acceptance = s.acceptance;
      member.specialization = scores.specialization;
      member.raw_specialization = s.raw_specialization;
      members.emplace(acronyms[i], std::move(member));
    }
    entries.push_back(std::move(entry));
  }

  auto ranked_singles = rank(std::move(entries), config_.ranking_size);
  if (request.output_type == OutputType::kOntologies) {
    response.ranking = std::move(ranked_singles);
    return response;
  }

  std::vector<std::string> candidates;
  std::map<std::string, CoveredSpans, std::less<>> covered;
  for (const auto& e : ranked_singles) {
    candidates.push_back(e.members.front());
    auto& spans = covered[e.members.front()];
    for (const auto& a : e.criterion_scores.selected_annotations) spans.insert(a.word_span);
  }

  std::vector<std::vector<std::string>> surviving;
  for (auto& set : enumerate_sets(candidates, set_size))
    if (prune_set(set, covered)) surviving.push_back(std::move(set));

  // Smaller sets go first so larger ones can reuse their selections. Only
  // the entries that survive ranking get their annotations materialized.
  std::vector<RankedEntry> set_entries(surviving.size());
  SelectionCache cache;
  for (std::size_t begin = 0; begin < surviving.size();) {
    std::size_t end = begin;
    while (end < surviving.size() && surviving[end].size() == surviving[begin].size()) ++end;
    const bool feeds_larger = surviving[begin].size() < set_size;
    std::vector<std::vector<const Annotation*>> handles(end - begin);
    detail::parallel_for(end - begin, config_.threads, [&](std::size_t k) {
      const std::size_t i = begin + k;
      auto scored = score_set(surviving[i], members, normalizer, c, &cache, &handles[k]);
      if (!feeds_larger) std::vector<const Annotation*>().swap(handles[k]);
      auto& entry = set_entries[i];
      entry.members = std::move(scored.members);
      entry.criterion_scores = std::move(scored.set_scores);
      entry.contributions = std::move(scored.contributions);
      entry.final_score = aggregate(entry.criterion_scores, weights);
    });
    for (std::size_t k = 0; feeds_larger && k < handles.size(); ++k)
      cache.emplace(set_entries[begin + k].members, std::move(handles[k]));
    begin = end;
  }
  auto ranked_sets = rank(std::move(set_entries), config_.ranking_size);
  for (auto& entry : ranked_sets) {
    entry.criterion_scores.selected_annotations = select_set_annotations(entry.members, members, c, &cache);
    entry.annotation_count = entry.criterion_scores.selected_annotations.size();
  }
  response.ranking = std::move(ranked_sets);
  return response;
}

}  // namespace ontorec
