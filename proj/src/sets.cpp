// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/sets.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include <fmt/format.h>

#include "ontorec/error.hpp"

namespace ontorec {

namespace {

const MemberInputs& member(const MemberTable& table, const std::string& acronym) {
  auto it = table.find(acronym);
  if (it == table.end())
    throw Error(ErrorCode::kUnknownOntology, fmt::format("no evaluation for set member {}", acronym));
  return it->second;
}

void enumerate(std::span<const std::string> pool, std::size_t size, std::size_t from,
               std::vector<std::string>& current, std::vector<std::vector<std::string>>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = from; i + (size - current.size()) <= pool.size(); ++i) {
    current.push_back(pool[i]);
    enumerate(pool, size, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

MemberInputs make_member_inputs(std::vector<Annotation> annotations, const OntologyRepository& repository,
                                const ScoringConstants& c) {
  MemberInputs in;
  in.selected = select_annotations(annotations, c);
  in.ranked = annotations;
  std::stable_sort(in.ranked.begin(), in.ranked.end(),
                   [&](const Annotation& a, const Annotation& b) { return selection_priority_less(a, b, c); });
  std::set<WordSpan> seen;
  std::erase_if(in.ranked, [&](const Annotation& a) { return !seen.insert(a.word_span).second; });
  for (const auto& a : in.ranked) {
    in.ranked_score.push_back(annotation_score_v2(a, c));
    in.ranked_detail.push_back(class_detail_score(repository.find_class(a.ontology_acronym, a.class_id), c));
  }
  in.annotations = std::move(annotations);
  return in;
}

std::vector<std::vector<std::string>> enumerate_sets(std::span<const std::string> candidates,
                                                     std::size_t max_set_size) {
  std::vector<std::string> pool(candidates.begin(), candidates.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<std::vector<std::string>> out;
  std::vector<std::string> current;
  for (std::size_t size = 2; size <= std::min(max_set_size, pool.size()); ++size)
    enumerate(pool, size, 0, current, out);
  return out;
}

bool prune_set(std::span<const std::string> members,
               const std::map<std::string, CoveredSpans, std::less<>>& covered) {
  static const CoveredSpans kEmpty;
  auto spans_of = [&](const std::string& m) -> const CoveredSpans& {
    auto it = covered.find(m);
    return it == covered.end() ? kEmpty : it->second;
  };
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool redundant = true;
    for (const auto& span : spans_of(members[i])) {
      bool elsewhere = false;
      for (std::size_t j = 0; j < members.size() && !elsewhere; ++j)
        elsewhere = j != i && spans_of(members[j]).count(span) > 0;
      if (!elsewhere) {
        redundant = false;
        break;
      }
    }
    if (redundant) return false;
  }
  return true;
}

namespace {

using Ptrs = std::vector<const Annotation*>;

// Selection priority of a ranked entry. Within one member there is a single
// entry per span, so equal keys can only come from different members, and
// member order (ascending acronym) settles them as the full comparison would.
struct Candidate {
  double score;
  std::uint32_t start;
  std::uint32_t length;
  std::uint32_t member;
  MatchType type;
  const Annotation* annotation;

  bool operator<(const Candidate& o) const {
    if (score != o.score) return score > o.score;
    if (start != o.start) return start < o.start;
    if (length != o.length) return length > o.length;
    if (type != o.type) return type < o.type;
    return member < o.member;
  }
};

struct Selection {
  Ptrs picks;
  double score = 0.0;
};

// Greedy pass over candidates already in priority order, on top of `seed`.
Selection greedy_ranked(const Ptrs& seed, const std::vector<Candidate>& ranked, std::size_t extent,
                        const ScoringConstants& c) {
  std::vector<char> occupied(extent, 0);
  Selection out{seed, 0.0};
  for (const auto* a : seed) {
    for (auto w = a->word_span.start; w <= a->word_span.end; ++w) occupied[w] = 1;
    out.score += annotation_score_v2(*a, c);
  }
  for (const auto& cand : ranked) {
    const auto end = cand.start + cand.length;
    bool free = true;
    for (auto w = cand.start; w < end && free; ++w) free = !occupied[w];
    if (!free) continue;
    std::fill(occupied.begin() + cand.start, occupied.begin() + end, 1);
    out.picks.push_back(cand.annotation);
    out.score += cand.score;
  }
  return out;
}

Ptrs select_ptrs(std::span<const std::string> members, const MemberTable& table, const ScoringConstants& c,
                 const SelectionCache* cache) {
  if (members.empty()) return {};
  if (cache) {
    if (auto it = cache->find(std::vector<std::string>(members.begin(), members.end())); it != cache->end())
      return it->second;
  }

  std::vector<Candidate> pool;
  std::size_t extent = 0;
  for (std::size_t m = 0; m < members.size(); ++m) {
    const auto& in = member(table, members[m]);
    const auto middle = pool.size();
    for (std::size_t i = 0; i < in.ranked.size(); ++i) {
      const auto& a = in.ranked[i];
      pool.push_back({in.ranked_score[i], static_cast<std::uint32_t>(a.word_span.start),
                      static_cast<std::uint32_t>(a.word_span.length()), static_cast<std::uint32_t>(m),
                      a.match_type, &a});
      extent = std::max(extent, a.word_span.end + 1);
    }
    std::inplace_merge(pool.begin(), pool.begin() + middle, pool.end());
  }

  auto best = greedy_ranked({}, pool, extent, c);
  if (members.size() == 1) return std::move(best.picks);
  std::vector<std::string> subset;
  for (std::size_t skip = 0; skip < members.size(); ++skip) {
    subset.clear();
    for (std::size_t i = 0; i < members.size(); ++i)
      if (i != skip) subset.push_back(members[i]);
    auto extended = greedy_ranked(select_ptrs(subset, table, c, cache), pool, extent, c);
    if (extended.score > best.score) best = std::move(extended);
  }
  return std::move(best.picks);
}

std::vector<Annotation> materialize(const Ptrs& selection) {
  std::vector<Annotation> out;
  out.reserve(selection.size());
  for (const auto* a : selection) out.push_back(*a);
  sort_canonical(out);
  return out;
}

}  // namespace

std::vector<Annotation> select_set_annotations(std::span<const std::string> members,
                                               const MemberTable& table, const ScoringConstants& c,
                                               const SelectionCache* cache) {
  return materialize(select_ptrs(members, table, c, cache));
}

OntologySet score_set(std::span<const std::string> members, const MemberTable& table,
                      double global_normalizer, const ScoringConstants& c, const SelectionCache* cache,
                      std::vector<const Annotation*>* handles) {
  if (!(global_normalizer > 0.0))
    throw Error(ErrorCode::kZeroNormalizer, "no candidate ontology annotates the input");

  OntologySet set;
  set.members.assign(members.begin(), members.end());
  std::sort(set.members.begin(), set.members.end());
  auto selection = select_ptrs(set.members, table, c, cache);
  auto& scores = set.set_scores;

  for (const auto& m : set.members) {
    const auto& inputs = member(table, m);
    const Annotation* first = inputs.ranked.data();
    const Annotation* last = first + inputs.ranked.size();
    MemberContribution contrib;
    contrib.acronym = m;
    double detail_sum = 0.0;
    for (const auto* a : selection) {
      if (a < first || a >= last) continue;
      const auto i = static_cast<std::size_t>(a - first);
      contrib.raw_coverage += inputs.ranked_score[i];
      detail_sum += inputs.ranked_detail[i];
      ++contrib.annotation_count;
    }
    contrib.acceptance = inputs.acceptance;
    contrib.detail = contrib.annotation_count ? detail_sum / contrib.annotation_count : 0.0;
    contrib.specialization = inputs.specialization;
    scores.raw_coverage_sum += contrib.raw_coverage;
    set.contributions.push_back(std::move(contrib));
  }
  scores.coverage = std::clamp(scores.raw_coverage_sum / global_normalizer, 0.0, 1.0);

  for (std::size_t k = 0; k < set.members.size(); ++k) {
    auto& contrib = set.contributions[k];
    contrib.fraction = scores.raw_coverage_sum > 0.0 ? contrib.raw_coverage / scores.raw_coverage_sum : 0.0;
    scores.acceptance += contrib.fraction * contrib.acceptance;
    scores.detail += contrib.fraction * contrib.detail;
    scores.specialization += contrib.fraction * contrib.specialization;
    scores.raw_specialization += contrib.fraction * member(table, set.members[k]).raw_specialization;
  }
  scores.acceptance = std::clamp(scores.acceptance, 0.0, 1.0);
  scores.detail = std::clamp(scores.detail, 0.0, 1.0);
  scores.specialization = std::clamp(scores.specialization, 0.0, 1.0);
  if (handles) {
    *handles = std::move(selection);
  } else {
    scores.selected_annotations = materialize(selection);
  }
  return set;
}

}  // namespace ontorec
