// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include <random>

#include "doctest.h"
#include "ontorec/error.hpp"
#include "ontorec/sets.hpp"
#include "support/fixtures.hpp"

using namespace ontorec;
using ontorec::testing::make_annotation;
using ontorec::testing::make_class;

namespace {

OntologyRepository repo_for(const std::vector<Annotation>& all) {
  std::vector<ClassRecord> records;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : all)
    if (seen.insert({a.ontology_acronym, a.class_id}).second)
      records.push_back(make_class(a.ontology_acronym, a.class_id, a.class_id));
  std::set<std::string> ontologies;
  for (const auto& r : records) ontologies.insert(r.ontology_acronym);
  for (const auto& o : ontologies) ontorec::testing::pad(records, o, 8);
  return OntologyRepository::from_records(std::move(records));
}

MemberTable table_from(const std::vector<Annotation>& all, const OntologyRepository& repo) {
  MemberTable t;
  std::map<std::string, std::vector<Annotation>> grouped;
  for (const auto& a : all) grouped[a.ontology_acronym].push_back(a);
  for (auto& [name, list] : grouped) t.emplace(name, make_member_inputs(std::move(list), repo));
  return t;
}

}  // namespace

TEST_SUITE("sets") {
  TEST_CASE("enumeration") {
    const std::vector<std::string> pool = {"D", "B", "A", "C", "B"};
    const auto sets = enumerate_sets(pool, 3);
    CHECK(sets.size() == 6 + 4);
    CHECK(sets.front() == std::vector<std::string>{"A", "B"});
    CHECK(sets.back() == std::vector<std::string>{"B", "C", "D"});
    CHECK(enumerate_sets(pool, 4).size() == 11);
    CHECK(enumerate_sets(std::vector<std::string>{"A"}, 3).empty());
  }

  TEST_CASE("pruning drops members whose spans others already cover") {
    std::map<std::string, CoveredSpans, std::less<>> covered;
    covered["A"] = {{0, 0}, {2, 2}};
    covered["B"] = {{0, 0}, {2, 2}};
    covered["C"] = {{4, 4}};
    covered["D"] = {{0, 0}, {4, 4}};
    CHECK_FALSE(prune_set(std::vector<std::string>{"A", "B"}, covered));
    CHECK(prune_set(std::vector<std::string>{"A", "C"}, covered));
    CHECK_FALSE(prune_set(std::vector<std::string>{"A", "C", "D"}, covered));
    CHECK_FALSE(prune_set(std::vector<std::string>{"A", "E"}, covered));
  }

  TEST_CASE("greedy on the union alone can lose to a member") {
    // One ontology has two disjoint two-word matches; another bridges them
    // with a slightly better one. The set must still reach 52.
    const std::vector<Annotation> all = {make_annotation("A", "a1", MatchType::kPref, 0, 1),
                                         make_annotation("A", "a2", MatchType::kPref, 2, 3),
                                         make_annotation("B", "b1", MatchType::kPref, 1, 3)};
    CHECK(annotation_score_v2(all[2]) == 39);
    CHECK(union_selection_score(all) == 39);
    const auto repo = repo_for(all);
    auto table = table_from(all, repo);
    const std::vector<std::string> members = {"A", "B"};
    CHECK(total_score(select_set_annotations(members, table)) == 52);
  }

  TEST_CASE("set invariants on random inputs") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
      auto all = ontorec::testing::random_annotations(rng, 12);
      if (all.empty()) continue;
      const auto repo = repo_for(all);
      const auto table = table_from(all, repo);
      std::vector<std::string> names;
      for (const auto& [n, in] : table) names.push_back(n);
      const double normalizer = std::max(1.0, union_selection_score(all));
      for (const auto& members : enumerate_sets(names, 3)) {
        const auto set = score_set(members, table, normalizer);
        const auto& sel = set.set_scores.selected_annotations;
        for (std::size_t i = 0; i < sel.size(); ++i)
          for (std::size_t j = i + 1; j < sel.size(); ++j)
            CHECK_FALSE(sel[i].word_span.overlaps(sel[j].word_span));
        double fractions = 0.0;
        for (const auto& c : set.contributions) fractions += c.fraction;
        CHECK(fractions == doctest::Approx(1.0).epsilon(1e-9));
        for (const auto& m : members)
          CHECK(set.set_scores.raw_coverage_sum >= total_score(table.at(m).selected));
        // Dropping a member never raises coverage.
        for (std::size_t skip = 0; skip < members.size() && members.size() > 2; ++skip) {
          std::vector<std::string> smaller;
          for (std::size_t i = 0; i < members.size(); ++i)
            if (i != skip) smaller.push_back(members[i]);
          CHECK(total_score(select_set_annotations(smaller, table)) <= set.set_scores.raw_coverage_sum);
        }
        for (double v : {set.set_scores.coverage, set.set_scores.acceptance, set.set_scores.detail,
                         set.set_scores.specialization}) {
          CHECK(v >= 0.0);
          CHECK(v <= 1.0);
        }
      }
    }
  }

  TEST_CASE("contribution weighting") {
    const std::vector<Annotation> all = {make_annotation("O0", "x", MatchType::kPref, 0, 0),
                                         make_annotation("O1", "y", MatchType::kPref, 1, 2)};
    const auto repo = repo_for(all);
    auto table = table_from(all, repo);
    table["O0"].acceptance = 1.0;
    table["O1"].acceptance = 0.0;
    table["O0"].specialization = 0.2;
    table["O1"].specialization = 0.8;
    const auto set = score_set(std::vector<std::string>{"O1", "O0"}, table, 36.0);
    CHECK(set.members == std::vector<std::string>{"O0", "O1"});
    CHECK(set.contributions[0].fraction == doctest::Approx(10.0 / 36));
    CHECK(set.set_scores.coverage == doctest::Approx(1.0));
    CHECK(set.set_scores.acceptance == doctest::Approx(10.0 / 36));
    CHECK(set.set_scores.specialization == doctest::Approx(0.2 * 10 / 36 + 0.8 * 26 / 36));
    CHECK_THROWS_AS(score_set(std::vector<std::string>{"O0", "O1"}, table, 0.0), Error);
    CHECK_THROWS_AS(score_set(std::vector<std::string>{"O0", "Q"}, table, 1.0), Error);
  }
}
