// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include <cmath>
#include <random>

#include "doctest.h"
#include "ontorec/criteria.hpp"
#include "ontorec/error.hpp"
#include "support/fixtures.hpp"

using namespace ontorec;
using ontorec::testing::make_annotation;
using ontorec::testing::make_class;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ontorec::Error");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_SUITE("criteria") {
  TEST_CASE("annotation score") {
    CHECK(annotation_score_v2(make_annotation("A", "x", MatchType::kPref, 0, 0)) == 10);
    CHECK(annotation_score_v2(make_annotation("A", "x", MatchType::kSyn, 0, 0)) == 5);
    CHECK(annotation_score_v2(make_annotation("A", "x", MatchType::kPref, 0, 1)) == 26);
    CHECK(annotation_score_v2(make_annotation("A", "x", MatchType::kSyn, 0, 2)) == 24);
    ScoringConstants c;
    c.pref_score = 7;
    c.multiword_bonus = 1;
    CHECK(annotation_score_v2(make_annotation("A", "x", MatchType::kPref, 3, 5), c) == 24);
  }

  TEST_CASE("selection is maximal and non-overlapping") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 300; ++round) {
      const auto all = ontorec::testing::random_annotations(rng, 12);
      const auto selected = select_annotations(all);
      for (std::size_t i = 0; i < selected.size(); ++i)
        for (std::size_t j = i + 1; j < selected.size(); ++j)
          CHECK_FALSE(selected[i].word_span.overlaps(selected[j].word_span));
      for (const auto& a : all) {
        bool kept = false, blocked = false;
        for (const auto& s : selected) {
          kept |= s.word_span == a.word_span && s.class_id == a.class_id &&
                  s.ontology_acronym == a.ontology_acronym && s.match_type == a.match_type;
          blocked |= s.word_span.overlaps(a.word_span) && annotation_score_v2(s) >= annotation_score_v2(a);
        }
        CHECK((kept || blocked));
      }
    }
  }

  TEST_CASE("selection is independent of input order") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
      auto all = ontorec::testing::random_annotations(rng, 12);
      const auto first = select_annotations(all);
      std::shuffle(all.begin(), all.end(), rng);
      const auto second = select_annotations(all);
      REQUIRE(first.size() == second.size());
      for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].class_id == second[i].class_id);
        CHECK(first[i].word_span == second[i].word_span);
      }
    }
  }

  TEST_CASE("extend_selection keeps the seed") {
    const std::vector<Annotation> seed = {make_annotation("A", "a", MatchType::kSyn, 1, 1)};
    const auto out = extend_selection(seed, {make_annotation("B", "b", MatchType::kPref, 0, 2),
                                             make_annotation("B", "c", MatchType::kPref, 2, 2)});
    REQUIRE(out.size() == 2);
    CHECK(out[0].class_id == "a");
    CHECK(out[1].class_id == "c");
  }

  TEST_CASE("coverage normalization") {
    const std::vector<Annotation> anns = {make_annotation("A", "a", MatchType::kPref, 0, 1),
                                          make_annotation("A", "b", MatchType::kPref, 1, 1)};
    const auto r = coverage_score(anns, 52.0);
    CHECK(r.raw == 26);
    CHECK(r.normalized == doctest::Approx(0.5));
    CHECK(coverage_score(anns, 10.0).normalized == 1.0);
    CHECK(code_of([&] { coverage_score(anns, 0.0); }) == ErrorCode::kZeroNormalizer);
    CHECK(union_selection_score(anns) == 26);
  }

  TEST_CASE("acceptance") {
    const auto table = parse_acceptance(
        R"({"A": {"present_in": ["UMLS"], "visits": {"BioPortal": 100}},
            "B": {"visits": {"BioPortal": 25}}})");
    CHECK(acceptance_score("A", table) == doctest::Approx(1.0));
    CHECK(acceptance_score("B", table) == doctest::Approx(0.125));
    CHECK(acceptance_score("C", table) == 0.0);
    CHECK(acceptance_score("A", AcceptanceTable{}) == 0.0);
    ScoringConstants c;
    c.w_presence = 1.0;
    c.w_visits = 0.0;
    CHECK(acceptance_score("B", table, c) == 0.0);
  }

  TEST_CASE("detail") {
    const auto repo = ontorec::testing::penicillin_repository(20, 20);
    ScoringConstants c;
    c.k_s = 4;
    c.k_p = 10;
    const std::vector<Annotation> o1 = {make_annotation("O1", "O1:penicillin", MatchType::kPref, 0, 0),
                                        make_annotation("O1", "O1:antibacterial", MatchType::kSyn, 3, 3)};
    CHECK(detail_score(o1, repo, c) == doctest::Approx((2.2 / 3 + 1.0) / 2));
    CHECK(detail_score({}, repo, c) == 0.0);

    // More metadata never lowers the score.
    auto klass = make_class("X", "x", "x", {}, 1, 0, 0);
    double last = class_detail_score(klass, c);
    for (int step = 0; step < 20; ++step) {
      if (step % 3 == 0) ++klass.definitions_count;
      if (step % 3 == 1) klass.synonyms.push_back("s");
      if (step % 3 == 2) klass.properties_count += 2;
      const double now = class_detail_score(klass, c);
      CHECK(now >= last);
      CHECK(now <= 1.0);
      last = now;
    }
    CHECK(last == 1.0);
  }

  TEST_CASE("specialization") {
    auto repo_of = [](std::size_t size) {
      std::vector<ClassRecord> r = {make_class("A", "a1", "x", {}, 4)};
      ontorec::testing::pad(r, "A", size);
      return OntologyRepository::from_records(std::move(r));
    };
    const std::vector<Annotation> anns = {make_annotation("A", "a1", MatchType::kPref, 0, 0)};
    double prev = INFINITY;
    for (std::size_t size : {2, 10, 100, 1000, 5000}) {
      const auto repo = repo_of(size);
      const double s = specialization_raw(anns, size, repo);
      CHECK(s == doctest::Approx(18.0 / std::log10(double(size))));
      CHECK(s < prev);
      prev = s;
    }
    const auto repo = repo_of(10);
    // Annotating the same span twice counts twice.
    const std::vector<Annotation> twice = {anns[0], anns[0]};
    CHECK(specialization_raw(twice, 10, repo) == doctest::Approx(2 * specialization_raw(anns, 10, repo)));
    CHECK(legacy_score_v1(twice, 10, repo) == doctest::Approx(2 * legacy_score_v1(anns, 10, repo)));
    CHECK(legacy_score_v1(anns, 10, repo) == doctest::Approx(18.0));
    CHECK(code_of([&] { specialization_raw(anns, 1, repo); }) == ErrorCode::kSingletonOntology);
    CHECK(code_of([&] { legacy_score_v1(anns, 0, repo); }) == ErrorCode::kSingletonOntology);
  }

  TEST_CASE("constants validation") {
    ScoringConstants c;
    CHECK_NOTHROW(c.validate());
    c.k_p = 0;
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidConfig);
    c = {};
    c.w_presence = 0.7;
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidConfig);
    c = {};
    c.visits_repo_weights = {{"BioPortal", 0.5}};
    CHECK(code_of([&] { c.validate(); }) == ErrorCode::kInvalidConfig);
  }
}
