// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "doctest.h"
#include "ontorec/error.hpp"
#include "ontorec/recommender.hpp"
#include "ontorec/response_json.hpp"
#include "ontorec/synthetic.hpp"
#include "support/fixtures.hpp"

using namespace ontorec;
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

Recommender penicillin(RecommenderConfig config = {}) {
  return Recommender(ontorec::testing::penicillin_repository(50, 20),
                     parse_acceptance(R"({"O1": {"present_in": ["UMLS"], "visits": {"BioPortal": 90}},
                                          "O2": {"visits": {"BioPortal": 10}}})"),
                     config);
}

RecommendRequest text_request(std::string input) {
  RecommendRequest r;
  r.input = std::move(input);
  return r;
}

}  // namespace

TEST_SUITE("recommender") {
  TEST_CASE("single ontologies") {
    const auto rec = penicillin();
    const auto resp = rec.recommend(text_request(ontorec::testing::kPenicillinInput));
    REQUIRE(resp.ranking.size() == 2);
    CHECK(resp.coverage_normalizer == 25);
    CHECK(resp.annotation_total == 4);
    for (const auto& e : resp.ranking) {
      const auto& s = e.criterion_scores;
      CHECK(e.final_score == doctest::Approx(aggregate(s, {})).epsilon(1e-12));
      CHECK(s.raw_coverage_sum == 15);
      CHECK(s.coverage == doctest::Approx(0.6));
    }
    // Equal coverage; O1's acceptance and detail decide.
    CHECK(resp.ranking[0].members.front() == "O1");
    CHECK(resp.ranking[1].criterion_scores.specialization == doctest::Approx(1.0));
  }

  TEST_CASE("sets") {
    const auto rec = penicillin();
    auto req = text_request(ontorec::testing::kPenicillinInput);
    req.output_type = OutputType::kSets;
    const auto resp = rec.recommend(req);
    REQUIRE(resp.ranking.size() == 1);
    const auto& set = resp.ranking.front();
    CHECK(set.members == std::vector<std::string>{"O1", "O2"});
    CHECK(set.criterion_scores.raw_coverage_sum == 25);
    CHECK(set.criterion_scores.coverage == doctest::Approx(1.0));
    REQUIRE(set.contributions.size() == 2);
    CHECK(set.contributions[0].fraction == doctest::Approx(0.6));
  }

  TEST_CASE("sets need two annotating ontologies") {
    const Recommender rec(ontorec::testing::snomed_mini(), AcceptanceTable{});
    auto req = text_request(ontorec::testing::kThrombocyteInput);
    const auto single = rec.recommend(req);
    REQUIRE(single.ranking.size() == 1);
    CHECK(single.ranking[0].display_scores.coverage == 100);
    CHECK(single.ranking[0].annotation_count == 2);
    req.output_type = OutputType::kSets;
    CHECK(rec.recommend(req).ranking.empty());
  }

  TEST_CASE("filter and request errors") {
    const auto rec = penicillin();
    auto req = text_request(ontorec::testing::kPenicillinInput);
    req.ontologies = {"O2"};
    const auto resp = rec.recommend(req);
    REQUIRE(resp.ranking.size() == 1);
    CHECK(resp.ranking[0].members.front() == "O2");
    CHECK(resp.ranking[0].criterion_scores.coverage == doctest::Approx(1.0));

    req.ontologies = {"NOPE"};
    CHECK(code_of([&] { rec.recommend(req); }) == ErrorCode::kUnknownOntologyFilter);
    CHECK(code_of([&] { rec.recommend(text_request("   ")); }) == ErrorCode::kEmptyInput);
    auto bad = text_request("penicillin");
    bad.weights = Weights{0.5, 0.5, 0.5, 0};
    CHECK(code_of([&] { rec.recommend(bad); }) == ErrorCode::kInvalidWeights);
    auto v1sets = text_request("penicillin");
    v1sets.algorithm = Algorithm::kV1;
    v1sets.output_type = OutputType::kSets;
    CHECK(code_of([&] { rec.recommend(v1sets); }) == ErrorCode::kInvalidRequest);
    auto kw = text_request(" , ,");
    kw.input_type = InputType::kKeywords;
    CHECK(code_of([&] { rec.recommend(kw); }) == ErrorCode::kEmptyInput);
  }

  TEST_CASE("nothing annotated gives an empty ranking") {
    const auto rec = penicillin();
    const auto resp = rec.recommend(text_request("the quick brown fox"));
    CHECK(resp.ranking.empty());
    CHECK(resp.tokens.size() == 4);
  }

  TEST_CASE("legacy algorithm ranks by the legacy score") {
    const auto rec = penicillin();
    auto req = text_request(ontorec::testing::kPenicillinInput);
    req.algorithm = Algorithm::kV1;
    const auto resp = rec.recommend(req);
    REQUIRE(resp.ranking.size() == 2);
    for (const auto& e : resp.ranking) {
      REQUIRE(e.legacy_score);
      CHECK(e.final_score == *e.legacy_score);
    }
    CHECK(resp.ranking[0].final_score >= resp.ranking[1].final_score);
  }

  TEST_CASE("constructor validates acceptance repositories") {
    CHECK(code_of([] {
            Recommender(ontorec::testing::penicillin_repository(10, 10),
                        parse_acceptance(R"({"O1": {"present_in": ["Elsewhere"]}})"));
          }) == ErrorCode::kMalformedRecord);
    RecommenderConfig bad;
    bad.max_set_size = 9;
    CHECK(code_of([&] { penicillin(bad); }) == ErrorCode::kInvalidConfig);
  }

  TEST_CASE("thread count does not change output") {
    SyntheticCorpusOptions opts;
    opts.ontologies = 8;
    opts.classes_per_ontology = 300;
    opts.vocabulary = 400;
    auto repo = synthetic_repository(opts);
    auto acc = synthetic_acceptance(repo, 1);
    RecommenderConfig one, many;
    many.threads = 6;
    const Recommender a(repo, acc, one), b(repo, acc, many);
    auto req = text_request(synthetic_text(opts.vocabulary, 200, 9));
    req.output_type = OutputType::kSets;
    CHECK(to_json(a.recommend(req), a.repository()) == to_json(b.recommend(req), b.repository()));
  }
}
