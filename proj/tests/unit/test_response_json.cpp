// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "doctest.h"
#include "json.hpp"
#include "ontorec/error.hpp"
#include "ontorec/response_json.hpp"
#include "support/fixtures.hpp"

using namespace ontorec;
using nlohmann::json;

TEST_SUITE("response_json") {
  TEST_CASE("request parsing") {
    const auto r = parse_request(
        R"({"input": "a, b", "input_type": "keywords", "output_type": "sets", "wc": 0.7, "wa": 0.1,
            "max_elements_set": 4, "ontologies": "NCIT, SNOMEDCT", "algorithm": "v2"})");
    CHECK(r.input == "a, b");
    CHECK(r.input_type == InputType::kKeywords);
    CHECK(r.output_type == OutputType::kSets);
    REQUIRE(r.weights);
    CHECK(r.weights->coverage == 0.7);
    CHECK(r.weights->detail == 0.15);
    CHECK(r.max_set_size == 4u);
    CHECK(r.ontologies == std::vector<std::string>{"NCIT", "SNOMEDCT"});
    CHECK(parse_request(R"({"input": "x", "ontologies": ["A", "B"]})").ontologies.size() == 2);
    CHECK_FALSE(parse_request(R"({"input": "x"})").weights);
  }

  TEST_CASE("malformed requests") {
    for (const char* body : {"", "[]", R"({"text": "x"})", R"({"input": 5})", R"({"input": "x", "bogus": 1})",
                             R"({"input": "x", "wc": "a"})", R"({"input": "x", "input_type": "pdf"})",
                             R"({"input": "x", "ontologies": 4})", R"({"input": "x", "max_elements_set": 2.5})"}) {
      CAPTURE(body);
      try {
        parse_request(body);
        FAIL("expected InvalidRequest");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kInvalidRequest);
      }
    }
  }

  TEST_CASE("response body") {
    const auto repo = ontorec::testing::snomed_mini();
    const Recommender rec(repo, AcceptanceTable{});
    RecommendRequest req;
    req.input = ontorec::testing::kThrombocyteInput;
    const auto body = json::parse(to_json(rec.recommend(req), rec.repository()));
    CHECK(body["algorithm"] == "v2");
    CHECK(body["word_count"] == 8);
    CHECK(body["annotation_total"] == 6);
    REQUIRE(body["ranking"].size() == 1);
    const auto& top = body["ranking"][0];
    CHECK(top["ontologies"] == json::array({"SNOMEDCT"}));
    CHECK(top["raw"]["coverage"].get<double>() == 31.0);
    CHECK(top["annotations"].size() == 2);
    const auto& a = top["annotations"][1];
    CHECK(a["class_id"] == "SNOMEDCT:87612001");
    CHECK(a["pref_label"] == "blood cell");
    CHECK(a["from_word"] == 6);
    CHECK(a["to_word"] == 7);
    CHECK(a["from"] == 27);
    CHECK(a["to"] == 37);
    CHECK(a["score"].get<double>() == 26.0);
    CHECK(top["display_scores"]["coverage"] == 100);

    const auto table = to_table(rec.recommend(req));
    CHECK(table.find("SNOMEDCT") != std::string::npos);
  }

  TEST_CASE("error body") {
    const auto body = json::parse(error_json(ErrorCode::kInvalidWeights, "bad \"w\""));
    CHECK(body["error"] == "InvalidWeights");
    CHECK(body["message"] == "bad \"w\"");
  }
}
