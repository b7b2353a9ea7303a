// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "doctest.h"
#include "ontorec/config.hpp"
#include "ontorec/error.hpp"

using namespace ontorec;

namespace {

ErrorCode apply_code(const std::string& text) {
  RecommenderConfig c;
  try {
    apply_config_json(c, text);
    c.validate();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ontorec::Error");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("enum names round trip") {
    for (auto t : {InputType::kText, InputType::kKeywords}) CHECK(parse_input_type(to_string(t)) == t);
    for (auto t : {OutputType::kOntologies, OutputType::kSets}) CHECK(parse_output_type(to_string(t)) == t);
    for (auto a : {Algorithm::kV1, Algorithm::kV2}) CHECK(parse_algorithm(to_string(a)) == a);
    CHECK_THROWS_AS(parse_input_type("html"), Error);
    CHECK_THROWS_AS(parse_algorithm("v3"), Error);
    CHECK_THROWS_AS(parse_output_type(""), Error);
  }

  TEST_CASE("set size clamping") {
    CHECK(clamp_set_size(0) == 2);
    CHECK(clamp_set_size(3) == 3);
    CHECK(clamp_set_size(9) == 4);
  }

  TEST_CASE("flat JSON overlay") {
    RecommenderConfig c;
    apply_config_json(c, R"({"wc": 0.4, "wa": 0.2, "wd": 0.2, "ws": 0.2, "k_s": 4, "k_p": 10,
                             "max_elements_set": 7, "ranking_size": 5, "threads": 3,
                             "visits_repositories": {"BioPortal": 0.5, "Mirror": 0.5}})");
    CHECK_NOTHROW(c.validate());
    CHECK(c.weights.coverage == 0.4);
    CHECK(c.constants.k_s == 4);
    CHECK(c.constants.k_p == 10);
    CHECK(c.max_set_size == 4);
    CHECK(c.ranking_size == 5);
    CHECK(c.threads == 3);
    CHECK(c.constants.visits_repo_weights.size() == 2);
  }

  TEST_CASE("rejected configurations") {
    CHECK(apply_code(R"({"colour": 1})") == ErrorCode::kInvalidConfig);
    CHECK(apply_code(R"({"k_d": -1})") == ErrorCode::kInvalidConfig);
    CHECK(apply_code(R"({"k_d": 0})") == ErrorCode::kInvalidConfig);
    CHECK(apply_code(R"({"wc": "high"})") == ErrorCode::kInvalidConfig);
    CHECK(apply_code(R"({"wc": 0.9})") == ErrorCode::kInvalidWeights);
    CHECK(apply_code(R"({"ranking_size": 0})") == ErrorCode::kInvalidConfig);
    CHECK(apply_code("[]") == ErrorCode::kInvalidConfig);
    CHECK(apply_code("{") == ErrorCode::kInvalidConfig);
    CHECK_THROWS_AS(load_config("/nonexistent.json"), Error);
  }
}
