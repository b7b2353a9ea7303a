// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "ontorec/http_service.hpp"
#include "support/fixtures.hpp"

using namespace ontorec;
using nlohmann::json;

TEST_SUITE("http") {
  TEST_CASE("handlers without a socket") {
    const Recommender rec(ontorec::testing::snomed_mini(), AcceptanceTable{});
    CHECK(handle_health(rec).body == R"({"status":"ok","ontologies":1})");
    const auto ok = handle_recommend(rec, R"({"input": "blood cell"})");
    CHECK(ok.status == 200);
    const auto bad = handle_recommend(rec, R"({"input": "blood", "wc": 2})");
    CHECK(bad.status == 400);
    CHECK(json::parse(bad.body)["error"] == "InvalidWeights");
    CHECK(json::parse(handle_recommend(rec, "{").body)["error"] == "InvalidRequest");
    CHECK(json::parse(handle_recommend(rec, R"({"input": ""})").body)["error"] == "EmptyInput");
  }

  TEST_CASE("live server on an ephemeral port") {
    auto rec = std::make_shared<const Recommender>(ontorec::testing::snomed_mini(), AcceptanceTable{});
    HttpService service(rec);
    const int port = service.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread worker([&] { service.serve(); });

    httplib::Client client("127.0.0.1", port);
    client.set_connection_timeout(5);
    auto health = client.Get("/health");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");

    auto res = client.Post("/recommend", R"({"input": "A thrombocyte is a kind of blood cell"})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
    CHECK(json::parse(res->body)["ranking"][0]["raw"]["coverage"].get<double>() == 31.0);

    auto bad = client.Post("/recommend", R"({"input": "x", "ontologies": ["NOPE"]})", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);
    CHECK(json::parse(bad->body)["error"] == "UnknownOntologyFilter");

    auto preflight = client.Options("/recommend");
    REQUIRE(preflight);
    CHECK(preflight->status == 204);
    CHECK(preflight->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

    service.stop();
    worker.join();
  }
}
