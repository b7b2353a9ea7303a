// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/http_service.hpp"

#include <fmt/format.h>

#include "httplib.h"
#include "ontorec/error.hpp"
#include "ontorec/response_json.hpp"

namespace ontorec {

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

void add_cors(httplib::Response& res) {
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
  res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

}  // namespace

HttpReply handle_recommend(const Recommender& recommender, std::string_view body) {
  try {
    const auto request = parse_request(body, recommender.config().weights);
    const auto response = recommender.recommend(request);
    return {200, to_json(response, recommender.repository(), recommender.config().constants)};
  } catch (const Error& e) {
    return {400, error_json(e.code(), e.what())};
  }
}

HttpReply handle_health(const Recommender& recommender) {
  return {200, fmt::format(R"({{"status":"ok","ontologies":{}}})",
                           recommender.repository().ontology_count())};
}

struct HttpService::Impl {
  std::shared_ptr<const Recommender> recommender;
  httplib::Server server;
};

HttpService::HttpService(std::shared_ptr<const Recommender> recommender,
                         std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>()) {
  impl_->recommender = std::move(recommender);
  auto& server = impl_->server;
  const Recommender* rec = impl_->recommender.get();

  server.Post("/recommend", [rec](const httplib::Request& req, httplib::Response& res) {
    auto reply = handle_recommend(*rec, req.body);
    res.status = reply.status;
    add_cors(res);
    res.set_content(std::move(reply.body), kJson);
  });
  server.Get("/health", [rec](const httplib::Request&, httplib::Response& res) {
    auto reply = handle_health(*rec);
    res.status = reply.status;
    add_cors(res);
    res.set_content(std::move(reply.body), kJson);
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    add_cors(res);
    res.status = 204;
  });
  if (static_dir) server.set_mount_point("/", static_dir->string());
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) throw Error(ErrorCode::kIoError, fmt::format("cannot bind {}:{}", host, port));
  return bound;
}

void HttpService::serve() { impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace ontorec
