// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_HTTP_SERVICE_HPP
#define ONTOREC_HTTP_SERVICE_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ontorec/recommender.hpp"

namespace ontorec {

struct HttpReply {
  int status = 200;
  std::string body;
};

/// POST /recommend handler body: 200 with the ranking JSON, 400 with
/// {"error", "message"} on validation failures.
HttpReply handle_recommend(const Recommender& recommender, std::string_view body);

/// GET /health: {"status":"ok","ontologies":N}.
HttpReply handle_health(const Recommender& recommender);

/// JSON-over-HTTP front end. Request handling is concurrent; the recommender
/// is shared read-only.
class HttpService {
 public:
  explicit HttpService(std::shared_ptr<const Recommender> recommender,
                       std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds the listening socket; port 0 picks an ephemeral port. Returns the
  /// bound port. Throws Error{kIoError} on failure.
  int bind(const std::string& host, int port);

  /// Serves until stop() is called. Requires a prior bind().
  void serve();

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ontorec

#endif  // ONTOREC_HTTP_SERVICE_HPP
