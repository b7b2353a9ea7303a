// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors
//
// Command line front end: one-shot recommendations, the HTTP service and the
// evaluation harness.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ontorec/config.hpp"
#include "ontorec/corpus.hpp"
#include "ontorec/error.hpp"
#include "ontorec/evalharness.hpp"
#include "ontorec/http_service.hpp"
#include "ontorec/recommender.hpp"
#include "ontorec/response_json.hpp"

namespace {

using namespace ontorec;

struct CorpusOptions {
  std::string corpus;
  std::string acceptance;
  std::string config;
  unsigned threads = 0;
};

void add_corpus_options(CLI::App* cmd, CorpusOptions& o) {
  cmd->add_option("--corpus", o.corpus, "Ontology corpus (JSON lines)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--acceptance", o.acceptance, "Acceptance metadata (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--config", o.config, "Scoring configuration (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--threads", o.threads, "Worker threads per request");
}

RecommenderConfig make_config(const CorpusOptions& o) {
  RecommenderConfig config = o.config.empty() ? RecommenderConfig{} : load_config(o.config);
  if (o.threads) config.threads = o.threads;
  config.validate();
  return config;
}

std::shared_ptr<const Recommender> make_recommender(const CorpusOptions& o) {
  auto repository = load_repository(o.corpus);
  auto acceptance = o.acceptance.empty() ? AcceptanceTable{} : load_acceptance(o.acceptance);
  return std::make_shared<const Recommender>(std::move(repository), std::move(acceptance), make_config(o));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

HttpService* g_service = nullptr;

extern "C" void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology recommendation from text or keywords"};
  app.require_subcommand(1);

  // recommend
  CorpusOptions rec_opts;
  std::string input, input_file, input_type = "text", output_type = "ontologies", algorithm = "v2";
  std::string ontologies, format = "json";
  std::optional<double> wc, wa, wd, ws;
  std::optional<std::size_t> max_set_size;
  auto* rec_cmd = app.add_subcommand("recommend", "Rank ontologies for one input");
  add_corpus_options(rec_cmd, rec_opts);
  auto* in_opt = rec_cmd->add_option("--input", input, "Input text or comma-separated keywords");
  rec_cmd->add_option("--input-file", input_file, "Read the input from a file")
      ->check(CLI::ExistingFile)
      ->excludes(in_opt);
  rec_cmd->add_option("--input-type", input_type, "text | keywords");
  rec_cmd->add_option("--output-type", output_type, "ontologies | sets");
  rec_cmd->add_option("--algorithm", algorithm, "v2 | v1");
  rec_cmd->add_option("--wc", wc, "Coverage weight");
  rec_cmd->add_option("--wa", wa, "Acceptance weight");
  rec_cmd->add_option("--wd", wd, "Detail weight");
  rec_cmd->add_option("--ws", ws, "Specialization weight");
  rec_cmd->add_option("--max-set-size", max_set_size, "Largest ontology set (2-4)");
  rec_cmd->add_option("--ontologies", ontologies, "Comma-separated candidate filter");
  rec_cmd->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

  // serve
  CorpusOptions srv_opts;
  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  auto* srv_cmd = app.add_subcommand("serve", "Run the HTTP service");
  add_corpus_options(srv_cmd, srv_opts);
  srv_cmd->add_option("--host", host, "Listen address");
  srv_cmd->add_option("--port", port, "Listen port; 0 picks a free one");
  srv_cmd->add_option("--static-dir", static_dir, "Directory served at /")->check(CLI::ExistingDirectory);

  // evaluate
  std::string corpus_dir, fixtures, eval_config, eval_format = "table", write_suite;
  auto* eval_cmd = app.add_subcommand("evaluate", "Compare v1, v2 and v2 sets over fixture datasets");
  eval_cmd->add_option("--corpus-dir", corpus_dir, "Shared corpus.jsonl / acceptance.json directory");
  eval_cmd->add_option("--fixtures", fixtures, "Dataset directory");
  eval_cmd->add_option("--config", eval_config, "Scoring configuration (JSON)")->check(CLI::ExistingFile);
  eval_cmd->add_option("--format", eval_format, "table | json")->check(CLI::IsMember({"json", "table"}));
  eval_cmd->add_option("--write-suite", write_suite, "Write the bundled fixture suite to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    CLI::App* failing = &app;
    for (auto* sub : app.get_subcommands()) failing = sub;
    std::cerr << '\n' << failing->help();
    return 2;
  }

  try {
    if (*rec_cmd) {
      RecommendRequest request;
      if (!input_file.empty()) {
        std::ifstream in(input_file);
        request.input.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else if (!input.empty()) {
        request.input = input;
      } else {
        request.input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      }
      request.input_type = parse_input_type(input_type);
      request.output_type = parse_output_type(output_type);
      request.algorithm = parse_algorithm(algorithm);
      request.ontologies = split_list(ontologies);
      request.max_set_size = max_set_size;

      const auto recommender = make_recommender(rec_opts);
      if (wc || wa || wd || ws) {
        Weights w = recommender->config().weights;
        if (wc) w.coverage = *wc;
        if (wa) w.acceptance = *wa;
        if (wd) w.detail = *wd;
        if (ws) w.specialization = *ws;
        request.weights = w;
      }
      const auto response = recommender->recommend(request);
      if (format == "table") {
        std::cout << to_table(response);
      } else {
        std::cout << to_json(response, recommender->repository(), recommender->config().constants) << '\n';
      }
      return 0;
    }

    if (*srv_cmd) {
      const auto recommender = make_recommender(srv_opts);
      HttpService service(recommender, static_dir.empty() ? std::nullopt
                                                          : std::optional<std::filesystem::path>(static_dir));
      const int bound = service.bind(host, port);
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cout << fmt::format("listening on http://{}:{}", host, bound) << std::endl;
      service.serve();
      g_service = nullptr;
      return 0;
    }

    if (*eval_cmd) {
      if (!write_suite.empty()) {
        write_bundled_suite(write_suite);
        std::cout << fmt::format("wrote fixture suite to {}", write_suite) << '\n';
        if (fixtures.empty()) return 0;
      }
      if (fixtures.empty()) throw Error(ErrorCode::kMissingFixtures, "--fixtures is required");
      const RecommenderConfig config = eval_config.empty() ? RecommenderConfig{} : load_config(eval_config);
      const auto report = run_experiment(corpus_dir, fixtures, config);
      std::cout << (eval_format == "json" ? report_json(report) + "\n" : report_table(report));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << fmt::format("error: {}: {}", error_name(e.code()), e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
