// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/config.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "json.hpp"
#include "ontorec/error.hpp"

namespace ontorec {

namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& why) {
  throw Error(ErrorCode::kInvalidConfig, fmt::format("configuration: {}", why));
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) bad_config(fmt::format("\"{}\" must be a number", key));
  return v.get<double>();
}

std::size_t count(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    bad_config(fmt::format("\"{}\" must be a non-negative integer", key));
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

std::map<std::string, double> repo_weights(const json& v, const std::string& key) {
  if (!v.is_object()) bad_config(fmt::format("\"{}\" must be an object of weights", key));
  std::map<std::string, double> out;
  for (const auto& [name, w] : v.items()) out[name] = number(w, key);
  return out;
}

}  // namespace

std::string_view to_string(InputType t) { return t == InputType::kText ? "text" : "keywords"; }
std::string_view to_string(OutputType t) { return t == OutputType::kOntologies ? "ontologies" : "sets"; }
std::string_view to_string(Algorithm a) { return a == Algorithm::kV2 ? "v2" : "v1"; }

InputType parse_input_type(std::string_view s) {
  if (s == "text") return InputType::kText;
  if (s == "keywords") return InputType::kKeywords;
  throw Error(ErrorCode::kInvalidRequest, fmt::format("unknown input_type \"{}\"", s));
}

OutputType parse_output_type(std::string_view s) {
  if (s == "ontologies") return OutputType::kOntologies;
  if (s == "sets") return OutputType::kSets;
  throw Error(ErrorCode::kInvalidRequest, fmt::format("unknown output_type \"{}\"", s));
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "v2") return Algorithm::kV2;
  if (s == "v1") return Algorithm::kV1;
  throw Error(ErrorCode::kInvalidRequest, fmt::format("unknown algorithm \"{}\"", s));
}

std::size_t clamp_set_size(std::size_t requested) {
  return std::clamp(requested, kMinSetSize, kMaxSetSize);
}

void RecommenderConfig::validate() const {
  constants.validate();
  weights.validate();
  if (ranking_size == 0) bad_config("ranking_size must be positive");
  if (max_set_size < kMinSetSize || max_set_size > kMaxSetSize)
    bad_config(fmt::format("max_elements_set must lie in [{}, {}]", kMinSetSize, kMaxSetSize));
}

void apply_config_json(RecommenderConfig& config, std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    bad_config(fmt::format("invalid JSON ({})", e.what()));
  }
  if (!root.is_object()) bad_config("expected a JSON object");

  auto& c = config.constants;
  for (const auto& [key, v] : root.items()) {
    if (key == "wc") config.weights.coverage = number(v, key);
    else if (key == "wa") config.weights.acceptance = number(v, key);
    else if (key == "wd") config.weights.detail = number(v, key);
    else if (key == "ws") config.weights.specialization = number(v, key);
    else if (key == "pref_score") c.pref_score = number(v, key);
    else if (key == "syn_score") c.syn_score = number(v, key);
    else if (key == "multiword_score") c.multiword_bonus = number(v, key);
    else if (key == "legacy_pref_score") c.legacy_pref = number(v, key);
    else if (key == "legacy_syn_score") c.legacy_syn = number(v, key);
    else if (key == "k_d") c.k_d = static_cast<std::uint32_t>(count(v, key));
    else if (key == "k_s") c.k_s = static_cast<std::uint32_t>(count(v, key));
    else if (key == "k_p") c.k_p = static_cast<std::uint32_t>(count(v, key));
    else if (key == "w_presence") c.w_presence = number(v, key);
    else if (key == "w_visits") c.w_visits = number(v, key);
    else if (key == "presence_repositories") c.presence_repo_weights = repo_weights(v, key);
    else if (key == "visits_repositories") c.visits_repo_weights = repo_weights(v, key);
    else if (key == "ranking_size") config.ranking_size = count(v, key);
    else if (key == "max_elements_set") config.max_set_size = clamp_set_size(count(v, key));
    else if (key == "threads") config.threads = static_cast<unsigned>(count(v, key));
    else bad_config(fmt::format("unknown key \"{}\"", key));
  }
}

RecommenderConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, fmt::format("cannot read config file {}", path.string()));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  RecommenderConfig config;
  apply_config_json(config, text);
  config.validate();
  return config;
}

}  // namespace ontorec
