// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_CONFIG_HPP
#define ONTOREC_CONFIG_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ontorec/criteria.hpp"
#include "ontorec/ranker.hpp"

namespace ontorec {

enum class InputType { kText, kKeywords };
enum class OutputType { kOntologies, kSets };
enum class Algorithm { kV2, kV1 };

std::string_view to_string(InputType t);
std::string_view to_string(OutputType t);
std::string_view to_string(Algorithm a);

// Parsers throw Error{kInvalidRequest} on unknown names.
InputType parse_input_type(std::string_view s);
OutputType parse_output_type(std::string_view s);
Algorithm parse_algorithm(std::string_view s);

inline constexpr std::size_t kMinSetSize = 2;
inline constexpr std::size_t kMaxSetSize = 4;

/// Clamps a requested set size into [kMinSetSize, kMaxSetSize].
std::size_t clamp_set_size(std::size_t requested);

struct RecommenderConfig {
  ScoringConstants constants;
  Weights weights;
  std::size_t ranking_size = 25;
  std::size_t max_set_size = 3;
  unsigned threads = 1;  // per-request fan-out across ontologies and sets

  /// Throws Error{kInvalidConfig, kInvalidWeights}.
  void validate() const;
};

/// Overlays the keys present in a flat JSON object onto `config`:
///   wc wa wd ws, pref_score syn_score multiword_score legacy_pref_score
///   legacy_syn_score, k_d k_s k_p, w_presence w_visits,
///   presence_repositories visits_repositories ({name: weight}),
///   ranking_size, max_elements_set, threads.
/// Unknown keys are rejected. Throws Error{kInvalidConfig}.
void apply_config_json(RecommenderConfig& config, std::string_view json_text);

RecommenderConfig load_config(const std::filesystem::path& path);

}  // namespace ontorec

#endif  // ONTOREC_CONFIG_HPP
