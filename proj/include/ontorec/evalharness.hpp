// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_EVALHARNESS_HPP
#define ONTOREC_EVALHARNESS_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ontorec/config.hpp"
#include "ontorec/recommender.hpp"

namespace ontorec {

/// Coverage of the top-ranked entry, in percent.
///   text:     distinct word positions covered by the entry's selected
///             annotations / positions covered by the union selection
///   keywords: keywords fully covered by the entry / all keywords
/// Throws Error{kNoAnnotatableWords} when the text denominator is zero.
double top1_coverage(const RecommendResponse& response);

/// Executions whose top-1 coverage falls below this percentage are counted
/// in the report's low-coverage column.
inline constexpr double kLowCoverageThreshold = 20.0;

struct AlgorithmStats {
  std::size_t executions = 0;  // inputs with a defined coverage
  std::size_t excluded = 0;    // inputs with nothing annotatable
  double mean_coverage = 0.0;  // percent
  double low_coverage_rate = 0.0;  // percent of executions below 20%
  double mean_seconds = 0.0;
};

struct DatasetReport {
  std::string name;
  InputType input_type = InputType::kText;
  std::size_t inputs = 0;
  double mean_length = 0.0;  // words for text, keywords for keyword input
  AlgorithmStats v1;
  AlgorithmStats v2;
  AlgorithmStats v2_sets;
};

struct ExperimentReport {
  std::vector<DatasetReport> datasets;
};

/// Runs every dataset under `fixtures_dir` with the v1, v2 and v2-sets
/// pipelines. Layout:
///   <fixtures_dir>/<dataset>/dataset.json   optional {"input_type": "text"|"keywords"}
///   <fixtures_dir>/<dataset>/*.txt          one input per file
///   <fixtures_dir>/<dataset>/corpus.jsonl   optional, else <corpus_dir>/corpus.jsonl
///   <fixtures_dir>/<dataset>/acceptance.json optional, else <corpus_dir>/acceptance.json
/// Throws Error{kMissingFixtures} when no dataset with inputs exists.
ExperimentReport run_experiment(const std::filesystem::path& corpus_dir,
                                const std::filesystem::path& fixtures_dir,
                                const RecommenderConfig& config = {});

/// Per-input-type tables with a closing mean row.
std::string report_table(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

/// Writes the bundled fixture suite: pathology datasets for duplicate-class
/// inflation ("ehda-style"), multi-word keywords ("multiword"), partial
/// single-ontology coverage ("penicillin", "symptoms") and a seeded random
/// corpus ("random-text").
void write_bundled_suite(const std::filesystem::path& dir);

}  // namespace ontorec

#endif  // ONTOREC_EVALHARNESS_HPP
