// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_RECOMMENDER_HPP
#define ONTOREC_RECOMMENDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontorec/annotator.hpp"
#include "ontorec/config.hpp"
#include "ontorec/corpus.hpp"
#include "ontorec/ranker.hpp"

namespace ontorec {

struct RecommendRequest {
  std::string input;
  InputType input_type = InputType::kText;
  OutputType output_type = OutputType::kOntologies;
  std::optional<Weights> weights;            // config weights when absent
  std::optional<std::size_t> max_set_size;   // clamped to [2, 4]
  std::vector<std::string> ontologies;       // candidate filter; empty = all
  Algorithm algorithm = Algorithm::kV2;
};

struct RecommendResponse {
  InputType input_type = InputType::kText;
  OutputType output_type = OutputType::kOntologies;
  Algorithm algorithm = Algorithm::kV2;
  std::vector<Token> tokens;
  std::vector<WordSpan> keywords;          // keyword mode only
  std::size_t annotation_total = 0;        // annotations over the candidate pool
  std::vector<Annotation> union_selection; // greedy selection over all candidates
  double coverage_normalizer = 0.0;
  std::vector<RankedEntry> ranking;
};

/// The full pipeline: annotate, score each candidate ontology, optionally
/// build ontology sets, rank. Holds read-only state only; recommend() may be
/// called concurrently.
class Recommender {
 public:
  /// Throws Error{kInvalidConfig, kInvalidWeights, kMalformedRecord}.
  Recommender(OntologyRepository repository, AcceptanceTable acceptance,
              RecommenderConfig config = {});

  /// Throws Error{kInvalidWeights, kUnknownOntologyFilter, kEmptyInput,
  /// kInvalidRequest}. Input that no candidate annotates yields an empty ranking.
  RecommendResponse recommend(const RecommendRequest& request) const;

  const OntologyRepository& repository() const { return repository_; }
  const AcceptanceTable& acceptance() const { return acceptance_; }
  const TermIndex& index() const { return index_; }
  const RecommenderConfig& config() const { return config_; }

 private:
  OntologyRepository repository_;
  AcceptanceTable acceptance_;
  RecommenderConfig config_;
  TermIndex index_;
};

}  // namespace ontorec

#endif  // ONTOREC_RECOMMENDER_HPP
