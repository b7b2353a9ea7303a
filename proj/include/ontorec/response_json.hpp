// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_RESPONSE_JSON_HPP
#define ONTOREC_RESPONSE_JSON_HPP

#include <string>
#include <string_view>

#include "ontorec/corpus.hpp"
#include "ontorec/error.hpp"
#include "ontorec/recommender.hpp"

namespace ontorec {

/// Parses a POST /recommend body:
///   {input, input_type, output_type, wc, wa, wd, ws, max_elements_set,
///    ontologies[], algorithm}
/// Only `input` is required. Weights fall back to the given defaults for any
/// of wc/wa/wd/ws not present. Throws Error{kInvalidRequest}.
RecommendRequest parse_request(std::string_view body, const Weights& default_weights = {});

/// Deterministic JSON rendering of a response: fixed key order, scores with
/// four decimals, display scores as integers.
/// Annotation scores use the given constants.
std::string to_json(const RecommendResponse& response, const OntologyRepository& repository,
                    const ScoringConstants& constants = {});

/// Fixed-width text table in the layout of the web results view.
std::string to_table(const RecommendResponse& response);

std::string error_json(ErrorCode code, std::string_view message);

}  // namespace ontorec

#endif  // ONTOREC_RESPONSE_JSON_HPP
