// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_ERROR_HPP
#define ONTOREC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontorec {

enum class ErrorCode {
  kMalformedRecord,
  kDuplicateClass,
  kEmptyRepository,
  kSingletonOntology,
  kUnknownOntology,
  kNegativeVisits,
  kZeroNormalizer,
  kInvalidWeights,
  kInvalidConfig,
  kInvalidRequest,
  kUnknownOntologyFilter,
  kEmptyInput,
  kNoAnnotatableWords,
  kMissingFixtures,
  kIoError,
};

/// Stable name used in CLI messages and HTTP error bodies ("InvalidWeights", ...).
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ontorec

#endif  // ONTOREC_ERROR_HPP
