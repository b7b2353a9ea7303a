// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/error.hpp"

namespace ontorec {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kDuplicateClass: return "DuplicateClass";
    case ErrorCode::kEmptyRepository: return "EmptyRepository";
    case ErrorCode::kSingletonOntology: return "SingletonOntology";
    case ErrorCode::kUnknownOntology: return "UnknownOntology";
    case ErrorCode::kNegativeVisits: return "NegativeVisits";
    case ErrorCode::kZeroNormalizer: return "ZeroNormalizer";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidRequest: return "InvalidRequest";
    case ErrorCode::kUnknownOntologyFilter: return "UnknownOntologyFilter";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoAnnotatableWords: return "NoAnnotatableWords";
    case ErrorCode::kMissingFixtures: return "MissingFixtures";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ontorec
