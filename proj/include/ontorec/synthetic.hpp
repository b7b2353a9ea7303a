// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_SYNTHETIC_HPP
#define ONTOREC_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ontorec/corpus.hpp"

namespace ontorec {

/// Seeded random corpus for timing runs. Labels are drawn from a vocabulary
/// of pronounceable pseudo-words so that generated text hits the index.
struct SyntheticCorpusOptions {
  std::size_t ontologies = 50;
  std::size_t classes_per_ontology = 2000;
  std::size_t vocabulary = 5000;
  std::size_t max_term_words = 3;
  std::size_t max_synonyms = 2;
  std::uint32_t max_level = 12;
  std::uint64_t seed = 42;
};

/// Deterministic pseudo-word for a vocabulary slot, e.g. "kalo" or "tumeri".
std::string synthetic_word(std::size_t slot);

std::vector<ClassRecord> synthetic_classes(const SyntheticCorpusOptions& options);
OntologyRepository synthetic_repository(const SyntheticCorpusOptions& options);

/// Presence in UMLS for roughly half the ontologies, BioPortal visits spread
/// over four orders of magnitude.
AcceptanceTable synthetic_acceptance(const OntologyRepository& repository, std::uint64_t seed);

/// Space-separated text of `words` vocabulary words with sentence punctuation.
std::string synthetic_text(std::size_t vocabulary, std::size_t words, std::uint64_t seed);

}  // namespace ontorec

#endif  // ONTOREC_SYNTHETIC_HPP
