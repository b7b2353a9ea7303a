// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/synthetic.hpp"

#include <random>

#include <fmt/format.h>

namespace ontorec {

namespace {

// Bounded draw that does not depend on the library's distribution classes,
// so generated corpora are identical across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

}  // namespace

std::string synthetic_word(std::size_t slot) {
  static constexpr const char* kSyllables[] = {"ka", "lo", "mi", "tu", "re", "sa", "no", "vi",
                                               "pe", "do", "gu", "ha", "ze", "bo", "fi", "ru"};
  std::string word;
  std::size_t n = slot;
  do {
    word += kSyllables[n % 16];
    n /= 16;
  } while (n > 0);
  if (word.size() < 4) word += "x";
  return word;
}

std::vector<ClassRecord> synthetic_classes(const SyntheticCorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  auto term = [&] {
    const std::size_t words = 1 + draw(rng, options.max_term_words);
    std::string out;
    for (std::size_t w = 0; w < words; ++w) {
      if (w) out += ' ';
      out += synthetic_word(draw(rng, options.vocabulary));
    }
    return out;
  };

  std::vector<ClassRecord> classes;
  classes.reserve(options.ontologies * options.classes_per_ontology);
  for (std::size_t o = 0; o < options.ontologies; ++o) {
    const auto acronym = fmt::format("SYN{:03}", o);
    for (std::size_t c = 0; c < options.classes_per_ontology; ++c) {
      ClassRecord rec;
      rec.ontology_acronym = acronym;
      rec.class_id = fmt::format("{}:{:06}", acronym, c);
      rec.preferred_label = term();
      const std::size_t synonyms = draw(rng, options.max_synonyms + 1);
      for (std::size_t s = 0; s < synonyms; ++s) rec.synonyms.push_back(term());
      rec.definitions_count = static_cast<std::uint32_t>(draw(rng, 3));
      rec.properties_count = static_cast<std::uint32_t>(draw(rng, 25));
      rec.hierarchy_level = 1 + static_cast<std::uint32_t>(draw(rng, options.max_level));
      classes.push_back(std::move(rec));
    }
  }
  return classes;
}

OntologyRepository synthetic_repository(const SyntheticCorpusOptions& options) {
  return OntologyRepository::from_records(synthetic_classes(options));
}

AcceptanceTable synthetic_acceptance(const OntologyRepository& repository, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<AcceptanceRecord> records;
  for (const auto& acronym : repository.acronyms()) {
    AcceptanceRecord rec{acronym, {}, {}};
    if (draw(rng, 2) == 0) rec.present_in.insert("UMLS");
    std::uint64_t visits = 1;
    for (std::size_t d = draw(rng, 5); d > 0; --d) visits *= 10;
    rec.visits["BioPortal"] = visits + draw(rng, 1000);
    records.push_back(std::move(rec));
  }
  return AcceptanceTable(std::move(records));
}

std::string synthetic_text(std::size_t vocabulary, std::size_t words, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string text;
  for (std::size_t w = 0; w < words; ++w) {
    if (w) text += (draw(rng, 12) == 0) ? ". " : " ";
    text += synthetic_word(draw(rng, vocabulary));
  }
  text += '.';
  return text;
}

}  // namespace ontorec
