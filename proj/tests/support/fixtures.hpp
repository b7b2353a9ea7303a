// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors
//
// Small hand-built corpora shared by the unit and acceptance tests.

#ifndef ONTOREC_TESTS_FIXTURES_HPP
#define ONTOREC_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ontorec/annotator.hpp"
#include "ontorec/corpus.hpp"

namespace ontorec::testing {

inline ClassRecord make_class(std::string acronym, std::string id, std::string label,
                              std::vector<std::string> synonyms = {}, std::uint32_t level = 1,
                              std::uint32_t definitions = 0, std::uint32_t properties = 0) {
  ClassRecord c;
  c.ontology_acronym = std::move(acronym);
  c.class_id = std::move(id);
  c.preferred_label = std::move(label);
  c.synonyms = std::move(synonyms);
  c.hierarchy_level = level;
  c.definitions_count = definitions;
  c.properties_count = properties;
  return c;
}

/// Pads an ontology with labels that never occur in test inputs.
inline void pad(std::vector<ClassRecord>& records, const std::string& acronym, std::size_t target) {
  std::size_t have = 0;
  for (const auto& r : records) have += r.ontology_acronym == acronym;
  for (std::size_t i = have; i < target; ++i)
    records.push_back(make_class(acronym, fmt::format("{}:pad{}", acronym, i), fmt::format("qqpad {}", i)));
}

inline const char* kThrombocyteInput = "A thrombocyte is a kind of blood cell";

/// SNOMEDCT mini-corpus behind the thrombocyte example.
inline std::vector<ClassRecord> snomed_mini_records() {
  const std::string s = "SNOMEDCT";
  std::vector<ClassRecord> r = {
      make_class(s, "SNOMEDCT:16378004", "platelet", {"thrombocyte"}, 4),
      make_class(s, "SNOMEDCT:87612001", "blood cell", {}, 3),
      make_class(s, "SNOMEDCT:87612002", "blood", {}, 2),
      make_class(s, "SNOMEDCT:4421005", "cell structure", {"cell"}, 2),
      make_class(s, "SNOMEDCT:362837007", "cell", {}, 3),
      make_class(s, "SNOMEDCT:362837008", "entire cell", {"cell"}, 3),
  };
  pad(r, s, 10);
  return r;
}

inline OntologyRepository snomed_mini() { return OntologyRepository::from_records(snomed_mini_records()); }

inline const char* kPenicillinInput = "Penicillin is an antibiotic used to treat tonsillitis";

/// Two-ontology corpus with the class counts, levels and sizes of the
/// penicillin worked example. O1 is padded to 120,000 classes.
inline std::vector<ClassRecord> penicillin_records(std::size_t o1_size = 120000, std::size_t o2_size = 800) {
  std::vector<ClassRecord> r = {
      make_class("O1", "O1:penicillin", "penicillin", {"benzylpenicillin", "penicillin g"}, 5, 1, 7),
      make_class("O1", "O1:antibacterial", "antibacterial agent",
                 {"antibiotic", "antibacterial", "antimicrobial", "bactericide", "anti infective",
                  "antibacterial drug", "antibiotic agent"},
                 3, 1, 16),
      make_class("O2", "O2:penicillin_drug", "penicillin drug", {"penicillin"}, 6, 0, 3),
      make_class("O2", "O2:tonsillitis", "tonsillitis", {}, 12, 0, 2),
  };
  pad(r, "O1", o1_size);
  pad(r, "O2", o2_size);
  return r;
}

inline OntologyRepository penicillin_repository(std::size_t o1_size = 120000, std::size_t o2_size = 800) {
  return OntologyRepository::from_records(penicillin_records(o1_size, o2_size));
}

inline Annotation make_annotation(std::string acronym, std::string id, MatchType type, std::size_t start,
                                  std::size_t end) {
  Annotation a;
  a.ontology_acronym = std::move(acronym);
  a.class_id = std::move(id);
  a.match_type = type;
  a.word_span = {start, end};
  return a;
}

/// Random annotation multiset over a short word range; duplicates of the same
/// span and class are possible, as with a real annotator.
inline std::vector<Annotation> random_annotations(std::mt19937_64& rng, std::size_t max_count,
                                                  std::size_t words = 10) {
  const std::size_t n = rng() % (max_count + 1);
  std::vector<Annotation> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t start = rng() % words;
    const std::size_t len = 1 + rng() % 3;
    const std::size_t end = std::min(words - 1, start + len - 1);
    const auto type = (rng() % 2) ? MatchType::kPref : MatchType::kSyn;
    out.push_back(make_annotation(fmt::format("O{}", rng() % 3), fmt::format("C{}", rng() % 4), type, start, end));
  }
  return out;
}

}  // namespace ontorec::testing

#endif  // ONTOREC_TESTS_FIXTURES_HPP
