// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_CORPUS_HPP
#define ONTOREC_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontorec {

/// One ontology class as ingested from the corpus file. Definitions and
/// properties are carried as counts only.
struct ClassRecord {
  std::string ontology_acronym;
  std::string class_id;
  std::string preferred_label;
  std::vector<std::string> synonyms;
  std::uint32_t definitions_count = 0;
  std::uint32_t properties_count = 0;
  std::uint32_t hierarchy_level = 1;  // root = 1
};

struct OntologyRecord {
  std::string acronym;
  std::vector<ClassRecord> classes;  // sorted by class_id

  std::size_t class_count() const { return classes.size(); }
};

/// Immutable, acronym-keyed collection of ontologies. Built once by
/// load_repository() / OntologyRepository::from_records() and read-only after.
class OntologyRepository {
 public:
  /// Validates and assembles a repository from class records. Record order
  /// does not affect the result. Throws Error{kDuplicateClass,
  /// kEmptyRepository, kSingletonOntology, kMalformedRecord}.
  static OntologyRepository from_records(std::vector<ClassRecord> records);

  bool contains(std::string_view acronym) const;
  const OntologyRecord& ontology(std::string_view acronym) const;
  const ClassRecord& find_class(std::string_view acronym, std::string_view class_id) const;

  /// All acronyms in ascending order.
  const std::vector<std::string>& acronyms() const { return acronyms_; }
  const std::vector<OntologyRecord>& ontologies() const { return ontologies_; }

  std::size_t ontology_count() const { return ontologies_.size(); }
  std::size_t total_class_count() const;

 private:
  std::vector<OntologyRecord> ontologies_;  // sorted by acronym
  std::vector<std::string> acronyms_;
  std::unordered_map<std::string, std::size_t> by_acronym_;
  std::vector<std::unordered_map<std::string, std::size_t>> class_by_id_;
};

/// Number of classes in the ontology. Throws Error{kUnknownOntology}.
std::size_t ontology_size(const OntologyRepository& repository, std::string_view acronym);

/// Parses a JSON-Lines corpus, one class per line. Blank lines are skipped.
OntologyRepository parse_repository(std::istream& in);
OntologyRepository load_repository(const std::filesystem::path& path);

struct AcceptanceRecord {
  std::string acronym;
  std::set<std::string> present_in;
  std::map<std::string, std::uint64_t> visits;
};

class AcceptanceTable {
 public:
  AcceptanceTable() = default;
  explicit AcceptanceTable(std::vector<AcceptanceRecord> records);

  /// Record for the acronym; an empty record (no presence, zero visits) when
  /// the acronym is absent.
  AcceptanceRecord record(std::string_view acronym) const;

  bool present(std::string_view acronym, std::string_view repository) const;
  std::uint64_t visits(std::string_view acronym, std::string_view repository) const;

  /// Maximum visits recorded for any ontology in the given repository.
  std::uint64_t max_visits(std::string_view repository) const;

  /// Throws Error{kMalformedRecord} if any record names a repository outside
  /// the declared presence / visits lists.
  void validate_repositories(const std::set<std::string>& presence_repositories,
                             const std::set<std::string>& visits_repositories) const;

  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, AcceptanceRecord, std::less<>> records_;
  std::map<std::string, std::uint64_t, std::less<>> max_visits_;
};

/// Parses a single JSON object mapping acronyms to
/// {"present_in": [...], "visits": {repo: n}}.
/// Throws Error{kMalformedRecord, kNegativeVisits}.
AcceptanceTable parse_acceptance(std::string_view json_text);
AcceptanceTable load_acceptance(const std::filesystem::path& path);

}  // namespace ontorec

#endif  // ONTOREC_CORPUS_HPP
