// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "ontorec/error.hpp"

namespace ontorec {

namespace {

using nlohmann::json;

struct PendingClass {
  ClassRecord record;
  std::optional<std::string> parent_id;
  bool explicit_level = false;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void malformed(std::size_t line, const std::string& reason) {
  throw Error(ErrorCode::kMalformedRecord, fmt::format("line {}: {}", line, reason));
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(line, fmt::format("missing field \"{}\"", key));
  if (!it->is_string()) malformed(line, fmt::format("field \"{}\" must be a string", key));
  return it->get<std::string>();
}

std::uint32_t optional_count(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return 0;
  if (!it->is_number_integer()) malformed(line, fmt::format("field \"{}\" must be an integer", key));
  const auto value = it->get<std::int64_t>();
  if (value < 0) malformed(line, fmt::format("field \"{}\" must be non-negative", key));
  return static_cast<std::uint32_t>(value);
}

PendingClass parse_class_line(std::string_view text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(line, fmt::format("invalid JSON ({})", e.what()));
  }
  if (!obj.is_object()) malformed(line, "expected a JSON object");

  PendingClass pending;
  ClassRecord& rec = pending.record;
  rec.ontology_acronym = require_string(obj, "ontology", line);
  rec.class_id = require_string(obj, "class_id", line);
  rec.preferred_label = require_string(obj, "pref_label", line);
  if (trim(rec.ontology_acronym).empty()) malformed(line, "empty ontology acronym");
  if (rec.class_id.empty()) malformed(line, "empty class_id");
  if (trim(rec.preferred_label).empty()) malformed(line, "empty pref_label");

  if (auto it = obj.find("synonyms"); it != obj.end() && !it->is_null()) {
    if (!it->is_array()) malformed(line, "field \"synonyms\" must be an array");
    for (const auto& syn : *it) {
      if (!syn.is_string()) malformed(line, "synonyms must be strings");
      auto value = syn.get<std::string>();
      if (!trim(value).empty()) rec.synonyms.push_back(std::move(value));
    }
  }
  rec.definitions_count = optional_count(obj, "definitions", line);
  rec.properties_count = optional_count(obj, "properties", line);

  if (auto it = obj.find("hierarchy_level"); it != obj.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 1)
      malformed(line, "hierarchy_level must be an integer >= 1");
    rec.hierarchy_level = static_cast<std::uint32_t>(it->get<std::int64_t>());
    pending.explicit_level = true;
  }
  if (auto it = obj.find("parent_id"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) malformed(line, "parent_id must be a string");
    pending.parent_id = it->get<std::string>();
  }
  return pending;
}

// Resolves levels from parent links for classes without an explicit level.
// Explicit levels win; classes with neither are roots.
void resolve_levels(std::vector<PendingClass>& classes) {
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i].record.class_id, i);

  enum class State : std::uint8_t { kUnvisited, kVisiting, kDone };
  std::vector<State> state(classes.size(), State::kUnvisited);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].explicit_level || !classes[i].parent_id) state[i] = State::kDone;
  }

  for (std::size_t start = 0; start < classes.size(); ++start) {
    if (state[start] == State::kDone) continue;
    std::vector<std::size_t> chain;
    std::size_t cur = start;
    while (state[cur] != State::kDone) {
      if (state[cur] == State::kVisiting) {
        throw Error(ErrorCode::kMalformedRecord,
                    fmt::format("{}: parent cycle through class \"{}\"",
                                classes[cur].record.ontology_acronym, classes[cur].record.class_id));
      }
      state[cur] = State::kVisiting;
      chain.push_back(cur);
      const auto& parent = *classes[cur].parent_id;
      auto it = index.find(parent);
      if (it == index.end()) {
        throw Error(ErrorCode::kMalformedRecord,
                    fmt::format("{}: class \"{}\" names unknown parent \"{}\"",
                                classes[cur].record.ontology_acronym, classes[cur].record.class_id,
                                parent));
      }
      cur = it->second;
    }
    std::uint32_t level = classes[cur].record.hierarchy_level;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      classes[*it].record.hierarchy_level = ++level;
      state[*it] = State::kDone;
    }
  }
}

OntologyRepository build_repository(std::vector<PendingClass> pending) {
  std::map<std::string, std::vector<PendingClass>> grouped;
  for (auto& p : pending) grouped[p.record.ontology_acronym].push_back(std::move(p));

  std::vector<ClassRecord> records;
  records.reserve(pending.size());
  for (auto& [acronym, classes] : grouped) {
    resolve_levels(classes);
    for (auto& c : classes) records.push_back(std::move(c.record));
  }
  return OntologyRepository::from_records(std::move(records));
}

}  // namespace

OntologyRepository OntologyRepository::from_records(std::vector<ClassRecord> records) {
  if (records.empty()) throw Error(ErrorCode::kEmptyRepository, "repository contains no classes");

  std::sort(records.begin(), records.end(), [](const ClassRecord& a, const ClassRecord& b) {
    return std::tie(a.ontology_acronym, a.class_id) < std::tie(b.ontology_acronym, b.class_id);
  });

  OntologyRepository repo;
  for (auto& rec : records) {
    if (trim(rec.preferred_label).empty()) {
      throw Error(ErrorCode::kMalformedRecord,
                  fmt::format("{}: class \"{}\" has an empty preferred label", rec.ontology_acronym,
                              rec.class_id));
    }
    if (rec.hierarchy_level < 1) {
      throw Error(ErrorCode::kMalformedRecord,
                  fmt::format("{}: class \"{}\" has hierarchy level 0", rec.ontology_acronym,
                              rec.class_id));
    }
    if (repo.ontologies_.empty() || repo.ontologies_.back().acronym != rec.ontology_acronym) {
      repo.ontologies_.push_back(OntologyRecord{rec.ontology_acronym, {}});
    } else if (repo.ontologies_.back().classes.back().class_id == rec.class_id) {
      throw Error(ErrorCode::kDuplicateClass,
                  fmt::format("duplicate class ({}, {})", rec.ontology_acronym, rec.class_id));
    }
    repo.ontologies_.back().classes.push_back(std::move(rec));
  }

  repo.class_by_id_.resize(repo.ontologies_.size());
  for (std::size_t i = 0; i < repo.ontologies_.size(); ++i) {
    const auto& onto = repo.ontologies_[i];
    if (onto.class_count() < 2) {
      throw Error(ErrorCode::kSingletonOntology,
                  fmt::format("ontology {} has {} class; at least 2 are required", onto.acronym,
                              onto.class_count()));
    }
    repo.acronyms_.push_back(onto.acronym);
    repo.by_acronym_.emplace(onto.acronym, i);
    for (std::size_t c = 0; c < onto.classes.size(); ++c)
      repo.class_by_id_[i].emplace(onto.classes[c].class_id, c);
  }
  return repo;
}

bool OntologyRepository::contains(std::string_view acronym) const {
  return by_acronym_.find(std::string(acronym)) != by_acronym_.end();
}

const OntologyRecord& OntologyRepository::ontology(std::string_view acronym) const {
  auto it = by_acronym_.find(std::string(acronym));
  if (it == by_acronym_.end())
    throw Error(ErrorCode::kUnknownOntology, fmt::format("unknown ontology \"{}\"", acronym));
  return ontologies_[it->second];
}

const ClassRecord& OntologyRepository::find_class(std::string_view acronym,
                                                  std::string_view class_id) const {
  auto it = by_acronym_.find(std::string(acronym));
  if (it == by_acronym_.end())
    throw Error(ErrorCode::kUnknownOntology, fmt::format("unknown ontology \"{}\"", acronym));
  const auto& ids = class_by_id_[it->second];
  auto c = ids.find(std::string(class_id));
  if (c == ids.end()) {
    throw Error(ErrorCode::kUnknownOntology,
                fmt::format("ontology {} has no class \"{}\"", acronym, class_id));
  }
  return ontologies_[it->second].classes[c->second];
}

std::size_t OntologyRepository::total_class_count() const {
  std::size_t n = 0;
  for (const auto& o : ontologies_) n += o.class_count();
  return n;
}

std::size_t ontology_size(const OntologyRepository& repository, std::string_view acronym) {
  return repository.ontology(acronym).class_count();
}

OntologyRepository parse_repository(std::istream& in) {
  std::vector<PendingClass> pending;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    pending.push_back(parse_class_line(line, line_no));
  }
  if (pending.empty()) throw Error(ErrorCode::kEmptyRepository, "corpus file contains no classes");

  // Duplicates are reported with line context before grouping.
  std::map<std::pair<std::string_view, std::string_view>, std::size_t> seen;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& r = pending[i].record;
    if (!seen.emplace(std::pair{std::string_view(r.ontology_acronym), std::string_view(r.class_id)}, i)
             .second) {
      throw Error(ErrorCode::kDuplicateClass,
                  fmt::format("duplicate class ({}, {})", r.ontology_acronym, r.class_id));
    }
  }
  return build_repository(std::move(pending));
}

OntologyRepository load_repository(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, fmt::format("cannot read corpus file {}", path.string()));
  return parse_repository(in);
}

AcceptanceTable::AcceptanceTable(std::vector<AcceptanceRecord> records) {
  for (auto& rec : records) {
    for (const auto& [repo, n] : rec.visits) {
      auto& mx = max_visits_[repo];
      mx = std::max(mx, n);
    }
    auto key = rec.acronym;
    records_.insert_or_assign(std::move(key), std::move(rec));
  }
}

AcceptanceRecord AcceptanceTable::record(std::string_view acronym) const {
  auto it = records_.find(acronym);
  if (it == records_.end()) return AcceptanceRecord{std::string(acronym), {}, {}};
  return it->second;
}

bool AcceptanceTable::present(std::string_view acronym, std::string_view repository) const {
  auto it = records_.find(acronym);
  return it != records_.end() && it->second.present_in.count(std::string(repository)) > 0;
}

std::uint64_t AcceptanceTable::visits(std::string_view acronym, std::string_view repository) const {
  auto it = records_.find(acronym);
  if (it == records_.end()) return 0;
  auto v = it->second.visits.find(std::string(repository));
  return v == it->second.visits.end() ? 0 : v->second;
}

std::uint64_t AcceptanceTable::max_visits(std::string_view repository) const {
  auto it = max_visits_.find(repository);
  return it == max_visits_.end() ? 0 : it->second;
}

void AcceptanceTable::validate_repositories(const std::set<std::string>& presence_repositories,
                                            const std::set<std::string>& visits_repositories) const {
  for (const auto& [acronym, rec] : records_) {
    for (const auto& repo : rec.present_in) {
      if (!presence_repositories.count(repo)) {
        throw Error(ErrorCode::kMalformedRecord,
                    fmt::format("{}: presence repository \"{}\" is not declared in the configuration",
                                acronym, repo));
      }
    }
    for (const auto& [repo, n] : rec.visits) {
      if (!visits_repositories.count(repo)) {
        throw Error(ErrorCode::kMalformedRecord,
                    fmt::format("{}: visits repository \"{}\" is not declared in the configuration",
                                acronym, repo));
      }
    }
  }
}

AcceptanceTable parse_acceptance(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedRecord, fmt::format("acceptance file: invalid JSON ({})", e.what()));
  }
  if (!root.is_object())
    throw Error(ErrorCode::kMalformedRecord, "acceptance file: expected a JSON object");

  std::vector<AcceptanceRecord> records;
  for (const auto& [acronym, body] : root.items()) {
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::kMalformedRecord, fmt::format("acceptance record {}: {}", acronym, why));
    };
    if (!body.is_object()) bad("expected an object");
    AcceptanceRecord rec{acronym, {}, {}};
    if (auto it = body.find("present_in"); it != body.end() && !it->is_null()) {
      if (!it->is_array()) bad("present_in must be an array");
      for (const auto& r : *it) {
        if (!r.is_string()) bad("present_in entries must be strings");
        rec.present_in.insert(r.get<std::string>());
      }
    }
    if (auto it = body.find("visits"); it != body.end() && !it->is_null()) {
      if (!it->is_object()) bad("visits must be an object");
      for (const auto& [repo, n] : it->items()) {
        if (!n.is_number()) bad(fmt::format("visits for {} must be a number", repo));
        if (n.get<double>() < 0) {
          throw Error(ErrorCode::kNegativeVisits,
                      fmt::format("acceptance record {}: negative visits for {}", acronym, repo));
        }
        if (!n.is_number_integer()) bad(fmt::format("visits for {} must be an integer", repo));
        rec.visits.emplace(repo, n.get<std::uint64_t>());
      }
    }
    records.push_back(std::move(rec));
  }
  return AcceptanceTable(std::move(records));
}

AcceptanceTable load_acceptance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, fmt::format("cannot read acceptance file {}", path.string()));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_acceptance(text);
}

}  // namespace ontorec
