// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#ifndef ONTOREC_ANNOTATOR_HPP
#define ONTOREC_ANNOTATOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontorec/corpus.hpp"

namespace ontorec {

struct Token {
  std::string text;  // lowercased, never empty
  std::size_t start_word_index = 0;
  std::size_t begin = 0;  // byte offset into the tokenized input
  std::size_t end = 0;    // one past the last byte
};

/// Splits on whitespace and punctuation (both are separators, never tokens)
/// and lowercases. Input is treated as UTF-8.
std::vector<Token> tokenize(std::string_view input);

/// Lowercased, whitespace-joined token sequence; the index key form of a label.
std::string normalize_phrase(std::string_view phrase);

enum class MatchType : std::uint8_t { kPref = 0, kSyn = 1 };

std::string_view match_type_name(MatchType type);

/// Inclusive word-index range.
struct WordSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start + 1; }
  bool overlaps(const WordSpan& other) const { return start <= other.end && other.start <= end; }
  friend bool operator==(const WordSpan&, const WordSpan&) = default;
  friend auto operator<=>(const WordSpan&, const WordSpan&) = default;
};

struct Annotation {
  std::string ontology_acronym;
  std::string class_id;
  MatchType match_type = MatchType::kPref;
  WordSpan word_span;
  std::string matched_text;
  std::size_t text_begin = 0;  // byte offsets of the matched text in the input
  std::size_t text_end = 0;
  std::optional<std::size_t> keyword_index;  // keyword mode only

  std::size_t annotated_words() const { return word_span.length(); }
};

/// Canonical ordering: span start, span end, ontology, class_id, match type.
bool canonical_less(const Annotation& a, const Annotation& b);
void sort_canonical(std::vector<Annotation>& annotations);

/// Token-trie over every preferred label and synonym in a repository.
/// Immutable after build; lookups and annotation are thread-safe.
class TermIndex {
 public:
  struct Entry {
    std::uint32_t ontology = 0;  // position in repository().ontologies()
    std::uint32_t klass = 0;     // position within that ontology's classes
    MatchType type = MatchType::kPref;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  static TermIndex build(const OntologyRepository& repository);

  /// Entries whose pattern equals the normalized phrase exactly.
  std::span<const Entry> lookup(std::string_view phrase) const;

  std::size_t pattern_count() const { return entries_.size(); }
  std::size_t node_count() const { return node_entry_begin_.size() - 1; }

  const std::string& ontology_acronym(const Entry& e) const { return acronyms_[e.ontology]; }
  const std::string& class_id(const Entry& e) const { return class_ids_[e.ontology][e.klass]; }

  // Trie navigation, used by the annotate_* functions.
  static constexpr std::uint32_t kRoot = 0;
  static constexpr std::uint32_t kNoNode = UINT32_MAX;
  static constexpr std::uint32_t kNoToken = UINT32_MAX;
  std::uint32_t token_id(std::string_view token) const;
  std::uint32_t child(std::uint32_t node, std::uint32_t token) const;
  std::span<const Entry> entries_at(std::uint32_t node) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };

  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> vocabulary_;
  std::unordered_map<std::uint64_t, std::uint32_t> children_;  // (node << 32 | token) -> node
  std::vector<std::uint32_t> node_entry_begin_;                // CSR offsets, size nodes + 1
  std::vector<Entry> entries_;
  std::vector<std::string> acronyms_;
  std::vector<std::vector<std::string>> class_ids_;
};

/// Every occurrence of every indexed pattern, including nested and
/// overlapping matches. Output is in canonical order.
std::vector<Annotation> annotate_text(const TermIndex& index, std::string_view text);

/// Raw keyword input split on commas, trimmed; empty keywords dropped.
std::vector<std::string> split_keywords(std::string_view raw);

/// Tokenized keyword input: tokens carry byte offsets into the raw input and
/// word indices that run across keywords.
struct KeywordInput {
  std::vector<Token> tokens;
  std::vector<WordSpan> keywords;  // token range of each non-empty keyword
};

KeywordInput tokenize_keywords(std::string_view raw);

/// Only annotations spanning a whole keyword survive; each records the
/// keyword it covers. Word indices run across keywords in input order.
std::vector<Annotation> annotate_keywords(const TermIndex& index,
                                          std::span<const std::string> keywords);
std::vector<Annotation> annotate_keywords(const TermIndex& index, std::string_view raw,
                                          const KeywordInput& input);

/// Every match that lies inside a single keyword, partial ones included.
/// Used by the legacy algorithm, which had no keyword mode.
std::vector<Annotation> annotate_within_keywords(const TermIndex& index, std::string_view raw,
                                                 const KeywordInput& input);

}  // namespace ontorec

#endif  // ONTOREC_ANNOTATOR_HPP
