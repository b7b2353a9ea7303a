// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/annotator.hpp"

#include <algorithm>
#include <tuple>

namespace ontorec {

namespace {

struct DecodedChar {
  char32_t code;
  std::size_t length;
};

DecodedChar decode_utf8(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  auto cont = [&](std::size_t i) -> int {
    if (pos + i >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[pos + i]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    const int c1 = cont(1);
    if (c1 >= 0) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if ((b0 & 0xF0) == 0xE0) {
    const int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) return {static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2), 3};
  } else if ((b0 & 0xF8) == 0xF0) {
    const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0)
      return {static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3), 4};
  }
  // Invalid byte: pass it through as a word character.
  return {0xFFFD, 1};
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

bool is_separator(char32_t c) {
  if (c < 0x80) {
    return !((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'));
  }
  if (c <= 0xBF) {
    // Latin-1 block: letters ª µ º and superscript digits are word characters.
    return !(c == 0xAA || c == 0xB5 || c == 0xBA || c == 0xB2 || c == 0xB3 || c == 0xB9);
  }
  if (c == 0xD7 || c == 0xF7) return true;
  if (c >= 0x2000 && c <= 0x206F) return true;  // general punctuation, spaces
  if (c >= 0x2190 && c <= 0x2BFF) return true;  // arrows, math, symbols
  if (c >= 0x3000 && c <= 0x303F) return true;  // CJK punctuation
  if (c >= 0xFE30 && c <= 0xFE4F) return true;
  if ((c >= 0xFF00 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
      (c >= 0xFF3B && c <= 0xFF40) || (c >= 0xFF5B && c <= 0xFF65))
    return true;
  return c == 0x1680 || c == 0xFEFF;
}

char32_t to_lower(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') ? c + 0x20 : c;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c >= 0x100 && c <= 0x137) return c | 1;
  if (c >= 0x139 && c <= 0x148) return (c & 1) ? c + 1 : c;
  if (c >= 0x14A && c <= 0x177) return c | 1;
  if (c == 0x178) return 0xFF;
  if (c >= 0x179 && c <= 0x17E) return (c & 1) ? c + 1 : c;
  if (c >= 0x391 && c <= 0x3AB && c != 0x3A2) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  return c;
}

// Emits the annotation for one trie entry over tokens [first, last].
Annotation make_annotation(const TermIndex& index, const TermIndex::Entry& entry,
                           std::string_view text, std::span<const Token> tokens,
                           std::size_t first, std::size_t last) {
  Annotation a;
  a.ontology_acronym = index.ontology_acronym(entry);
  a.class_id = index.class_id(entry);
  a.match_type = entry.type;
  a.word_span = WordSpan{tokens[first].start_word_index, tokens[last].start_word_index};
  a.text_begin = tokens[first].begin;
  a.text_end = tokens[last].end;
  a.matched_text = std::string(text.substr(a.text_begin, a.text_end - a.text_begin));
  return a;
}

std::vector<std::uint32_t> token_ids(const TermIndex& index, std::span<const Token> tokens) {
  std::vector<std::uint32_t> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(index.token_id(t.text));
  return ids;
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  Token current;
  bool in_token = false;
  while (pos < input.size()) {
    const auto [code, len] = decode_utf8(input, pos);
    if (is_separator(code)) {
      if (in_token) {
        current.end = pos;
        tokens.push_back(std::move(current));
        current = Token{};
        in_token = false;
      }
    } else {
      if (!in_token) {
        current.begin = pos;
        current.start_word_index = tokens.size();
        in_token = true;
      }
      if (code == 0xFFFD && len == 1) {
        current.text.push_back(input[pos]);
      } else {
        append_utf8(current.text, to_lower(code));
      }
    }
    pos += len;
  }
  if (in_token) {
    current.end = pos;
    tokens.push_back(std::move(current));
  }
  return tokens;
}

std::string normalize_phrase(std::string_view phrase) {
  std::string out;
  for (const auto& t : tokenize(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

std::string_view match_type_name(MatchType type) {
  return type == MatchType::kPref ? "PREF" : "SYN";
}

bool canonical_less(const Annotation& a, const Annotation& b) {
  return std::tie(a.word_span.start, a.word_span.end, a.ontology_acronym, a.class_id, a.match_type) <
         std::tie(b.word_span.start, b.word_span.end, b.ontology_acronym, b.class_id, b.match_type);
}

void sort_canonical(std::vector<Annotation>& annotations) {
  std::sort(annotations.begin(), annotations.end(), canonical_less);
}

TermIndex TermIndex::build(const OntologyRepository& repository) {
  TermIndex index;
  struct Pending {
    std::uint32_t node;
    Entry entry;
  };
  std::vector<Pending> pending;
  std::uint32_t node_count = 1;

  auto insert = [&](std::string_view label, Entry entry) {
    const auto tokens = tokenize(label);
    if (tokens.empty()) return;
    std::uint32_t node = kRoot;
    for (const auto& t : tokens) {
      auto [vit, fresh] =
          index.vocabulary_.try_emplace(t.text, static_cast<std::uint32_t>(index.vocabulary_.size()));
      const std::uint64_t key = (static_cast<std::uint64_t>(node) << 32) | vit->second;
      auto [cit, added] = index.children_.try_emplace(key, node_count);
      if (added) ++node_count;
      node = cit->second;
    }
    pending.push_back({node, entry});
  };

  const auto& ontologies = repository.ontologies();
  index.acronyms_.reserve(ontologies.size());
  index.class_ids_.resize(ontologies.size());
  for (std::uint32_t o = 0; o < ontologies.size(); ++o) {
    index.acronyms_.push_back(ontologies[o].acronym);
    const auto& classes = ontologies[o].classes;
    index.class_ids_[o].reserve(classes.size());
    for (std::uint32_t c = 0; c < classes.size(); ++c) {
      index.class_ids_[o].push_back(classes[c].class_id);
      insert(classes[c].preferred_label, Entry{o, c, MatchType::kPref});
      for (const auto& syn : classes[c].synonyms) insert(syn, Entry{o, c, MatchType::kSyn});
    }
  }

  // Ontologies and classes are already in (acronym, class_id) order, so
  // sorting by index tuple yields canonical emission order per node.
  std::sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return std::tie(a.node, a.entry.ontology, a.entry.klass, a.entry.type) <
           std::tie(b.node, b.entry.ontology, b.entry.klass, b.entry.type);
  });
  // A synonym repeated within one class is one pattern.
  pending.erase(std::unique(pending.begin(), pending.end(),
                            [](const Pending& a, const Pending& b) {
                              return a.node == b.node && a.entry == b.entry;
                            }),
                pending.end());

  index.node_entry_begin_.assign(node_count + 1, 0);
  for (const auto& p : pending) ++index.node_entry_begin_[p.node + 1];
  for (std::size_t i = 1; i < index.node_entry_begin_.size(); ++i)
    index.node_entry_begin_[i] += index.node_entry_begin_[i - 1];
  index.entries_.reserve(pending.size());
  for (const auto& p : pending) index.entries_.push_back(p.entry);
  return index;
}

std::uint32_t TermIndex::token_id(std::string_view token) const {
  auto it = vocabulary_.find(token);
  return it == vocabulary_.end() ? kNoToken : it->second;
}

std::uint32_t TermIndex::child(std::uint32_t node, std::uint32_t token) const {
  if (token == kNoToken) return kNoNode;
  auto it = children_.find((static_cast<std::uint64_t>(node) << 32) | token);
  return it == children_.end() ? kNoNode : it->second;
}

std::span<const TermIndex::Entry> TermIndex::entries_at(std::uint32_t node) const {
  const auto begin = node_entry_begin_[node];
  const auto end = node_entry_begin_[node + 1];
  return {entries_.data() + begin, end - begin};
}

std::span<const TermIndex::Entry> TermIndex::lookup(std::string_view phrase) const {
  const auto tokens = tokenize(phrase);
  if (tokens.empty()) return {};
  std::uint32_t node = kRoot;
  for (const auto& t : tokens) {
    node = child(node, token_id(t.text));
    if (node == kNoNode) return {};
  }
  return entries_at(node);
}

std::vector<Annotation> annotate_text(const TermIndex& index, std::string_view text) {
  const auto tokens = tokenize(text);
  const auto ids = token_ids(index, tokens);
  std::vector<Annotation> out;
  for (std::size_t first = 0; first < tokens.size(); ++first) {
    std::uint32_t node = TermIndex::kRoot;
    for (std::size_t last = first; last < tokens.size(); ++last) {
      node = index.child(node, ids[last]);
      if (node == TermIndex::kNoNode) break;
      for (const auto& entry : index.entries_at(node))
        out.push_back(make_annotation(index, entry, text, tokens, first, last));
    }
  }
  // Emission is already (start, end, ontology, class, type) ordered.
  return out;
}

std::vector<std::string> split_keywords(std::string_view raw) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    auto comma = raw.find(',', pos);
    if (comma == std::string_view::npos) comma = raw.size();
    auto piece = raw.substr(pos, comma - pos);
    const auto first = piece.find_first_not_of(" \t\r\n\f\v");
    if (first != std::string_view::npos) {
      const auto last = piece.find_last_not_of(" \t\r\n\f\v");
      out.emplace_back(piece.substr(first, last - first + 1));
    }
    pos = comma + 1;
  }
  return out;
}

KeywordInput tokenize_keywords(std::string_view raw) {
  KeywordInput input;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    auto comma = raw.find(',', pos);
    if (comma == std::string_view::npos) comma = raw.size();
    auto tokens = tokenize(raw.substr(pos, comma - pos));
    if (!tokens.empty()) {
      const std::size_t base = input.tokens.size();
      for (auto& t : tokens) {
        t.start_word_index += base;
        t.begin += pos;
        t.end += pos;
        input.tokens.push_back(std::move(t));
      }
      input.keywords.push_back(WordSpan{base, input.tokens.size() - 1});
    }
    pos = comma + 1;
  }
  return input;
}

std::vector<Annotation> annotate_keywords(const TermIndex& index, std::string_view raw,
                                          const KeywordInput& input) {
  const auto ids = token_ids(index, input.tokens);
  std::vector<Annotation> out;
  for (std::size_t k = 0; k < input.keywords.size(); ++k) {
    const auto span = input.keywords[k];
    std::uint32_t node = TermIndex::kRoot;
    for (std::size_t i = span.start; i <= span.end && node != TermIndex::kNoNode; ++i)
      node = index.child(node, ids[i]);
    if (node == TermIndex::kNoNode) continue;
    for (const auto& entry : index.entries_at(node)) {
      auto a = make_annotation(index, entry, raw, input.tokens, span.start, span.end);
      a.keyword_index = k;
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<Annotation> annotate_within_keywords(const TermIndex& index, std::string_view raw,
                                                 const KeywordInput& input) {
  const auto ids = token_ids(index, input.tokens);
  std::vector<Annotation> out;
  for (std::size_t k = 0; k < input.keywords.size(); ++k) {
    const auto span = input.keywords[k];
    for (std::size_t first = span.start; first <= span.end; ++first) {
      std::uint32_t node = TermIndex::kRoot;
      for (std::size_t last = first; last <= span.end; ++last) {
        node = index.child(node, ids[last]);
        if (node == TermIndex::kNoNode) break;
        for (const auto& entry : index.entries_at(node)) {
          auto a = make_annotation(index, entry, raw, input.tokens, first, last);
          a.keyword_index = k;
          out.push_back(std::move(a));
        }
      }
    }
  }
  return out;
}

std::vector<Annotation> annotate_keywords(const TermIndex& index,
                                          std::span<const std::string> keywords) {
  std::string joined;
  for (const auto& k : keywords) {
    if (!joined.empty()) joined += ", ";
    joined += k;
  }
  return annotate_keywords(index, joined, tokenize_keywords(joined));
}

}  // namespace ontorec
