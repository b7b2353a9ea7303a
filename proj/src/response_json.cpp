// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/response_json.hpp"

#include <iterator>
#include <set>

#include <fmt/format.h>

#include "json.hpp"

namespace ontorec {

namespace {

using nlohmann::json;

[[noreturn]] void bad_request(const std::string& why) { throw Error(ErrorCode::kInvalidRequest, why); }

// Minimal streaming writer; keys are emitted in call order.
class JsonWriter {
 public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(std::string_view k) {
    separate();
    quoted(k);
    out_.push_back(':');
    after_key_ = true;
  }
  void string(std::string_view v) {
    separate();
    quoted(v);
  }
  void integer(long long v) {
    separate();
    fmt::format_to(std::back_inserter(out_), "{}", v);
  }
  void score(double v) {
    separate();
    fmt::format_to(std::back_inserter(out_), "{:.4f}", v);
  }

  std::string str() const { return fmt::to_string(out_); }

 private:
  void open(char c) {
    separate();
    out_.push_back(c);
    first_.push_back(true);
  }
  void close(char c) {
    out_.push_back(c);
    first_.pop_back();
  }
  void separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (first_.empty()) return;
    if (!first_.back()) out_.push_back(',');
    first_.back() = false;
  }
  void quoted(std::string_view s) {
    out_.push_back('"');
    for (const char ch : s) {
      const auto u = static_cast<unsigned char>(ch);
      switch (ch) {
        case '"': out_.append(std::string_view("\\\"")); break;
        case '\\': out_.append(std::string_view("\\\\")); break;
        case '\n': out_.append(std::string_view("\\n")); break;
        case '\r': out_.append(std::string_view("\\r")); break;
        case '\t': out_.append(std::string_view("\\t")); break;
        default:
          if (u < 0x20) {
            fmt::format_to(std::back_inserter(out_), "\\u{:04x}", u);
          } else {
            out_.push_back(ch);
          }
      }
    }
    out_.push_back('"');
  }

  fmt::memory_buffer out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

void write_annotation(JsonWriter& w, const Annotation& a, const OntologyRepository& repository,
                      const ScoringConstants& c) {
  w.begin_object();
  w.key("ontology");
  w.string(a.ontology_acronym);
  w.key("class_id");
  w.string(a.class_id);
  w.key("pref_label");
  w.string(repository.find_class(a.ontology_acronym, a.class_id).preferred_label);
  w.key("match_type");
  w.string(match_type_name(a.match_type));
  w.key("text");
  w.string(a.matched_text);
  w.key("from_word");
  w.integer(static_cast<long long>(a.word_span.start));
  w.key("to_word");
  w.integer(static_cast<long long>(a.word_span.end));
  w.key("from");
  w.integer(static_cast<long long>(a.text_begin));
  w.key("to");
  w.integer(static_cast<long long>(a.text_end));
  w.key("words");
  w.integer(static_cast<long long>(a.annotated_words()));
  w.key("score");
  w.score(annotation_score_v2(a, c));
  if (a.keyword_index) {
    w.key("keyword");
    w.integer(static_cast<long long>(*a.keyword_index));
  }
  w.end_object();
}

double weight_or(const json& body, const char* key, double fallback) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_number()) bad_request(fmt::format("\"{}\" must be a number", key));
  return it->get<double>();
}

std::string_view string_field(const json& body, const char* key, std::string_view fallback) {
  auto it = body.find(key);
  if (it == body.end() || it->is_null()) return fallback;
  if (!it->is_string()) bad_request(fmt::format("\"{}\" must be a string", key));
  return it->get_ref<const std::string&>();
}

}  // namespace

RecommendRequest parse_request(std::string_view body_text, const Weights& default_weights) {
  json body;
  try {
    body = json::parse(body_text);
  } catch (const json::parse_error& e) {
    bad_request(fmt::format("request body is not valid JSON ({})", e.what()));
  }
  if (!body.is_object()) bad_request("request body must be a JSON object");

  static const std::set<std::string> kKnown = {"input",     "input_type", "output_type",
                                               "wc",        "wa",         "wd",
                                               "ws",        "max_elements_set",
                                               "ontologies", "algorithm"};
  for (const auto& [k, v] : body.items())
    if (!kKnown.count(k)) bad_request(fmt::format("unknown request field \"{}\"", k));

  RecommendRequest req;
  auto input = body.find("input");
  if (input == body.end() || !input->is_string()) bad_request("\"input\" must be a string");
  req.input = input->get<std::string>();
  req.input_type = parse_input_type(string_field(body, "input_type", "text"));
  req.output_type = parse_output_type(string_field(body, "output_type", "ontologies"));
  req.algorithm = parse_algorithm(string_field(body, "algorithm", "v2"));

  if (body.contains("wc") || body.contains("wa") || body.contains("wd") || body.contains("ws")) {
    req.weights = Weights{weight_or(body, "wc", default_weights.coverage),
                          weight_or(body, "wa", default_weights.acceptance),
                          weight_or(body, "wd", default_weights.detail),
                          weight_or(body, "ws", default_weights.specialization)};
  }
  if (auto it = body.find("max_elements_set"); it != body.end() && !it->is_null()) {
    if (!it->is_number_integer()) bad_request("\"max_elements_set\" must be an integer");
    const auto v = it->get<std::int64_t>();
    req.max_set_size = v < 0 ? std::size_t{0} : static_cast<std::size_t>(v);
  }
  if (auto it = body.find("ontologies"); it != body.end() && !it->is_null()) {
    if (it->is_string()) {
      req.ontologies = split_keywords(it->get<std::string>());
    } else if (it->is_array()) {
      for (const auto& o : *it) {
        if (!o.is_string()) bad_request("\"ontologies\" entries must be strings");
        req.ontologies.push_back(o.get<std::string>());
      }
    } else {
      bad_request("\"ontologies\" must be an array of acronyms");
    }
  }
  return req;
}

std::string to_json(const RecommendResponse& response, const OntologyRepository& repository,
                    const ScoringConstants& c) {
  JsonWriter w;
  w.begin_object();
  w.key("algorithm");
  w.string(to_string(response.algorithm));
  w.key("input_type");
  w.string(to_string(response.input_type));
  w.key("output_type");
  w.string(to_string(response.output_type));
  w.key("word_count");
  w.integer(static_cast<long long>(response.tokens.size()));
  if (response.input_type == InputType::kKeywords) {
    w.key("keyword_count");
    w.integer(static_cast<long long>(response.keywords.size()));
  }
  w.key("annotation_total");
  w.integer(static_cast<long long>(response.annotation_total));
  w.key("coverage_normalizer");
  w.score(response.coverage_normalizer);
  w.key("ranking");
  w.begin_array();
  long long position = 0;
  for (const auto& e : response.ranking) {
    const auto& s = e.criterion_scores;
    w.begin_object();
    w.key("position");
    w.integer(++position);
    w.key("ontologies");
    w.begin_array();
    for (const auto& m : e.members) w.string(m);
    w.end_array();
    w.key("final_score");
    w.score(e.final_score);
    w.key("scores");
    w.begin_object();
    w.key("coverage");
    w.score(s.coverage);
    w.key("acceptance");
    w.score(s.acceptance);
    w.key("detail");
    w.score(s.detail);
    w.key("specialization");
    w.score(s.specialization);
    w.end_object();
    w.key("display_scores");
    w.begin_object();
    w.key("coverage");
    w.integer(e.display_scores.coverage);
    w.key("acceptance");
    w.integer(e.display_scores.acceptance);
    w.key("detail");
    w.integer(e.display_scores.detail);
    w.key("specialization");
    w.integer(e.display_scores.specialization);
    w.end_object();
    w.key("raw");
    w.begin_object();
    w.key("coverage");
    w.score(s.raw_coverage_sum);
    w.key("specialization");
    w.score(s.raw_specialization);
    if (e.legacy_score) {
      w.key("legacy");
      w.score(*e.legacy_score);
    }
    w.end_object();
    w.key("annotation_count");
    w.integer(static_cast<long long>(e.annotation_count));
    if (!e.contributions.empty()) {
      w.key("contributions");
      w.begin_array();
      for (const auto& m : e.contributions) {
        w.begin_object();
        w.key("ontology");
        w.string(m.acronym);
        w.key("fraction");
        w.score(m.fraction);
        w.key("annotation_count");
        w.integer(static_cast<long long>(m.annotation_count));
        w.end_object();
      }
      w.end_array();
    }
    w.key("annotations");
    w.begin_array();
    for (const auto& a : s.selected_annotations) write_annotation(w, a, repository, c);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string to_table(const RecommendResponse& response) {
  fmt::memory_buffer out;
  const bool sets = response.output_type == OutputType::kSets;
  fmt::format_to(std::back_inserter(out), "{:>4}  {:<32} {:>8} {:>9} {:>11} {:>7} {:>15} {:>11}\n",
                 "POS.", sets ? "ONTOLOGIES" : "ONTOLOGY", "FINAL", "COVERAGE", "ACCEPTANCE",
                 "DETAIL", "SPECIALIZATION", "ANNOTATIONS");
  std::size_t position = 0;
  for (const auto& e : response.ranking) {
    std::string names;
    for (const auto& m : e.members) {
      if (!names.empty()) names += ' ';
      names += m;
    }
    fmt::format_to(std::back_inserter(out), "{:>4}  {:<32} {:>8.4f} {:>9} {:>11} {:>7} {:>15} {:>11}\n",
                   ++position, names, e.final_score, e.display_scores.coverage,
                   e.display_scores.acceptance, e.display_scores.detail,
                   e.display_scores.specialization, e.annotation_count);
  }
  if (response.ranking.empty()) fmt::format_to(std::back_inserter(out), "(no ontology annotates the input)\n");
  return fmt::to_string(out);
}

std::string error_json(ErrorCode code, std::string_view message) {
  JsonWriter w;
  w.begin_object();
  w.key("error");
  w.string(error_name(code));
  w.key("message");
  w.string(message);
  w.end_object();
  return w.str();
}

}  // namespace ontorec
