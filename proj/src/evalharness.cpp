// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ontorec Authors

#include "ontorec/evalharness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "ontorec/error.hpp"
#include "ontorec/synthetic.hpp"

namespace ontorec {

namespace fs = std::filesystem;

namespace {

using nlohmann::ordered_json;

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, fmt::format("cannot read {}", path.string()));
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, fmt::format("cannot write {}", path.string()));
  out << content;
}

struct Dataset {
  std::string name;
  InputType input_type = InputType::kText;
  fs::path corpus;
  std::optional<fs::path> acceptance;
  std::vector<std::string> inputs;
};

std::vector<Dataset> discover(const fs::path& corpus_dir, const fs::path& fixtures_dir) {
  if (!fs::is_directory(fixtures_dir))
    throw Error(ErrorCode::kMissingFixtures, fmt::format("{} is not a directory", fixtures_dir.string()));

  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(fixtures_dir))
    if (entry.is_directory()) dirs.push_back(entry.path());
  std::sort(dirs.begin(), dirs.end());

  std::vector<Dataset> datasets;
  for (const auto& dir : dirs) {
    Dataset ds;
    ds.name = dir.filename().string();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    if (files.empty()) continue;
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      auto text = read_file(f);
      while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
      ds.inputs.push_back(std::move(text));
    }

    if (fs::exists(dir / "dataset.json")) {
      const auto meta = nlohmann::json::parse(read_file(dir / "dataset.json"), nullptr, false);
      if (!meta.is_object())
        throw Error(ErrorCode::kMalformedRecord, fmt::format("{}/dataset.json is not a JSON object", ds.name));
      ds.input_type = parse_input_type(meta.value("input_type", "text"));
    }
    ds.corpus = fs::exists(dir / "corpus.jsonl") ? dir / "corpus.jsonl" : corpus_dir / "corpus.jsonl";
    if (fs::exists(dir / "acceptance.json")) {
      ds.acceptance = dir / "acceptance.json";
    } else if (!corpus_dir.empty() && fs::exists(corpus_dir / "acceptance.json")) {
      ds.acceptance = corpus_dir / "acceptance.json";
    }
    datasets.push_back(std::move(ds));
  }
  if (datasets.empty())
    throw Error(ErrorCode::kMissingFixtures,
                fmt::format("no dataset with input files under {}", fixtures_dir.string()));
  return datasets;
}

struct Accumulator {
  std::vector<double> coverage;
  std::vector<double> seconds;
  std::size_t excluded = 0;

  AlgorithmStats finish() const {
    AlgorithmStats s;
    s.executions = coverage.size();
    s.excluded = excluded;
    if (!coverage.empty()) {
      double sum = 0.0;
      std::size_t low = 0;
      for (double c : coverage) {
        sum += c;
        if (c < kLowCoverageThreshold) ++low;
      }
      s.mean_coverage = sum / coverage.size();
      s.low_coverage_rate = 100.0 * low / coverage.size();
    }
    if (!seconds.empty()) {
      double sum = 0.0;
      for (double t : seconds) sum += t;
      s.mean_seconds = sum / seconds.size();
    }
    return s;
  }
};

void run_one(const Recommender& recommender, RecommendRequest request, Accumulator& acc,
             const RecommendResponse* fallback = nullptr, RecommendResponse* keep = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  auto response = recommender.recommend(request);
  acc.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  // A set ranking can be empty when fewer than two ontologies annotate the
  // input; the best single ontology then stands for the output.
  const RecommendResponse& scored = (response.ranking.empty() && fallback) ? *fallback : response;
  try {
    acc.coverage.push_back(top1_coverage(scored));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoAnnotatableWords) throw;
    ++acc.excluded;
  }
  if (keep) *keep = std::move(response);
}

ordered_json stats_json(const AlgorithmStats& s) {
  return ordered_json{{"executions", s.executions},
                      {"excluded", s.excluded},
                      {"mean_coverage", s.mean_coverage},
                      {"low_coverage_rate", s.low_coverage_rate},
                      {"mean_seconds", s.mean_seconds}};
}

// ---- bundled suite -------------------------------------------------------

struct FixtureClass {
  std::string id;
  std::string label;
  std::vector<std::string> synonyms;
  std::uint32_t level = 3;
  std::uint32_t definitions = 1;
  std::uint32_t properties = 5;
};

void append_ontology(std::string& jsonl, const std::string& acronym, std::vector<FixtureClass> classes,
                     std::size_t size) {
  for (std::size_t i = classes.size(); i < size; ++i)
    classes.push_back({fmt::format("{}:F{:03}", acronym, i), fmt::format("{} filler concept {}", acronym, i), {}});
  for (const auto& c : classes) {
    ordered_json line{{"ontology", acronym},       {"class_id", c.id},
                      {"pref_label", c.label},     {"synonyms", c.synonyms},
                      {"definitions", c.definitions}, {"properties", c.properties},
                      {"hierarchy_level", c.level}};
    jsonl += line.dump();
    jsonl += '\n';
  }
}

void write_dataset(const fs::path& dir, InputType type, const std::string& corpus,
                   const std::vector<std::string>& inputs, const std::string& acceptance = {}) {
  fs::create_directories(dir);
  write_file(dir / "dataset.json", fmt::format("{{\"input_type\": \"{}\"}}\n", to_string(type)));
  write_file(dir / "corpus.jsonl", corpus);
  if (!acceptance.empty()) write_file(dir / "acceptance.json", acceptance);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    write_file(dir / fmt::format("input_{:02}.txt", i + 1), inputs[i] + "\n");
}

std::vector<FixtureClass> labelled(const std::string& acronym, const std::vector<std::string>& labels,
                                   std::uint32_t level = 3) {
  std::vector<FixtureClass> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    out.push_back({fmt::format("{}:{:03}", acronym, i), labels[i], {}, level});
  return out;
}

void write_ehda_style(const fs::path& dir) {
  // Eleven distinct "eye" classes and four "skin" classes in a small
  // ontology, against a broader ontology covering six terms once each.
  std::vector<FixtureClass> ehda;
  for (int i = 1; i <= 11; ++i) ehda.push_back({fmt::format("EHDA:EYE{:02}", i), "eye", {}});
  for (int i = 1; i <= 4; ++i) ehda.push_back({fmt::format("EHDA:SKN{:02}", i), "skin", {}});
  std::string corpus;
  append_ontology(corpus, "BROAD",
                  labelled("BROAD", {"melanoma", "malignant tumor", "melanocytes", "skin", "bowel", "eye"}),
                  60);
  append_ontology(corpus, "EHDA", std::move(ehda), 20);
  write_dataset(dir, InputType::kText, corpus,
                {"Melanoma is a malignant tumor of melanocytes which are found predominantly in skin "
                 "but also in the bowel and the eye.",
                 "Ocular melanoma arises in the eye; cutaneous melanoma arises in the skin and may "
                 "spread to the bowel.",
                 "Examination of the eye and the skin revealed a malignant tumor."});
}

void write_multiword(const fs::path& dir) {
  std::string corpus;
  append_ontology(corpus, "HUPSON", labelled("HUPSON", {"cardiac", "structure"}, 2), 20);
  append_ontology(corpus, "NCIT", labelled("NCIT", {"embryonic", "cardiac", "structure"}, 2), 40);
  append_ontology(corpus, "SNOMEDCT",
                  {{"SNOMEDCT:ECS", "embryonic cardiac structure", {}, 5},
                   {"SNOMEDCT:HV", "heart valve", {}, 4}},
                  30);
  append_ontology(corpus, "SWEET",
                  {{"SWEET:S1", "structure", {}, 2}, {"SWEET:S2", "structure", {}, 2},
                   {"SWEET:S3", "structure", {}, 2}},
                  10);
  write_dataset(dir, InputType::kKeywords, corpus,
                {"embryonic cardiac structure", "embryonic cardiac structure, heart valve",
                 "structure, embryonic cardiac structure"});
}

void write_penicillin(const fs::path& dir) {
  std::string corpus;
  append_ontology(corpus, "O1",
                  {{"O1:PEN", "penicillin", {"benzylpenicillin", "penicillin g"}, 5, 1, 7},
                   {"O1:ABX", "antibacterial agent",
                    {"antibiotic", "antibacterial", "antimicrobial", "bactericide", "anti-infective",
                     "antibacterial drug", "antibiotic agent"},
                    3, 1, 16}},
                  50);
  append_ontology(corpus, "O2",
                  {{"O2:PEN", "penicillin drug", {"penicillin"}, 6, 0, 3},
                   {"O2:TON", "tonsillitis", {}, 12, 0, 2}},
                  20);
  write_dataset(dir, InputType::kText, corpus,
                {"Penicillin is an antibiotic used to treat tonsillitis.",
                 "Tonsillitis is often treated with penicillin or another antibiotic.",
                 "An antibiotic such as penicillin cures bacterial tonsillitis."},
                R"({"O1": {"present_in": ["UMLS"], "visits": {"BioPortal": 900}},)"
                R"( "O2": {"present_in": [], "visits": {"BioPortal": 100}}})"
                "\n");
}

void write_symptoms(const fs::path& dir) {
  const std::vector<std::string> symp_terms = {
      "headaches", "anemia",   "irritability",       "cellulitis", "lameness",
      "stiff neck", "backache", "abdominal pain",     "weight gain", "congestion",
      "sneezing",  "respiratory failure", "atrial fibrillation", "sleepy", "sweaty",
      "tired",     "weak"};
  std::string corpus;
  append_ontology(corpus, "MEDDRA",
                  labelled("MEDDRA", {"floppy head", "vascular alteration", "abdominal pain", "backache"}),
                  80);
  append_ontology(corpus, "SNOMEDCT",
                  labelled("SNOMEDCT", {"abnormal behavior", "facial tremor", "cellulitis", "anemia",
                                        "atrial fibrillation", "respiratory failure", "weight gain"},
                                       6),
                  300);
  append_ontology(corpus, "SYMP", labelled("SYMP", symp_terms, 4), 40);
  write_dataset(dir, InputType::kKeywords, corpus,
                {"headaches, anemia, abnormal behavior, irritability, floppy head, cellulitis, lameness, "
                 "stiff neck, facial tremor, backache, abdominal pain, weight gain, congestion, sneezing, "
                 "respiratory failure, vascular alteration, atrial fibrillation, sleepy, sweaty, tired, weak",
                 "anemia, facial tremor, floppy head, sneezing, tired",
                 "abnormal behavior, vascular alteration, weight gain, backache"});
}

void write_random_text(const fs::path& dir) {
  SyntheticCorpusOptions opts;
  opts.ontologies = 6;
  opts.classes_per_ontology = 300;
  opts.vocabulary = 600;
  opts.seed = 7;
  std::string corpus;
  for (const auto& c : synthetic_classes(opts)) {
    ordered_json line{{"ontology", c.ontology_acronym}, {"class_id", c.class_id},
                      {"pref_label", c.preferred_label}, {"synonyms", c.synonyms},
                      {"definitions", c.definitions_count}, {"properties", c.properties_count},
                      {"hierarchy_level", c.hierarchy_level}};
    corpus += line.dump();
    corpus += '\n';
  }
  std::vector<std::string> inputs;
  for (std::uint64_t s = 0; s < 5; ++s) inputs.push_back(synthetic_text(opts.vocabulary, 80, 100 + s));
  write_dataset(dir, InputType::kText, corpus, inputs);
}

}  // namespace

double top1_coverage(const RecommendResponse& response) {
  if (response.input_type == InputType::kKeywords) {
    if (response.keywords.empty()) throw Error(ErrorCode::kNoAnnotatableWords, "input has no keywords");
    if (response.ranking.empty()) return 0.0;
    std::set<WordSpan> selected;
    for (const auto& a : response.ranking.front().criterion_scores.selected_annotations)
      selected.insert(a.word_span);
    std::size_t covered = 0;
    for (const auto& k : response.keywords) covered += selected.count(k);
    return 100.0 * covered / response.keywords.size();
  }

  std::set<std::size_t> reachable;
  for (const auto& a : response.union_selection)
    for (auto w = a.word_span.start; w <= a.word_span.end; ++w) reachable.insert(w);
  if (reachable.empty() || response.ranking.empty())
    throw Error(ErrorCode::kNoAnnotatableWords, "no input word is annotatable");
  std::set<std::size_t> covered;
  for (const auto& a : response.ranking.front().criterion_scores.selected_annotations)
    for (auto w = a.word_span.start; w <= a.word_span.end; ++w) covered.insert(w);
  return std::min(100.0, 100.0 * covered.size() / reachable.size());
}

ExperimentReport run_experiment(const fs::path& corpus_dir, const fs::path& fixtures_dir,
                                const RecommenderConfig& config) {
  ExperimentReport report;
  for (const auto& ds : discover(corpus_dir, fixtures_dir)) {
    auto repository = load_repository(ds.corpus);
    auto acceptance = ds.acceptance ? load_acceptance(*ds.acceptance) : AcceptanceTable{};
    const Recommender recommender(std::move(repository), std::move(acceptance), config);

    DatasetReport dr;
    dr.name = ds.name;
    dr.input_type = ds.input_type;
    dr.inputs = ds.inputs.size();
    Accumulator v1, v2, sets;
    double length = 0.0;
    for (const auto& input : ds.inputs) {
      RecommendRequest request;
      request.input = input;
      request.input_type = ds.input_type;

      request.algorithm = Algorithm::kV1;
      run_one(recommender, request, v1);

      request.algorithm = Algorithm::kV2;
      RecommendResponse singles;
      run_one(recommender, request, v2, nullptr, &singles);
      length += ds.input_type == InputType::kText ? singles.tokens.size() : singles.keywords.size();

      request.output_type = OutputType::kSets;
      run_one(recommender, request, sets, &singles);
    }
    dr.mean_length = ds.inputs.empty() ? 0.0 : length / ds.inputs.size();
    dr.v1 = v1.finish();
    dr.v2 = v2.finish();
    dr.v2_sets = sets.finish();
    report.datasets.push_back(std::move(dr));
  }
  return report;
}

std::string report_table(const ExperimentReport& report) {
  fmt::memory_buffer out;
  for (const auto type : {InputType::kText, InputType::kKeywords}) {
    std::vector<const DatasetReport*> rows;
    for (const auto& d : report.datasets)
      if (d.input_type == type) rows.push_back(&d);
    if (rows.empty()) continue;

    fmt::format_to(std::back_inserter(out), "Summary of evaluation results for {} inputs\n",
                   to_string(type));
    fmt::format_to(std::back_inserter(out),
                   "{:<14} {:>11} | {:>8} {:>8} | {:>8} {:>8} {:>10} | {:>8} {:>8} {:>10}\n", "Dataset",
                   "Mean length", "<20% v1", "<20% v2", "Cov v1", "Cov v2", "Cov v2set", "ms v1",
                   "ms v2", "ms v2set");
    auto row = [&](const std::string& name, double len, const AlgorithmStats& a, const AlgorithmStats& b,
                   const AlgorithmStats& s) {
      fmt::format_to(std::back_inserter(out),
                     "{:<14} {:>11.1f} | {:>7.1f}% {:>7.1f}% | {:>7.1f}% {:>7.1f}% {:>9.1f}% | {:>8.3f} "
                     "{:>8.3f} {:>10.3f}\n",
                     name, len, a.low_coverage_rate, b.low_coverage_rate, a.mean_coverage,
                     b.mean_coverage, s.mean_coverage, 1e3 * a.mean_seconds, 1e3 * b.mean_seconds,
                     1e3 * s.mean_seconds);
    };
    AlgorithmStats m1, m2, ms;
    double mlen = 0.0;
    for (const auto* d : rows) {
      row(d->name, d->mean_length, d->v1, d->v2, d->v2_sets);
      mlen += d->mean_length;
      for (auto [dst, src] : {std::pair{&m1, &d->v1}, std::pair{&m2, &d->v2}, std::pair{&ms, &d->v2_sets}}) {
        dst->low_coverage_rate += src->low_coverage_rate;
        dst->mean_coverage += src->mean_coverage;
        dst->mean_seconds += src->mean_seconds;
      }
    }
    const double n = static_cast<double>(rows.size());
    for (auto* m : {&m1, &m2, &ms}) {
      m->low_coverage_rate /= n;
      m->mean_coverage /= n;
      m->mean_seconds /= n;
    }
    row("Mean", mlen / n, m1, m2, ms);
    std::size_t excluded = 0;
    for (const auto* d : rows) excluded += d->v2.excluded;
    if (excluded)
      fmt::format_to(std::back_inserter(out), "({} inputs with no annotatable words excluded)\n", excluded);
    out.push_back('\n');
  }
  return fmt::to_string(out);
}

std::string report_json(const ExperimentReport& report) {
  ordered_json datasets = ordered_json::array();
  for (const auto& d : report.datasets) {
    datasets.push_back(ordered_json{{"dataset", d.name},
                                    {"input_type", to_string(d.input_type)},
                                    {"inputs", d.inputs},
                                    {"mean_length", d.mean_length},
                                    {"v1", stats_json(d.v1)},
                                    {"v2", stats_json(d.v2)},
                                    {"v2_sets", stats_json(d.v2_sets)}});
  }
  return ordered_json{{"datasets", datasets}}.dump(2);
}

void write_bundled_suite(const fs::path& dir) {
  fs::create_directories(dir);
  write_ehda_style(dir / "ehda-style");
  write_multiword(dir / "multiword");
  write_penicillin(dir / "penicillin");
  write_symptoms(dir / "symptoms");
  write_random_text(dir / "random-text");
}

}  // namespace ontorec
