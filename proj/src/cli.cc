// Copyright 2026 The entity-faithful Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faithful/cli.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "faithful/annotator.h"
#include "faithful/corpus_io.h"
#include "faithful/filter.h"
#include "faithful/metrics.h"
#include "faithful/parallel.h"
#include "faithful/report.h"
#include "faithful/stopwords.h"
#include "faithful/training_prep.h"

namespace faithful {

using nlohmann::json;

namespace {

constexpr std::size_t kBatchSize = 256;

// Fatal errors raised by the commands themselves.
class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Usage problems detected after CLI11 has parsed successfully.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusArgs {
  std::string dataset;
  std::string annotations;
  bool strict = false;
  bool self_annotate = false;
  std::string annotator;
  std::string stopwords;
  std::size_t workers = 1;
};

void AddCorpusOptions(CLI::App *cmd, CorpusArgs *args) {
  cmd->add_option("--dataset", args->dataset, "Dataset JSONL (id, source, summary, hypothesis)")->required();
  cmd->add_option("--annotations", args->annotations, "Annotation JSONL produced by `annotate`");
  cmd->add_flag("--strict", args->strict, "Treat any rejected line as fatal");
  cmd->add_flag("--self-annotate", args->self_annotate,
                "Run the configured annotator when --annotations is not given");
  cmd->add_option("--annotator", args->annotator, "Annotator command (default: $ENTITY_FAITHFUL_ANNOTATOR)");
  cmd->add_option("--stopwords", args->stopwords, "Stopword file, one word per line (default: built-in list)");
  cmd->add_option("--workers", args->workers, "Worker threads")->check(CLI::PositiveNumber);
}

// Output path or "-" for the command's stdout stream.
class Output {
 public:
  Output(const std::string &path, std::ostream &fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw CliError("cannot write " + path);
    stream_ = file_.get();
  }
  std::ostream &operator*() { return *stream_; }
  void Close(const std::string &what) {
    stream_->flush();
    if (!*stream_) throw CliError("failed writing " + what);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_ = nullptr;
};

class TempFile {
 public:
  explicit TempFile(const std::string &stem) {
    path_ = (std::filesystem::temp_directory_path() /
             (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++) + ".jsonl"))
                .string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile &) = delete;
  TempFile &operator=(const TempFile &) = delete;
  const std::string &path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

// Owns everything a corpus-reading command needs.
class Corpus {
 public:
  Corpus(const CorpusArgs &args, std::ostream &err) : err_(&err) {
    if (!args.stopwords.empty()) {
      stopwords_ = StopwordList::FromFile(args.stopwords);
      matcher_ = Matcher(stopwords_);
    }
    std::string annotations = args.annotations;
    if (annotations.empty()) {
      if (!args.self_annotate) {
        throw UsageError("--annotations is required; produce it with the `annotate` subcommand");
      }
      auto command = ResolveAnnotatorCommand(args.annotator.empty() ? std::nullopt
                                                                    : std::optional<std::string>(args.annotator));
      if (!command) {
        throw CliError("no annotations file and no annotator configured; run the `annotate` subcommand first "
                       "(or set --annotator / " +
                       std::string(kAnnotatorEnvVar) + ")");
      }
      temp_ = std::make_unique<TempFile>("entity-faithful-annotations");
      const int status = RunAnnotator(*command, args.dataset, temp_->path());
      if (status != 0) throw CliError("annotator exited with status " + std::to_string(status));
      annotations = temp_->path();
    }
    LoadOptions options;
    options.strict = args.strict;
    options.diagnostics = &err;
    reader_ = std::make_unique<CorpusReader>(args.dataset, annotations, options);
  }

  const Matcher &matcher() const { return matcher_; }

  // Next batch of up to kBatchSize examples; empty at end of input.
  std::vector<Example> NextBatch() {
    std::vector<Example> batch;
    while (batch.size() < kBatchSize) {
      auto ex = reader_->Next();
      if (!ex) break;
      batch.push_back(std::move(*ex));
    }
    return batch;
  }

  void Summarize() const {
    const LoadStats &s = reader_->stats();
    *err_ << "loaded " << s.examples_loaded << " of " << s.records_read << " records";
    if (s.records_rejected > 0) *err_ << ", rejected " << s.records_rejected;
    if (s.annotation_lines_rejected > 0) *err_ << ", bad annotation lines " << s.annotation_lines_rejected;
    if (s.dropped_entity_labels > 0) *err_ << ", dropped " << s.dropped_entity_labels << " non-whitelisted entities";
    if (s.unknown_annotation_ids > 0) *err_ << ", " << s.unknown_annotation_ids << " unknown annotation ids";
    if (s.validation_warnings > 0) *err_ << ", " << s.validation_warnings << " validation warnings";
    *err_ << '\n';
  }

 private:
  std::ostream *err_;
  StopwordList stopwords_;
  Matcher matcher_;
  std::unique_ptr<TempFile> temp_;
  std::unique_ptr<CorpusReader> reader_;
};

// score ---------------------------------------------------------------------

struct ScoreArgs {
  CorpusArgs corpus;
  std::string out = "-";
  std::string per_example;
  bool filter_test = false;
};

int RunScore(const ScoreArgs &args, std::ostream &out, std::ostream &err) {
  Corpus corpus(args.corpus, err);
  Output report_out(args.out, out);
  std::optional<Output> per_example;
  if (!args.per_example.empty()) per_example.emplace(args.per_example, out);

  CorpusAggregator agg;
  FilterStatsAccumulator filter_stats;
  for (auto batch = corpus.NextBatch(); !batch.empty(); batch = corpus.NextBatch()) {
    struct Scored {
      std::optional<EntityCounts> counts;
      FilterOutcome outcome;
    };
    auto scored = ParallelMap(std::span<const Example>(batch), args.corpus.workers, [&](const Example &ex) {
      Scored s;
      if (!args.filter_test) {
        s.counts = CountMatches(ex, corpus.matcher());
        return s;
      }
      s.outcome = FilterExample(ex, corpus.matcher());
      FilterOutcome copy = s.outcome;
      if (auto kept = ApplyFilterOutcome(ex, std::move(copy))) s.counts = CountMatches(*kept, corpus.matcher());
      return s;
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (args.filter_test) filter_stats.Add(batch[i], scored[i].outcome);
      if (!scored[i].counts) continue;
      agg.Add(*scored[i].counts);
      if (per_example) {
        json line = {{"id", batch[i].id},
                     {"counts", CountsToJson(*scored[i].counts)},
                     {"metrics", ExampleMetricsToJson(ComputeMetrics(*scored[i].counts))}};
        **per_example << JsonLine(line) << '\n';
      }
    }
  }
  corpus.Summarize();
  if (args.filter_test) {
    const FilterStats fs = filter_stats.Finish();
    err << "filtered test set: " << fs.examples_after << " of " << fs.examples_before << " examples kept\n";
  }
  if (agg.size() == 0) throw CliError("no examples to score");
  *report_out << RenderJson(ReportToJson(agg.Finish()));
  report_out.Close(args.out);
  if (per_example) per_example->Close(args.per_example);
  return kExitOk;
}

// stats ---------------------------------------------------------------------

struct StatsArgs {
  CorpusArgs corpus;
  std::string out = "-";
};

int RunStats(const StatsArgs &args, std::ostream &out, std::ostream &err) {
  Corpus corpus(args.corpus, err);
  Output stats_out(args.out, out);
  GoldStatsAccumulator acc;
  for (auto batch = corpus.NextBatch(); !batch.empty(); batch = corpus.NextBatch()) {
    auto counts = ParallelMap(std::span<const Example>(batch), args.corpus.workers,
                              [&](const Example &ex) { return CountGoldMatches(ex, corpus.matcher()); });
    for (const EntityCounts &c : counts) acc.Add(c);
  }
  corpus.Summarize();
  const GoldCorpusStats stats = acc.Finish();
  *stats_out << RenderJson(GoldStatsToJson(stats));
  stats_out.Close(args.out);
  return kExitOk;
}

// filter --------------------------------------------------------------------

struct FilterArgs {
  CorpusArgs corpus;
  std::string out_dataset;
  std::string out_annotations;
  std::string stats_out = "-";
};

int RunFilter(const FilterArgs &args, std::ostream &out, std::ostream &err) {
  Corpus corpus(args.corpus, err);
  Output dataset_out(args.out_dataset, out);
  Output annotations_out(args.out_annotations, out);
  CorpusWriter writer(*dataset_out, *annotations_out);
  FilterStatsAccumulator acc;
  for (auto batch = corpus.NextBatch(); !batch.empty(); batch = corpus.NextBatch()) {
    auto outcomes = ParallelMap(std::span<const Example>(batch), args.corpus.workers,
                                [&](const Example &ex) { return FilterExample(ex, corpus.matcher()); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      acc.Add(batch[i], outcomes[i]);
      if (auto kept = ApplyFilterOutcome(std::move(batch[i]), std::move(outcomes[i]))) writer.Write(*kept);
    }
  }
  corpus.Summarize();
  const FilterStats stats = acc.Finish();
  if (stats.examples_before == 0) throw CliError("cannot filter an empty dataset");
  dataset_out.Close(args.out_dataset);
  annotations_out.Close(args.out_annotations);
  Output stats_out(args.stats_out, out);
  *stats_out << RenderJson(FilterStatsToJson(stats));
  stats_out.Close(args.stats_out);
  return kExitOk;
}

// prep-bio / prep-jaens -----------------------------------------------------

struct PrepArgs {
  CorpusArgs corpus;
  std::string out;
  std::string meta;
  std::string dataset_name;
  std::optional<double> alpha;
  bool no_dedupe = false;
  JaensConfig jaens;
};

void AddPrepOptions(CLI::App *cmd, PrepArgs *args) {
  AddCorpusOptions(cmd, &args->corpus);
  cmd->add_option("--out", args->out, "Output JSONL")->required();
  cmd->add_option("--meta", args->meta, "Metadata JSON (encoding, JAENS config, alpha)");
  cmd->add_option("--dataset-name", args->dataset_name, "newsroom, cnndm or xsum; selects the default alpha");
  cmd->add_option("--alpha", args->alpha, "Multi-task loss weight recorded in the metadata");
  cmd->add_flag("--no-dedupe", args->no_dedupe, "Keep repeated salient entities");
}

void AddJaensFormatOptions(CLI::App *cmd, JaensConfig *config) {
  cmd->add_option("--boundary-token", config->boundary_token, "Token between entities and summary");
  cmd->add_option("--entity-delimiter", config->entity_delimiter, "Separator between entities");
}

void WriteMeta(const PrepArgs &args, const JaensConfig &config, std::ostream &err) {
  TrainingPrepMeta meta = TrainingPrepMeta::ForDataset(args.dataset_name);
  if (args.alpha) meta.alpha = *args.alpha;
  std::optional<std::string> warning;
  try {
    warning = meta.Check();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (warning) err << "warning: " << *warning << '\n';
  if (!args.meta.empty()) WriteJsonFile(args.meta, PrepMetaToJson(config, meta));
}

int RunPrepBio(const PrepArgs &args, std::ostream &out, std::ostream &err) {
  JaensConfig config = args.jaens;
  config.dedupe = !args.no_dedupe;
  WriteMeta(args, config, err);
  Corpus corpus(args.corpus, err);
  Output labels_out(args.out, out);
  std::uint64_t omitted = 0;
  for (auto batch = corpus.NextBatch(); !batch.empty(); batch = corpus.NextBatch()) {
    struct Prepared {
      BioLabelSequence labels;
      std::uint64_t omitted = 0;
    };
    auto prepared = ParallelMap(std::span<const Example>(batch), args.corpus.workers, [&](const Example &ex) {
      SalientEntitySet salient = SalientEntities(ex, config.dedupe, corpus.matcher());
      return Prepared{BioLabels(ex, salient), salient.omitted_unmatched};
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      omitted += prepared[i].omitted;
      json labels = json::array();
      for (BioLabel l : prepared[i].labels) labels.push_back(static_cast<int>(l));
      *labels_out << JsonLine({{"id", batch[i].id}, {"labels", std::move(labels)}}) << '\n';
    }
  }
  corpus.Summarize();
  if (omitted > 0) err << "warning: " << omitted << " gold entities had no source match and were not labelled\n";
  labels_out.Close(args.out);
  return kExitOk;
}

int RunPrepJaens(const PrepArgs &args, std::ostream &out, std::ostream &err) {
  JaensConfig config = args.jaens;
  config.dedupe = !args.no_dedupe;
  if (config.boundary_token.empty()) throw UsageError("--boundary-token must not be empty");
  WriteMeta(args, config, err);
  Corpus corpus(args.corpus, err);
  Output targets_out(args.out, out);
  std::uint64_t omitted = 0;
  for (auto batch = corpus.NextBatch(); !batch.empty(); batch = corpus.NextBatch()) {
    struct Prepared {
      std::string target;
      std::uint64_t omitted = 0;
    };
    auto prepared = ParallelMap(std::span<const Example>(batch), args.corpus.workers, [&](const Example &ex) {
      SalientEntitySet salient = SalientEntities(ex, config.dedupe, corpus.matcher());
      try {
        return Prepared{BuildJaensTarget(ex, salient, config), salient.omitted_unmatched};
      } catch (const JaensError &e) {
        throw CliError("id \"" + ex.id + "\": " + e.what());
      }
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      omitted += prepared[i].omitted;
      *targets_out << JsonLine({{"id", batch[i].id}, {"target", prepared[i].target}}) << '\n';
    }
  }
  corpus.Summarize();
  if (omitted > 0) err << "warning: " << omitted << " gold entities had no source match and were left out\n";
  targets_out.Close(args.out);
  return kExitOk;
}

// parse-jaens ---------------------------------------------------------------

struct ParseJaensArgs {
  std::string input;
  std::string text;
  std::string out = "-";
  JaensConfig jaens;
};

json ParsedToJson(const ParsedJaens &p) {
  return {{"entities", p.entities}, {"summary", p.summary}, {"boundary_found", p.boundary_found}};
}

int RunParseJaens(const ParseJaensArgs &args, std::ostream &out, std::ostream &err) {
  if (args.input.empty() == args.text.empty()) throw UsageError("give exactly one of --input or --text");
  Output parsed_out(args.out, out);
  if (!args.text.empty()) {
    const ParsedJaens p = ParseJaensOutput(args.text, args.jaens);
    if (!p.boundary_found) err << "warning: boundary token not found; whole text taken as summary\n";
    *parsed_out << JsonLine(ParsedToJson(p)) << '\n';
    parsed_out.Close(args.out);
    return kExitOk;
  }
  std::ifstream in(args.input, std::ios::binary);
  if (!in) throw CliError("cannot open " + args.input);
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t missing = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception &e) {
      throw CliError(args.input + ":" + std::to_string(line_no) + ": " + e.what());
    }
    const char *key = record.contains("target") ? "target" : "text";
    if (!record.is_object() || !record.contains(key) || !record[key].is_string()) {
      throw CliError(args.input + ":" + std::to_string(line_no) + ": expected a \"text\" or \"target\" string");
    }
    const ParsedJaens p = ParseJaensOutput(record[key].get<std::string>(), args.jaens);
    if (!p.boundary_found) ++missing;
    json result = ParsedToJson(p);
    if (record.contains("id")) result["id"] = record["id"];
    *parsed_out << JsonLine(result) << '\n';
  }
  if (missing > 0) err << "warning: " << missing << " outputs had no boundary token; whole text taken as summary\n";
  parsed_out.Close(args.out);
  return kExitOk;
}

// annotate ------------------------------------------------------------------

struct AnnotateArgs {
  std::string dataset;
  std::string out;
  std::string annotator;
  bool strict = false;
};

int RunAnnotate(const AnnotateArgs &args, std::ostream &err) {
  auto command =
      ResolveAnnotatorCommand(args.annotator.empty() ? std::nullopt : std::optional<std::string>(args.annotator));
  if (!command) {
    throw UsageError("no annotator configured; pass --annotator or set " + std::string(kAnnotatorEnvVar));
  }
  const auto records = LoadDatasetRecords(args.dataset);
  const int status = RunAnnotator(*command, args.dataset, args.out);
  if (status != 0) throw CliError("annotator exited with status " + std::to_string(status));

  std::ifstream in(args.out, std::ios::binary);
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t good = 0;
  std::uint64_t bad = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      ParseAnnotationRecord(json::parse(line));
      ++good;
    } catch (const std::exception &e) {
      ++bad;
      const std::string msg = args.out + ":" + std::to_string(line_no) + ": " + e.what();
      if (args.strict) throw CliError(msg);
      err << msg << '\n';
    }
  }
  err << "annotated " << records.size() << " records: " << good << " annotation lines";
  if (bad > 0) err << ", " << bad << " malformed";
  err << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Entity-level factual consistency metrics and training-data preparation for summarization"};
  app.name("entity-faithful");
  app.require_subcommand(1);

  AnnotateArgs annotate;
  auto *annotate_cmd = app.add_subcommand("annotate", "Run the external annotator over a dataset");
  annotate_cmd->add_option("--dataset", annotate.dataset, "Dataset JSONL")->required();
  annotate_cmd->add_option("--out", annotate.out, "Annotation JSONL to write")->required();
  annotate_cmd->add_option("--annotator", annotate.annotator, "Annotator command");
  annotate_cmd->add_flag("--strict", annotate.strict, "Fail on malformed annotator output");

  ScoreArgs score;
  auto *score_cmd = app.add_subcommand("score", "Entity metrics of hypotheses against sources and gold summaries");
  AddCorpusOptions(score_cmd, &score.corpus);
  score_cmd->add_option("--out", score.out, "Report JSON (default stdout)");
  score_cmd->add_option("--per-example", score.per_example, "Per-example counts and metrics JSONL");
  score_cmd->add_flag("--filter-test", score.filter_test, "Entity-filter the corpus before scoring");

  StatsArgs stats;
  auto *stats_cmd = app.add_subcommand("stats", "Gold-summary entity statistics");
  AddCorpusOptions(stats_cmd, &stats.corpus);
  stats_cmd->add_option("--out", stats.out, "Stats JSON (default stdout)");

  FilterArgs filter;
  auto *filter_cmd = app.add_subcommand("filter", "Entity-based filtering of gold summaries");
  AddCorpusOptions(filter_cmd, &filter.corpus);
  filter_cmd->add_option("--out-dataset", filter.out_dataset, "Filtered dataset JSONL")->required();
  filter_cmd->add_option("--out-annotations", filter.out_annotations, "Filtered annotation JSONL")->required();
  filter_cmd->add_option("--stats-out", filter.stats_out, "Filter stats JSON (default stdout)");

  PrepArgs bio;
  auto *bio_cmd = app.add_subcommand("prep-bio", "BIO labels of summary-worthy source entities");
  AddPrepOptions(bio_cmd, &bio);

  PrepArgs jaens;
  auto *jaens_cmd = app.add_subcommand("prep-jaens", "Joint entity + summary target sequences");
  AddPrepOptions(jaens_cmd, &jaens);
  AddJaensFormatOptions(jaens_cmd, &jaens.jaens);

  ParseJaensArgs parse;
  auto *parse_cmd = app.add_subcommand("parse-jaens", "Split generated joint outputs into entities and summary");
  parse_cmd->add_option("--input", parse.input, "JSONL with \"text\" or \"target\" per line");
  parse_cmd->add_option("--text", parse.text, "A single output string");
  parse_cmd->add_option("--out", parse.out, "Output JSONL (default stdout)");
  AddJaensFormatOptions(parse_cmd, &parse.jaens);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("entity-faithful");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*annotate_cmd) return RunAnnotate(annotate, err);
    if (*score_cmd) return RunScore(score, out, err);
    if (*stats_cmd) return RunStats(stats, out, err);
    if (*filter_cmd) return RunFilter(filter, out, err);
    if (*bio_cmd) return RunPrepBio(bio, out, err);
    if (*jaens_cmd) return RunPrepJaens(jaens, out, err);
    if (*parse_cmd) return RunParseJaens(parse, out, err);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFatal;
  }
  return kExitUsage;
}

int RunCli(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return RunCli(args, std::cout, std::cerr);
}

}  // namespace faithful
