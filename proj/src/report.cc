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

#include "faithful/report.h"

#include <fstream>
#include <stdexcept>

#include "faithful/stopwords.h"

namespace faithful {

using nlohmann::json;

namespace {

json Value(const MetricValue &v) { return v ? json(*v) : json(nullptr); }

json Percent(const MetricValue &v) { return v ? json(PercentOneDecimal(*v)) : json(nullptr); }

json ExactPercent(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? json(nullptr) : json(PercentOneDecimal(num, den));
}

MetricValue ReadValue(const json &j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

json CountsToJson(const EntityCounts &c) {
  return {{"n_h", c.n_h}, {"n_t", c.n_t}, {"n_h_in_s", c.n_h_in_s}, {"n_h_in_t", c.n_h_in_t}, {"n_t_in_s", c.n_t_in_s}};
}

json ReportToJson(const MetricReport &r) {
  const EntityCounts &c = r.counts;
  // Micro percentages of the three plain ratios are rounded from the exact
  // counts rather than from the double.
  json metrics = {
      {"prec_s",
       {{"macro", Value(r.prec_s.macro)},
        {"micro", Value(r.prec_s.micro)},
        {"macro_pct", Percent(r.prec_s.macro)},
        {"micro_pct", ExactPercent(c.n_h_in_s, c.n_h)}}},
      {"prec_t",
       {{"macro", Value(r.prec_t.macro)},
        {"micro", Value(r.prec_t.micro)},
        {"macro_pct", Percent(r.prec_t.macro)},
        {"micro_pct", ExactPercent(c.n_h_in_t, c.n_h)}}},
      {"recall_t",
       {{"macro", Value(r.recall_t.macro)},
        {"micro", Value(r.recall_t.micro)},
        {"macro_pct", Percent(r.recall_t.macro)},
        {"micro_pct", ExactPercent(c.n_h_in_t, c.n_t)}}},
      {"f1_t",
       {{"macro", Value(r.f1_t.macro)},
        {"micro", Value(r.f1_t.micro)},
        {"macro_pct", Percent(r.f1_t.macro)},
        {"micro_pct", Percent(r.f1_t.micro)}}},
  };
  json skipped = {{"prec_s", r.examples_skipped.prec_s},
                  {"prec_t", r.examples_skipped.prec_t},
                  {"recall_t", r.examples_skipped.recall_t},
                  {"f1_t", r.examples_skipped.f1_t}};
  return {{"counts", CountsToJson(c)},
          {"metrics", std::move(metrics)},
          {"examples_total", r.examples_total},
          {"examples_skipped", std::move(skipped)}};
}

MetricReport ReportFromJson(const json &j) {
  MetricReport r;
  const json &c = j.at("counts");
  r.counts.n_h = c.at("n_h").get<std::uint64_t>();
  r.counts.n_t = c.at("n_t").get<std::uint64_t>();
  r.counts.n_h_in_s = c.at("n_h_in_s").get<std::uint64_t>();
  r.counts.n_h_in_t = c.at("n_h_in_t").get<std::uint64_t>();
  r.counts.n_t_in_s = c.at("n_t_in_s").get<std::uint64_t>();
  const json &m = j.at("metrics");
  auto pair = [&m](const char *key) {
    return MetricPair{ReadValue(m.at(key).at("macro")), ReadValue(m.at(key).at("micro"))};
  };
  r.prec_s = pair("prec_s");
  r.prec_t = pair("prec_t");
  r.recall_t = pair("recall_t");
  r.f1_t = pair("f1_t");
  r.examples_total = j.at("examples_total").get<std::uint64_t>();
  const json &s = j.at("examples_skipped");
  r.examples_skipped.prec_s = s.at("prec_s").get<std::uint64_t>();
  r.examples_skipped.prec_t = s.at("prec_t").get<std::uint64_t>();
  r.examples_skipped.recall_t = s.at("recall_t").get<std::uint64_t>();
  r.examples_skipped.f1_t = s.at("f1_t").get<std::uint64_t>();
  return r;
}

json ExampleMetricsToJson(const ExampleMetrics &m) {
  return {{"prec_s", Value(m.prec_s)}, {"prec_t", Value(m.prec_t)}, {"recall_t", Value(m.recall_t)},
          {"f1_t", Value(m.f1_t)}};
}

json GoldStatsToJson(const GoldCorpusStats &s) {
  return {{"examples", s.examples},
          {"n_t", s.n_t},
          {"n_t_in_s", s.n_t_in_s},
          {"avg_n_t", s.avg_n_t},
          {"avg_n_t_in_s", s.avg_n_t_in_s},
          {"prec_s", Value(s.prec_s)},
          {"prec_s_pct", ExactPercent(s.n_t_in_s, s.n_t)}};
}

json FilterStatsToJson(const FilterStats &s) {
  auto opt = [](const std::optional<double> &v) { return v ? json(*v) : json(nullptr); };
  return {{"examples_before", s.examples_before},
          {"examples_after", s.examples_after},
          {"examples_removed", s.examples_before - s.examples_after},
          {"removed_pct", ExactPercent(s.examples_before - s.examples_after, s.examples_before)},
          {"sentences_before", s.sentences_before},
          {"sentences_after", s.sentences_after},
          {"avg_sentences_before", opt(s.avg_sentences_before)},
          {"avg_sentences_after", opt(s.avg_sentences_after)}};
}

json PrepMetaToJson(const JaensConfig &config, const TrainingPrepMeta &meta) {
  return {{"bio_encoding", {{"B", 0}, {"I", 1}, {"O", 2}}},
          {"jaens",
           {{"boundary_token", config.boundary_token},
            {"entity_delimiter", config.entity_delimiter},
            {"dedupe", config.dedupe}}},
          {"training", {{"alpha", meta.alpha}, {"dataset_name", meta.dataset_name}}},
          {"stopwords_version", std::string(kStopwordsVersion)}};
}

std::string RenderJson(const json &j) { return j.dump(2, ' ', false, json::error_handler_t::strict) + "\n"; }

void WriteJsonFile(const std::string &path, const json &j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << RenderJson(j);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace faithful
