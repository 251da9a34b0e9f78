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

// JSON renderings of reports. Undefined values are null. Keys come out
// sorted and doubles in shortest round-trip form, so equal inputs give
// byte-identical files.

#ifndef FAITHFUL_REPORT_H_
#define FAITHFUL_REPORT_H_

#include <string>

#include "faithful/filter.h"
#include "faithful/metrics.h"
#include "faithful/types.h"
#include "json.hpp"

namespace faithful {

// {counts: {n_h, n_t, n_h_in_s, n_h_in_t, n_t_in_s},
//  metrics: {prec_s: {macro, micro, macro_pct, micro_pct}, prec_t, recall_t, f1_t},
//  examples_total, examples_skipped: {prec_s, prec_t, recall_t, f1_t}}
nlohmann::json ReportToJson(const MetricReport &report);

// Inverse of ReportToJson for the fractional fields; percentages are ignored.
MetricReport ReportFromJson(const nlohmann::json &j);

nlohmann::json CountsToJson(const EntityCounts &counts);
nlohmann::json ExampleMetricsToJson(const ExampleMetrics &metrics);
nlohmann::json GoldStatsToJson(const GoldCorpusStats &stats);
nlohmann::json FilterStatsToJson(const FilterStats &stats);

// Metadata written next to prepared training data.
nlohmann::json PrepMetaToJson(const JaensConfig &config, const TrainingPrepMeta &meta);

// Pretty-printed (2-space indent) with a trailing newline.
std::string RenderJson(const nlohmann::json &j);
void WriteJsonFile(const std::string &path, const nlohmann::json &j);

}  // namespace faithful

#endif  // FAITHFUL_REPORT_H_
