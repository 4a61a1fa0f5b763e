// Copyright 2026 The LabelDense Authors
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
// Command results as JSON (schema 1) or CSV. Both carry the same values:
// n, m, label count, density as decimal and exact fraction, runtime.

#ifndef LABELDENSE_REPORT_H_
#define LABELDENSE_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "labeldense/graph.h"
#include "labeldense/greedy.h"
#include "labeldense/rational.h"

namespace labeldense {

inline constexpr int kReportSchema = 1;

struct TraceRow {
  std::string label;
  int64_t n = 0;
  int64_t m = 0;
  Rational objective;
};

struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::string> labels;    // sorted by name
  std::vector<std::string> vertices;  // label-blind results only
  int64_t n = 0;
  int64_t m = 0;
  Rational density;
  std::optional<Rational> alpha;  // when set, alpha density is reported
  bool with_trace = false;
  std::vector<TraceRow> trace;
  double runtime_ms = 0;
};

// Result fields come from the run's best prefix.
Report ReportFromRun(const LabeledGraph& g, const GreedyRun& run,
                     std::string command, bool with_trace);

// Result fields from an explicit label set, recomputed by Induce().
Report ReportFromLabels(const LabeledGraph& g, InduceMode mode,
                        const std::vector<LabelId>& labels,
                        std::string command);

std::vector<std::string> SortedLabelNames(const LabeledGraph& g,
                                          const std::vector<LabelId>& labels);

nlohmann::ordered_json ReportToJson(const Report& report);

// One report renders as a single object; several are wrapped in a
// "reports" array next to the fields of `header`.
std::string RenderJson(const std::vector<Report>& reports,
                       const nlohmann::ordered_json& header = {});
std::string RenderCsv(const std::vector<Report>& reports);

}  // namespace labeldense

#endif  // LABELDENSE_REPORT_H_
