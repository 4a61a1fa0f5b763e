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
#include "labeldense/report.h"

#include <algorithm>
#include <utility>

namespace labeldense {
namespace {

using nlohmann::ordered_json;

std::string Decimal(const Rational& r) {
  return nlohmann::json(r.ToDouble()).dump();
}

std::string ConfigField(const Report& r, const char* key) {
  auto it = r.config.find(key);
  if (it == r.config.end()) return "";
  return it->is_string() ? it->get<std::string>() : it->dump();
}

std::string Join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::vector<std::string> SortedLabelNames(const LabeledGraph& g,
                                          const std::vector<LabelId>& labels) {
  std::vector<std::string> names;
  for (const LabelId l : labels) names.push_back(g.label_name(l));
  std::sort(names.begin(), names.end());
  return names;
}

Report ReportFromRun(const LabeledGraph& g, const GreedyRun& run,
                     std::string command, bool with_trace) {
  Report r;
  r.command = std::move(command);
  r.config["mode"] = ModeName(run.mode);
  r.config["objective"] = run.kind == ObjectiveKind::kRatio ? "ratio" : "alpha";
  if (run.kind == ObjectiveKind::kAlpha) {
    r.config["alpha"] = run.alpha.ToString();
    r.alpha = run.alpha;
  }
  r.labels = SortedLabelNames(g, run.best_labels);
  r.n = run.best_n;
  r.m = run.best_m;
  r.density = Density(run.best_n, run.best_m);
  r.with_trace = with_trace;
  if (with_trace) {
    for (const GreedyStep& s : run.steps) {
      r.trace.push_back({g.label_name(s.label), s.n, s.m, s.objective});
    }
  }
  return r;
}

Report ReportFromLabels(const LabeledGraph& g, InduceMode mode,
                        const std::vector<LabelId>& labels,
                        std::string command) {
  const InducedSubgraph sub = Induce(g, mode, labels);
  Report r;
  r.command = std::move(command);
  r.config["mode"] = ModeName(mode);
  r.labels = SortedLabelNames(g, labels);
  r.n = sub.n;
  r.m = sub.m;
  r.density = Density(sub);
  return r;
}

ordered_json ReportToJson(const Report& report) {
  ordered_json j;
  j["command"] = report.command;
  j["config"] = report.config;
  ordered_json result;
  result["labels"] = report.labels;
  result["num_labels"] = report.labels.size();
  if (!report.vertices.empty()) result["vertices"] = report.vertices;
  result["n"] = report.n;
  result["m"] = report.m;
  result["density"] = report.density.ToDouble();
  result["density_fraction"] = report.density.ToString();
  if (report.alpha) {
    const Rational g = AlphaDensity(report.n, report.m, *report.alpha);
    result["alpha_density"] = g.ToDouble();
    result["alpha_density_fraction"] = g.ToString();
  }
  j["result"] = std::move(result);
  if (report.with_trace) {
    ordered_json rows = ordered_json::array();
    for (const TraceRow& t : report.trace) {
      rows.push_back({{"label", t.label},
                      {"n", t.n},
                      {"m", t.m},
                      {"objective", t.objective.ToDouble()},
                      {"objective_fraction", t.objective.ToString()}});
    }
    j["trace"] = std::move(rows);
  }
  j["runtime_ms"] = report.runtime_ms;
  return j;
}

std::string RenderJson(const std::vector<Report>& reports,
                       const ordered_json& header) {
  ordered_json j;
  j["schema"] = kReportSchema;
  if (reports.size() == 1 && (header.is_null() || header.empty())) {
    const ordered_json body = ReportToJson(reports[0]);
    for (auto& [key, value] : body.items()) j[key] = value;
    return j.dump(2) + "\n";
  }
  if (!reports.empty()) j["command"] = reports[0].command;
  if (header.is_object()) {
    for (auto& [key, value] : header.items()) j[key] = value;
  }
  j["reports"] = ordered_json::array();
  for (const Report& r : reports) j["reports"].push_back(ReportToJson(r));
  return j.dump(2) + "\n";
}

std::string RenderCsv(const std::vector<Report>& reports) {
  std::string out =
      "command,round,mode,objective,alpha,labels,num_labels,n,m,density,"
      "density_fraction,alpha_density,alpha_density_fraction,runtime_ms\n";
  bool any_trace = false;
  for (size_t i = 0; i < reports.size(); ++i) {
    const Report& r = reports[i];
    any_trace = any_trace || r.with_trace;
    std::string alpha_decimal, alpha_fraction;
    if (r.alpha) {
      const Rational g = AlphaDensity(r.n, r.m, *r.alpha);
      alpha_decimal = Decimal(g);
      alpha_fraction = g.ToString();
    }
    out += r.command + "," + std::to_string(i) + "," + ConfigField(r, "mode") +
           "," + ConfigField(r, "objective") + "," + ConfigField(r, "alpha") +
           "," + Join(r.labels, ';') + "," + std::to_string(r.labels.size()) +
           "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           Decimal(r.density) + "," + r.density.ToString() + "," +
           alpha_decimal + "," + alpha_fraction + "," +
           nlohmann::json(r.runtime_ms).dump() + "\n";
  }
  if (any_trace) {
    out += "\nround,step,label,n,m,objective,objective_fraction\n";
    for (size_t i = 0; i < reports.size(); ++i) {
      for (size_t s = 0; s < reports[i].trace.size(); ++s) {
        const TraceRow& t = reports[i].trace[s];
        out += std::to_string(i) + "," + std::to_string(s + 1) + "," + t.label +
               "," + std::to_string(t.n) + "," + std::to_string(t.m) + "," +
               Decimal(t.objective) + "," + t.objective.ToString() + "\n";
      }
    }
  }
  return out;
}

}  // namespace labeldense
