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
#include "labeldense/cli.h"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "labeldense/errors.h"
#include "labeldense/graph.h"
#include "labeldense/greedy.h"
#include "labeldense/io.h"
#include "labeldense/oracle.h"
#include "labeldense/report.h"
#include "labeldense/search.h"
#include "labeldense/synthgen.h"

namespace labeldense {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  bool trace = false;
  std::string mode = "conjunctive";
  std::string selection = "hull";
  std::string alpha;
  std::string objective = "ratio";
  std::string labels;
  std::string kind = "conjunctive";
  std::string epsilon = "0";
  std::string epsilons = "0,0.05,0.1,0.15,0.2";
  uint64_t seed = 0;
  uint64_t seeds = 10;
  size_t vertices = 200;
  size_t num_labels = 50;
  bool scaling = false;
  std::string tol = "0.0001";
  bool exact = false;
  size_t rounds = 2;
  std::string min_fraction;
  size_t max_labels = kDefaultMaxLabels;
};

Rational ParseRational(const std::string& text, const char* what) {
  try {
    return Rational::Parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid ") + what + " '" + text + "': " + e.what());
  }
}

std::vector<LabelId> LookupLabels(const LabeledGraph& g, const std::string& list) {
  std::vector<LabelId> ids;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto id = g.FindLabel(name);
    if (!id) throw InputError("unknown label '" + name + "'");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  LabeledGraph Input() const {
    if (opt_.input.empty()) throw InputError("--input is required");
    return ReadGraphFile(opt_.input);
  }

  void Emit(const std::vector<Report>& reports,
            const ordered_json& header = {}) const {
    if (opt_.format != "json" && opt_.format != "csv") {
      throw InputError("unknown format '" + opt_.format + "' (expected json or csv)");
    }
    const std::string text = opt_.format == "csv" ? RenderCsv(reports)
                                                   : RenderJson(reports, header);
    if (opt_.output.empty()) {
      out_ << text;
    } else {
      WriteTextFile(opt_.output, text);
    }
  }

  // Report goes to stdout when --output names a graph destination.
  void EmitToStdout(const std::vector<Report>& reports) const {
    out_ << (opt_.format == "csv" ? RenderCsv(reports) : RenderJson(reports));
  }

  void Greedy(const std::string& command) const {
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    GreedyRun run;
    Selection selection = Selection::kHull;
    if (command == "greedy-and") {
      run = GreedyAnd(g);
    } else if (command == "greedy-or") {
      selection = ParseSelectionOrThrow();
      run = GreedyOr(g, selection);
    } else {
      if (opt_.alpha.empty()) throw InputError("--alpha is required");
      const Rational alpha = ParseRational(opt_.alpha, "alpha");
      run = command == "greedy-and-alpha" ? GreedyAndAlpha(g, alpha)
                                          : GreedyOrAlpha(g, alpha);
    }
    Report r = ReportFromRun(g, run, command, opt_.trace);
    r.runtime_ms = MillisSince(start);
    if (command == "greedy-or") r.config["selection"] = SelectionName(selection);
    r.config["input"] = opt_.input;
    Emit({r});
  }

  void Induce() const {
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    const InduceMode mode = ParseMode(opt_.mode);
    Report r = ReportFromLabels(g, mode, LookupLabels(g, opt_.labels), "induce");
    if (!opt_.alpha.empty()) {
      r.alpha = ParseRational(opt_.alpha, "alpha");
      r.config["alpha"] = r.alpha->ToString();
    }
    r.config["input"] = opt_.input;
    r.runtime_ms = MillisSince(start);
    Emit({r});
  }

  void Oracle() const {
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    const InduceMode mode = ParseMode(opt_.mode);
    ObjectiveKind kind;
    Rational alpha(0);
    if (opt_.objective == "ratio") {
      kind = ObjectiveKind::kRatio;
    } else if (opt_.objective == "alpha") {
      kind = ObjectiveKind::kAlpha;
      if (opt_.alpha.empty()) throw InputError("--alpha is required for the alpha objective");
      alpha = ParseRational(opt_.alpha, "alpha");
    } else {
      throw InputError("unknown objective '" + opt_.objective + "' (expected ratio or alpha)");
    }
    const LabelSearchResult best = ExactLabelSearch(g, mode, kind, alpha, opt_.max_labels);
    Report r = ReportFromLabels(g, mode, best.labels, "oracle");
    r.config["objective"] = opt_.objective;
    if (kind == ObjectiveKind::kAlpha) {
      r.alpha = alpha;
      r.config["alpha"] = alpha.ToString();
    }
    r.config["input"] = opt_.input;
    r.runtime_ms = MillisSince(start);
    Emit({r});
  }

  void BaselinePeel() const {
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    const VertexSetResult best = PeelDensest(g);
    Report r;
    r.command = "baseline-peel";
    r.config["input"] = opt_.input;
    for (const VertexId v : best.vertices) r.vertices.push_back(g.vertex_name(v));
    std::sort(r.vertices.begin(), r.vertices.end());
    r.n = static_cast<int64_t>(best.vertices.size());
    r.m = best.m;
    r.density = best.density;
    r.runtime_ms = MillisSince(start);
    Emit({r});
  }

  void Generate() const {
    if (opt_.output.empty()) throw InputError("--output is required for generate");
    const auto start = Clock::now();
    const SynthKind kind = ParseSynthKind(opt_.kind);
    const double eps = ParseRational(opt_.epsilon, "epsilon").ToDouble();
    SynthInstance inst;
    if (opt_.scaling) {
      if (!ScalingSizesInRange(opt_.vertices, opt_.num_labels)) {
        std::cerr << "warning: sizes outside the 10^4..10^5 vertex / 10^3..10^4 "
                     "label range\n";
      }
      inst = GenScaling(kind, eps, opt_.seed, opt_.vertices, opt_.num_labels);
    } else {
      inst = kind == SynthKind::kConjunctive
                 ? GenConjunctive(eps, opt_.seed, opt_.vertices, opt_.num_labels)
                 : GenDisjunctive(eps, opt_.seed, opt_.vertices, opt_.num_labels);
    }
    WriteTextFile(opt_.output, SerializeGraph(inst.graph));
    WriteTextFile(opt_.output + ".manifest.json", ManifestJson(inst));
    Report r = ReportFromLabels(inst.graph, ModeOf(kind), inst.target_labels, "generate");
    r.config["kind"] = SynthKindName(kind);
    r.config["epsilon"] = eps;
    r.config["seed"] = opt_.seed;
    r.config["vertices"] = opt_.vertices;
    r.config["labels"] = opt_.num_labels;
    r.config["edges"] = inst.graph.num_edges();
    r.config["output"] = opt_.output;
    r.runtime_ms = MillisSince(start);
    EmitToStdout({r});
  }

  void MaxAlpha() const {
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    const InduceMode mode = ParseMode(opt_.mode);
    const MaxAlphaResult res =
        MaxAlphaSearch(g, mode, ParseRational(opt_.tol, "tol"), opt_.exact);
    const double ms = MillisSince(start);
    std::vector<Report> reports;
    for (const auto& [alpha, pick] :
         {std::pair{res.alpha_star, res.at_star},
          std::pair{res.quarter_alpha, res.at_quarter}}) {
      Report r = ReportFromLabels(g, mode, pick.labels, "max-alpha");
      r.alpha = alpha;
      r.config["objective"] = "alpha";
      r.config["alpha"] = alpha.ToString();
      r.runtime_ms = ms;
      reports.push_back(std::move(r));
    }
    ordered_json header;
    header["alpha_star"] = res.alpha_star.ToDouble();
    header["alpha_star_fraction"] = res.alpha_star.ToString();
    header["tol"] = opt_.tol;
    header["exact"] = opt_.exact;
    header["evaluations"] = res.evaluations;
    Emit(reports, header);
  }

  void PeelRepeatCmd() const {
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    const InduceMode mode = ParseMode(opt_.mode);
    const auto rounds = PeelRepeat(g, mode, opt_.rounds, ParseSelectionOrThrow());
    const double ms = MillisSince(start);
    std::vector<Report> reports;
    for (size_t i = 0; i < rounds.size(); ++i) {
      Report r = ReportFromRun(g, rounds[i].run, "peel-repeat", opt_.trace);
      r.config["round"] = i + 1;
      r.config["edges_before"] = rounds[i].edges_before;
      r.runtime_ms = ms;
      reports.push_back(std::move(r));
    }
    ordered_json header;
    header["rounds_requested"] = opt_.rounds;
    header["rounds_run"] = rounds.size();
    Emit(reports, header);
  }

  void Filter() const {
    if (opt_.output.empty()) throw InputError("--output is required for filter");
    if (opt_.min_fraction.empty()) throw InputError("--min-fraction is required");
    const LabeledGraph g = Input();
    const auto start = Clock::now();
    const LabeledGraph kept =
        FilterRareLabels(g, ParseRational(opt_.min_fraction, "min-fraction"));
    WriteTextFile(opt_.output, SerializeGraph(kept));
    Report r;
    r.command = "filter";
    r.config["input"] = opt_.input;
    r.config["output"] = opt_.output;
    r.config["min_fraction"] = opt_.min_fraction;
    r.config["labels_before"] = g.num_labels();
    r.config["labels_after"] = kept.num_labels();
    r.config["edges_before"] = g.num_edges();
    r.n = static_cast<int64_t>(kept.num_vertices());
    r.m = static_cast<int64_t>(kept.num_edges());
    r.density = Density(r.n, r.m);
    r.runtime_ms = MillisSince(start);
    EmitToStdout({r});
  }

  void Sweep() const {
    const SynthKind kind = ParseSynthKind(opt_.kind);
    std::vector<double> epsilons;
    std::stringstream ss(opt_.epsilons);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) epsilons.push_back(ParseRational(item, "epsilon").ToDouble());
    }
    std::vector<uint64_t> seeds(opt_.seeds);
    for (uint64_t s = 0; s < opt_.seeds; ++s) seeds[s] = opt_.seed + s;
    const Selection selection = ParseSelectionOrThrow();
    const size_t threads = SweepThreads();
    const auto cells = RunSweep(kind, epsilons, seeds, selection, threads,
                                opt_.vertices, opt_.num_labels);
    std::vector<Report> reports;
    size_t recovered = 0;
    for (const SweepCell& c : cells) {
      Report r;
      r.command = "sweep";
      r.config["kind"] = SynthKindName(kind);
      r.config["mode"] = ModeName(ModeOf(kind));
      r.config["epsilon"] = c.epsilon;
      r.config["seed"] = c.seed;
      r.config["target_density"] = c.target_density.ToDouble();
      r.config["target_density_fraction"] = c.target_density.ToString();
      const bool ok = c.run.best_objective >= c.target_density;
      recovered += ok;
      r.config["recovered"] = ok;
      r.config["exact_targets"] = c.run.best_labels == c.targets;
      // Generated label ids map to names L<id>.
      for (const LabelId l : c.run.best_labels) r.labels.push_back("L" + std::to_string(l));
      std::sort(r.labels.begin(), r.labels.end());
      r.n = c.run.best_n;
      r.m = c.run.best_m;
      r.density = Density(r.n, r.m);
      r.runtime_ms = c.runtime_ms;
      reports.push_back(std::move(r));
    }
    ordered_json header;
    header["kind"] = SynthKindName(kind);
    header["threads"] = threads;
    header["cells"] = cells.size();
    header["recovered"] = recovered;
    Emit(reports, header);
  }

 private:
  Selection ParseSelectionOrThrow() const {
    try {
      return ParseSelection(opt_.selection);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }

  const Options& opt_;
  std::ostream& out_;
};

void WriteError(std::ostream& err, int code, const std::string& kind,
                const std::string& message) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["error"] = {{"code", code}, {"kind", kind}, {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options opt;
  CLI::App app{"Dense subgraphs induced by edge labels", "labeldense"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("--input", opt.input, "Graph file (u<TAB>v<TAB>labels)");
    sub->add_option("--output", opt.output, "Write output here instead of stdout");
    sub->add_flag("--trace", opt.trace, "Include per-step rows");
    sub->add_option("--format", opt.format, "json or csv");
  };
  std::map<std::string, std::function<void(const Runner&)>> actions;
  auto add = [&](const std::string& name, const std::string& help, bool input,
                 std::function<void(const Runner&)> action) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, input);
    actions[name] = std::move(action);
    return sub;
  };

  add("greedy-and", "Greedy conjunctive search", true,
      [](const Runner& r) { r.Greedy("greedy-and"); });
  add("greedy-or", "Greedy disjunctive search", true,
      [](const Runner& r) { r.Greedy("greedy-or"); })
      ->add_option("--selection", opt.selection, "hull or scan");
  add("greedy-and-alpha", "Greedy conjunctive search for m - alpha*n", true,
      [](const Runner& r) { r.Greedy("greedy-and-alpha"); })
      ->add_option("--alpha", opt.alpha, "Exact rational, e.g. 3/4 or 0.75");
  add("greedy-or-alpha", "Greedy disjunctive search for m - alpha*n", true,
      [](const Runner& r) { r.Greedy("greedy-or-alpha"); })
      ->add_option("--alpha", opt.alpha, "Exact rational, e.g. 3/4 or 0.75");
  {
    CLI::App* sub = add("induce", "Subgraph induced by a label set", true,
                        [](const Runner& r) { r.Induce(); });
    sub->add_option("--mode", opt.mode, "conjunctive or disjunctive");
    sub->add_option("--labels", opt.labels, "Comma-separated label names");
    sub->add_option("--alpha", opt.alpha, "Also report m - alpha*n");
  }
  {
    CLI::App* sub = add("oracle", "Exhaustive search over label sets", true,
                        [](const Runner& r) { r.Oracle(); });
    sub->add_option("--mode", opt.mode, "conjunctive or disjunctive");
    sub->add_option("--objective", opt.objective, "ratio or alpha");
    sub->add_option("--alpha", opt.alpha, "Alpha for the alpha objective");
    sub->add_option("--max-labels", opt.max_labels, "Refuse above this many labels");
  }
  add("baseline-peel", "Label-blind densest subgraph by peeling", true,
      [](const Runner& r) { r.BaselinePeel(); });
  {
    CLI::App* sub = add("generate", "Synthetic instance; --output gets the graph",
                        false, [](const Runner& r) { r.Generate(); });
    sub->add_option("--kind", opt.kind, "conjunctive or disjunctive");
    sub->add_option("--epsilon", opt.epsilon, "Noise level in [0, 1]");
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--vertices", opt.vertices, "Total vertices");
    sub->add_option("--labels", opt.num_labels, "Total labels");
    sub->add_flag("--scaling", opt.scaling, "Noise model for runtime studies");
  }
  {
    CLI::App* sub = add("max-alpha", "Largest alpha with a non-empty result", true,
                        [](const Runner& r) { r.MaxAlpha(); });
    sub->add_option("--mode", opt.mode, "conjunctive or disjunctive");
    sub->add_option("--tol", opt.tol, "Bisection tolerance");
    sub->add_flag("--exact", opt.exact, "Use the exhaustive search");
  }
  {
    CLI::App* sub = add("peel-repeat", "Extract, remove edges, repeat", true,
                        [](const Runner& r) { r.PeelRepeatCmd(); });
    sub->add_option("--mode", opt.mode, "conjunctive or disjunctive");
    sub->add_option("--rounds", opt.rounds, "Number of rounds");
    sub->add_option("--selection", opt.selection, "hull or scan");
  }
  add("filter", "Drop rare labels; --output gets the graph", true,
      [](const Runner& r) { r.Filter(); })
      ->add_option("--min-fraction", opt.min_fraction,
                   "Keep labels on at least this fraction of edges");
  {
    CLI::App* sub = add("sweep", "Greedy recovery over epsilon x seed (LABELDENSE_THREADS workers)",
                        false, [](const Runner& r) { r.Sweep(); });
    sub->add_option("--kind", opt.kind, "conjunctive or disjunctive");
    sub->add_option("--epsilons", opt.epsilons, "Comma-separated noise levels");
    sub->add_option("--seed", opt.seed, "First seed");
    sub->add_option("--seeds", opt.seeds, "Seeds per noise level");
    sub->add_option("--selection", opt.selection, "hull or scan");
    sub->add_option("--vertices", opt.vertices, "Total vertices");
    sub->add_option("--labels", opt.num_labels, "Total labels");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    WriteError(err, 1, "usage", e.what());
    return 1;
  }

  try {
    const Runner runner(opt, out);
    for (CLI::App* sub : app.get_subcommands()) actions.at(sub->get_name())(runner);
    return 0;
  } catch (const GuardError& e) {
    WriteError(err, 2, "guard", e.what());
    return 2;
  } catch (const InputError& e) {
    WriteError(err, 1, "input", e.what());
    return 1;
  } catch (const std::exception& e) {
    WriteError(err, 1, "internal", e.what());
    return 1;
  }
}

}  // namespace labeldense
