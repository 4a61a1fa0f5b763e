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
#include "labeldense/io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "labeldense/errors.h"

namespace labeldense {
namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

LabeledGraph ParseGraphText(std::string_view text) {
  std::vector<EdgeRecord> records;
  size_t line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (IsBlank(line) || line.front() == '#') continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw InputError(where + "expected 3 tab-separated fields, found " +
                       std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw InputError(where + "empty vertex name");
    }
    EdgeRecord r{std::string(fields[0]), std::string(fields[1]), {}, line_no};
    if (!fields[2].empty()) {
      for (const std::string_view l : Split(fields[2], ',')) {
        if (l.empty()) throw InputError(where + "empty label name");
        r.labels.emplace_back(l);
      }
    }
    records.push_back(std::move(r));
  }
  return LabeledGraph::Build(records);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

LabeledGraph ReadGraphFile(const std::string& path) {
  try {
    return ParseGraphText(ReadTextFile(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string SerializeGraph(const LabeledGraph& g) {
  std::string out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out += g.vertex_name(g.edge_u(e));
    out += '\t';
    out += g.vertex_name(g.edge_v(e));
    out += '\t';
    bool first = true;
    for (const LabelId l : g.edge_labels(e)) {
      if (!first) out += ',';
      out += g.label_name(l);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string ManifestJson(const SynthInstance& instance) {
  const LabeledGraph& g = instance.graph;
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = SynthKindName(instance.kind);
  j["epsilon"] = instance.epsilon;
  j["seed"] = instance.seed;
  j["total_vertices"] = instance.total_vertices;
  j["total_labels"] = instance.total_labels;
  j["edges"] = g.num_edges();
  std::vector<std::string> targets;
  for (const LabelId l : instance.target_labels) targets.push_back(g.label_name(l));
  j["target_labels"] = targets;
  j["target_stats"] = {{"n", instance.target_n},
                       {"m", instance.target_m},
                       {"density", instance.target_density.ToDouble()},
                       {"density_fraction", instance.target_density.ToString()}};
  return j.dump(2) + "\n";
}

}  // namespace labeldense
