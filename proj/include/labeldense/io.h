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
// Edge-list files: one edge per line, "u<TAB>v<TAB>label[,label...]".
// Lines starting with '#' and blank lines are skipped. Names may not
// contain TAB or comma; there is no escaping.

#ifndef LABELDENSE_IO_H_
#define LABELDENSE_IO_H_

#include <string>
#include <string_view>

#include "labeldense/graph.h"
#include "labeldense/synthgen.h"

namespace labeldense {

// Throws InputError naming the offending line.
LabeledGraph ParseGraphText(std::string_view text);
LabeledGraph ReadGraphFile(const std::string& path);

// Edges in id order, labels in id order. Parsing the output and
// serializing again gives the same bytes.
std::string SerializeGraph(const LabeledGraph& g);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

// Sidecar describing how an instance was generated.
std::string ManifestJson(const SynthInstance& instance);

}  // namespace labeldense

#endif  // LABELDENSE_IO_H_
