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
// Command-line front end. Exit codes: 0 success, 1 input or usage error,
// 2 size guard exceeded. Errors go to `err` as one JSON object.

#ifndef LABELDENSE_CLI_H_
#define LABELDENSE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace labeldense {

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace labeldense

#endif  // LABELDENSE_CLI_H_
