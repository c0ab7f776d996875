// Copyright 2026 The envc Authors.
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

#ifndef ENVC_TOOLS_CLI_H_
#define ENVC_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "envc/corpus.h"

namespace envc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs the envc command line. `args` excludes the program name. Results go to
// --out when given, otherwise to `out`; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Static SVG bar chart of per-subcategory counts, one colour per domain.
std::string FrequencyChartSvg(const FrequencyTable& table);

}  // namespace envc::cli

#endif  // ENVC_TOOLS_CLI_H_
