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

// String-in, string-out entry points for language bindings. Options arrive as
// a JSON object whose keys name DetectorConfig fields:
//
//   lexicon               path to a lexicon JSON file, or an inline object
//   min_caps_run          integer >= 2
//   elongation_min_repeat integer >= 3
//   punct_min_repeat      integer >= 2
//   emoji_profile_name    a profile known to the lexicon; "paper" and "extended"
//                         are built in
//   all_caps_exclusion    boolean
//   all_caps_ratio        number in (0, 1]
//   all_caps_min_words    integer >= 1
//
// Strip additionally accepts "rules": a list of strip rule names to enable.
// Unknown keys and mistyped values are errors naming the key. Calls share no
// state and are safe from any thread.

#ifndef ENVC_API_H_
#define ENVC_API_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "envc/detector.h"
#include "envc/transformer.h"

namespace envc {

// Empty `options_json` means all defaults.
absl::StatusOr<DetectorConfig> DetectorConfigFromOptions(std::string_view options_json);
absl::StatusOr<StripConfig> StripConfigFromOptions(std::string_view options_json);

// {"output": ..., "removals": [{rule, start, end, surface, subcategory}]}.
std::string StripReportToJson(const StripReport& report);

// Same bytes as one line of `envc annotate` output for this text and config.
absl::StatusOr<std::string> AnnotateToJson(std::string_view text, std::string_view options_json,
                                           std::string post_id = "");
// Same bytes as `envc strip --json` for this text and config.
absl::StatusOr<std::string> StripToJson(std::string_view text, std::string_view options_json);

}  // namespace envc

#endif  // ENVC_API_H_
