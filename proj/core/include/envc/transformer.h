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

// Cue neutralization: rewrites a post so the detector finds nothing in it while
// the remaining words stay as written. This produces the "cues removed" side
// of a matched stimulus pair.
//
// Rules run in a fixed order, each re-detecting on the text left by the
// previous one:
//
//   1. emoji_delete         drop every emoji span
//   2. stage_delete         drop *actions* and bare stage verbs
//   3. vocalics_delete      drop vocalization tokens plus one adjacent space
//   4. elongation_collapse  soooo -> so, goood -> good (common doubles)
//   5. caps_fold            lowercase shouted runs and alternating-case words,
//                           restoring a capital at sentence starts
//   6. punct_collapse       !!! -> !, ?!? -> ?, ... -> .
//   7. whitespace_normalize collapse space runs and trim; no space before
//                           punctuation

#ifndef ENVC_TRANSFORMER_H_
#define ENVC_TRANSFORMER_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "envc/cue_model.h"
#include "envc/detector.h"

namespace envc {

enum class StripRule : uint8_t {
  kEmojiDelete,
  kStageDelete,
  kVocalicsDelete,
  kElongationCollapse,
  kCapsFold,
  kPunctCollapse,
  kWhitespaceNormalize,
};

inline constexpr std::array<StripRule, 7> kAllStripRules = {
    StripRule::kEmojiDelete,         StripRule::kStageDelete, StripRule::kVocalicsDelete,
    StripRule::kElongationCollapse,  StripRule::kCapsFold,    StripRule::kPunctCollapse,
    StripRule::kWhitespaceNormalize,
};

std::string_view StripRuleName(StripRule rule);
std::optional<StripRule> ParseStripRule(std::string_view name);

struct StripConfig {
  std::set<StripRule> rules_enabled{kAllStripRules.begin(), kAllStripRules.end()};
  DetectorConfig detector_cfg;

  bool Enabled(StripRule r) const { return rules_enabled.count(r) > 0; }
};

struct Removal {
  StripRule rule;
  CueSpan span;  // offsets and surface refer to the original text
  friend bool operator==(const Removal&, const Removal&) = default;
};

struct StripReport {
  std::string output;
  std::vector<Removal> removals;
};

StripReport Strip(std::string_view text, const StripConfig& cfg);

// True iff annotating Strip(text).output finds no cue.
bool VerifyStripped(std::string_view text, const StripConfig& cfg);

}  // namespace envc

#endif  // ENVC_TRANSFORMER_H_
