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

// Balanced literality x cue-presence stimulus sets and response scoring.

#ifndef ENVC_EXPERIMENT_H_
#define ENVC_EXPERIMENT_H_

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "envc/corpus.h"
#include "envc/stats.h"
#include "envc/transformer.h"

namespace envc {

enum class CueCondition : uint8_t { kPresent, kRemoved };
std::string_view CueConditionName(CueCondition c);

struct StimulusItem {
  std::string item_id;
  std::string source_post_id;
  std::string emotion;
  bool sarcastic = false;
  CueCondition cue_condition = CueCondition::kPresent;
  std::string rendered_text;
  friend bool operator==(const StimulusItem&, const StimulusItem&) = default;
};

std::string StimulusItemToJson(const StimulusItem& item);
absl::StatusOr<StimulusItem> StimulusItemFromJson(std::string_view line);
// Blank lines are ignored; anything else malformed is an error naming the line.
absl::StatusOr<std::vector<StimulusItem>> ReadStimuliJsonl(std::istream& in,
                                                           const std::string& name);

// For every emotion and both literality levels, draws `items_per_cell` posts
// that carry at least one cue and emits a Present item followed by its
// Removed sibling. Each stratum has its own SplitMix64 stream derived from
// (seed, stratum index). Emotion labels match case-insensitively after
// trimming; items carry the label as spelled in `emotions`.
absl::StatusOr<std::vector<StimulusItem>> BuildDesign(const std::vector<Post>& posts,
                                                      const std::vector<std::string>& emotions,
                                                      int items_per_cell,
                                                      const StripConfig& strip_cfg, uint64_t seed);

struct ResponseRecord {
  std::string participant_id;
  std::string item_id;
  std::string selected;
  bool is_uncertain = false;
};

// "Uncertain" in any letter case marks a response as uncertain.
bool IsUncertainSelection(std::string_view selected);
// Trimmed, ASCII case-insensitive equality.
bool SameLabel(std::string_view a, std::string_view b);

// CSV with header participant_id,item_id,selected (extra columns ignored).
absl::StatusOr<std::vector<ResponseRecord>> ReadResponsesCsv(std::istream& in,
                                                             const std::string& name);

struct CellCounts {
  int64_t shown = 0;
  int64_t correct = 0;
  int64_t uncertain = 0;
  friend bool operator==(const CellCounts&, const CellCounts&) = default;
};

// Cells are indexed by CellIndex(sarcastic, condition).
inline constexpr size_t kNumCells = 4;
constexpr size_t CellIndex(bool sarcastic, CueCondition c) {
  return (sarcastic ? 2 : 0) + static_cast<size_t>(c);
}
// literal_present, literal_removed, sarcastic_present, sarcastic_removed.
std::string_view CellName(size_t cell);

struct ConditionSummary {
  std::string participant_id;
  std::array<CellCounts, kNumCells> cells{};
  friend bool operator==(const ConditionSummary&, const ConditionSummary&) = default;
};

// One summary per participant, ordered by participant_id.
absl::StatusOr<std::vector<ConditionSummary>> ScoreResponses(
    const std::vector<ResponseRecord>& responses, const std::vector<StimulusItem>& items);

struct CellReport {
  CellCounts totals;
  double accuracy = 0;
  std::pair<double, double> accuracy_ci{0, 0};
  double uncertainty = 0;
  std::pair<double, double> uncertainty_ci{0, 0};
};

struct ContrastReport {
  std::string label;
  std::optional<TTestResult> test;
  int64_t participants = 0;
  std::string error;  // set when the test could not be computed
};

struct AnalysisReport {
  int64_t participants = 0;
  int64_t responses = 0;
  std::array<CellReport, kNumCells> cells;
  // Removed minus Present per-participant correct counts, within literal
  // items and within sarcastic items.
  std::array<ContrastReport, 2> contrasts;
  std::optional<LogisticFitResult> logistic;
  std::string logistic_error;
};

inline constexpr std::string_view kAnalysisCaveat =
    "Fixed-effects logistic regression only: participant and emotion random intercepts are "
    "not modelled, so standard errors ignore clustering.";

// Requires at least one response.
absl::StatusOr<AnalysisReport> Analyze(const std::vector<ResponseRecord>& responses,
                                       const std::vector<StimulusItem>& items);
std::string AnalysisReportToJson(const AnalysisReport& report, bool pretty);

}  // namespace envc

#endif  // ENVC_EXPERIMENT_H_
