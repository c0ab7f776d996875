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

// Pattern engine for electronic nonverbal cues.
//
// Seven independent detectors each return raw spans for one cue family. The
// combined Annotate() pass runs all of them and resolves overlaps so that every
// stretch of text is credited to at most one cue.
//
// Word-level detectors work on tokens: maximal runs of ASCII [A-Za-z0-9_].
// Lexicon matching (stage verbs, vocalizations) is case-insensitive and also
// tries the elongation-collapsed form of the token, so "huuug" is a stage
// verb and "loool" a vocalization.

#ifndef ENVC_DETECTOR_H_
#define ENVC_DETECTOR_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "envc/cue_model.h"
#include "envc/utf8.h"

namespace envc {

struct DetectorConfig {
  Lexicon lexicon = DefaultLexicons();
  // Shortest run of capitals counted as shouting.
  int min_caps_run = 3;
  // Shortest run of one repeated letter counted as elongation.
  int elongation_min_repeat = 3;
  // Shortest run of !/? (or of dots) counted as expressive punctuation.
  int punct_min_repeat = 2;
  std::string emoji_profile_name = std::string(kPaperProfile);
  // Capitals carry no contrast when nearly the whole post is uppercase. When
  // enabled, texts with at least `all_caps_min_words` lettered tokens whose
  // letters are at least `all_caps_ratio` uppercase yield no VolumeCaps spans.
  bool all_caps_exclusion = true;
  double all_caps_ratio = 0.9;
  int all_caps_min_words = 3;

  absl::Status Validate() const;
  const EmojiProfile& profile() const;
};

// Checks the thresholds and resolves the emoji profile name.
absl::StatusOr<DetectorConfig> MakeDetectorConfig(DetectorConfig cfg);

// A maximal run of word characters, in scalar offsets.
struct Token {
  size_t start;
  size_t end;
};
std::vector<Token> WordTokens(const Utf8Text& text);

// Reduces each run of >= min_repeat copies of one letter (case-insensitive) to
// a single copy, or to two copies when that spelling of the whole word is in
// `common_doubles`. `word` must be ASCII. Digits are never touched.
// When `kept` is non-null it receives, per input character, whether the
// character survives.
std::string CollapseElongation(std::string_view word, int min_repeat,
                               const StringSet& common_doubles, std::vector<bool>* kept = nullptr);

// True if `lower_word` matches a vocalics term, honouring '+' tails.
bool MatchesVocalicsTerm(std::string_view lower_word, const StringSet& terms);

// Lexicon verb that `lower_word` inflects (hugs, hugging, smiled, ...), if any.
std::optional<std::string> StageVerbStem(std::string_view lower_word, const StringSet& stage_verbs);

std::vector<CueSpan> DetectStageDirections(const Utf8Text& text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectEmoji(const Utf8Text& text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectVocalics(const Utf8Text& text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectVolumeCaps(const Utf8Text& text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectVolumePunct(const Utf8Text& text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectElongation(const Utf8Text& text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectAlternatingCase(const Utf8Text& text, const DetectorConfig& cfg);

// Convenience overloads on raw UTF-8.
std::vector<CueSpan> DetectStageDirections(std::string_view text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectEmoji(std::string_view text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectVocalics(std::string_view text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectVolumeCaps(std::string_view text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectVolumePunct(std::string_view text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectElongation(std::string_view text, const DetectorConfig& cfg);
std::vector<CueSpan> DetectAlternatingCase(std::string_view text, const DetectorConfig& cfg);

// Resolution rank; lower wins. Vocalics rank first and punctuation runs rank
// last. The full order is the table in detector.cc.
int OverlapPriority(CueSubcategory sub);

// Keeps one span from every overlapping group. Priority decides first; ties go
// to the longer span and then to the earlier start. Output is sorted by SpanLess and pairwise
// disjoint. Fails if any span is empty or extends past `text_length`.
absl::StatusOr<std::vector<CueSpan>> ResolveOverlaps(std::vector<CueSpan> spans,
                                                     size_t text_length);

// Runs every detector and resolves overlaps. Counts tally the kept spans.
AnnotatedPost Annotate(std::string post_id, std::string_view text, const DetectorConfig& cfg);

}  // namespace envc

#endif  // ENVC_DETECTOR_H_
