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

#include "envc/transformer.h"

#include <algorithm>

#include "envc/utf8.h"

namespace envc {
namespace {

constexpr std::array<std::string_view, 7> kRuleNames = {
    "emoji_delete", "stage_delete",   "vocalics_delete",      "elongation_collapse",
    "caps_fold",    "punct_collapse", "whitespace_normalize",
};

bool IsSentenceEnd(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }
bool IsClausePunct(char32_t c) { return IsSentenceEnd(c) || c == U',' || c == U';' || c == U':'; }

// The text being rewritten, with each scalar's index in the original text.
class Workspace {
 public:
  explicit Workspace(const Utf8Text& original)
      : original_(original), scalars_(original.scalars()), origin_(original.size()) {
    for (size_t i = 0; i < origin_.size(); ++i) origin_[i] = i;
  }

  Utf8Text Current() const { return Utf8Text(EncodeUtf8(scalars_)); }
  std::string Output() const { return EncodeUtf8(scalars_); }
  size_t size() const { return scalars_.size(); }
  char32_t& at(size_t i) { return scalars_[i]; }
  char32_t at(size_t i) const { return scalars_[i]; }

  CueSpan ToOriginal(const CueSpan& s) const {
    CueSpan out = s;
    out.start = origin_[s.start];
    out.end = origin_[s.end - 1] + 1;
    out.surface = std::string(original_.Slice(out.start, out.end));
    return out;
  }

  void Erase(const std::vector<bool>& drop) {
    size_t w = 0;
    for (size_t r = 0; r < scalars_.size(); ++r) {
      if (drop[r]) continue;
      scalars_[w] = scalars_[r];
      origin_[w] = origin_[r];
      ++w;
    }
    scalars_.resize(w);
    origin_.resize(w);
  }

 private:
  const Utf8Text& original_;
  std::u32string scalars_;
  std::vector<size_t> origin_;
};

class Stripper {
 public:
  Stripper(const Utf8Text& original, const StripConfig& cfg)
      : ws_(original), cfg_(cfg), det_(cfg.detector_cfg) {}

  StripReport Run() {
    for (StripRule rule : kAllStripRules) {
      if (!cfg_.Enabled(rule)) continue;
      switch (rule) {
        case StripRule::kEmojiDelete:
          DeleteSpans(rule, DetectEmoji(ws_.Current(), det_), /*eat_space=*/false);
          break;
        case StripRule::kStageDelete:
          DeleteSpans(rule, DetectStageDirections(ws_.Current(), det_), false);
          break;
        case StripRule::kVocalicsDelete:
          DeleteSpans(rule, DetectVocalics(ws_.Current(), det_), /*eat_space=*/true);
          break;
        case StripRule::kElongationCollapse:
          CollapseElongations();
          break;
        case StripRule::kCapsFold:
          FoldCaps();
          break;
        case StripRule::kPunctCollapse:
          CollapsePunct();
          break;
        case StripRule::kWhitespaceNormalize:
          NormalizeWhitespace();
          break;
      }
    }
    report_.output = ws_.Output();
    return std::move(report_);
  }

 private:
  void Record(StripRule rule, const CueSpan& s) {
    report_.removals.push_back({rule, ws_.ToOriginal(s)});
  }

  void DeleteSpans(StripRule rule, const std::vector<CueSpan>& spans, bool eat_space) {
    if (spans.empty()) return;
    std::vector<bool> drop(ws_.size(), false);
    for (const CueSpan& s : spans) {
      Record(rule, s);
      for (size_t i = s.start; i < s.end; ++i) drop[i] = true;
    }
    if (eat_space) {
      for (const CueSpan& s : spans) {
        if (s.end < ws_.size() && ws_.at(s.end) == U' ' && !drop[s.end]) {
          drop[s.end] = true;
        } else if (s.start > 0 && ws_.at(s.start - 1) == U' ' && !drop[s.start - 1]) {
          drop[s.start - 1] = true;
        }
      }
    }
    ws_.Erase(drop);
  }

  void CollapseElongations() {
    const auto spans = DetectElongation(ws_.Current(), det_);
    if (spans.empty()) return;
    std::vector<bool> drop(ws_.size(), false);
    for (const CueSpan& s : spans) {
      Record(StripRule::kElongationCollapse, s);
      std::vector<bool> kept;
      CollapseElongation(s.surface, det_.elongation_min_repeat, det_.lexicon.common_doubles, &kept);
      for (size_t k = 0; k < kept.size(); ++k) drop[s.start + k] = !kept[k];
    }
    ws_.Erase(drop);
  }

  bool SentenceInitial(size_t i) const {
    if (i > 0 && IsWordChar(ws_.at(i - 1))) return false;
    size_t j = i;
    while (j > 0 && IsSpace(ws_.at(j - 1))) --j;
    return j == 0 || IsSentenceEnd(ws_.at(j - 1));
  }

  void FoldCaps() {
    std::vector<bool> folded(ws_.size(), false);
    // Folding can drop the text below the all-caps threshold and expose new
    // runs, so repeat until nothing is detected. Every pass lowercases at
    // least one letter.
    while (true) {
      const Utf8Text current = ws_.Current();
      auto spans = DetectVolumeCaps(current, det_);
      auto alt = DetectAlternatingCase(current, det_);
      spans.insert(spans.end(), alt.begin(), alt.end());
      if (spans.empty()) break;
      std::sort(spans.begin(), spans.end(), SpanLess);
      for (const CueSpan& s : spans) {
        Record(StripRule::kCapsFold, s);
        for (size_t i = s.start; i < s.end; ++i) {
          if (IsAsciiUpper(ws_.at(i))) {
            ws_.at(i) = AsciiToLower(ws_.at(i));
            folded[i] = true;
          }
        }
      }
    }
    for (size_t i = 0; i < folded.size(); ++i) {
      if (folded[i] && SentenceInitial(i)) ws_.at(i) = AsciiToUpper(ws_.at(i));
    }
  }

  void CollapsePunct() {
    const auto spans = DetectVolumePunct(ws_.Current(), det_);
    if (spans.empty()) return;
    std::vector<bool> drop(ws_.size(), false);
    for (const CueSpan& s : spans) {
      Record(StripRule::kPunctCollapse, s);
      for (size_t i = s.start + 1; i < s.end; ++i) drop[i] = true;
    }
    ws_.Erase(drop);
  }

  void NormalizeWhitespace() {
    const size_t n = ws_.size();
    std::vector<bool> drop(n, false);
    size_t i = 0;
    while (i < n) {
      if (!IsSpace(ws_.at(i))) {
        ++i;
        continue;
      }
      size_t j = i;
      bool newline = false;
      while (j < n && IsSpace(ws_.at(j))) newline |= ws_.at(j++) == U'\n';
      const bool edge = i == 0 || j == n;
      // Pulling "!" against "!" would recreate a punctuation run.
      const bool before_punct = !edge && IsClausePunct(ws_.at(j)) && !IsSentenceEnd(ws_.at(i - 1));
      if (edge || before_punct) {
        for (size_t k = i; k < j; ++k) drop[k] = true;
      } else {
        ws_.at(i) = newline ? U'\n' : U' ';
        for (size_t k = i + 1; k < j; ++k) drop[k] = true;
      }
      i = j;
    }
    ws_.Erase(drop);
  }

  Workspace ws_;
  const StripConfig& cfg_;
  const DetectorConfig& det_;
  StripReport report_;
};

}  // namespace

std::string_view StripRuleName(StripRule rule) { return kRuleNames[static_cast<size_t>(rule)]; }

std::optional<StripRule> ParseStripRule(std::string_view name) {
  for (StripRule r : kAllStripRules) {
    if (StripRuleName(r) == name) return r;
  }
  return std::nullopt;
}

StripReport Strip(std::string_view text, const StripConfig& cfg) {
  const Utf8Text original(text);
  return Stripper(original, cfg).Run();
}

bool VerifyStripped(std::string_view text, const StripConfig& cfg) {
  const StripReport report = Strip(text, cfg);
  return Annotate("", report.output, cfg.detector_cfg).spans.empty();
}

}  // namespace envc
