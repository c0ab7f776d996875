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

#include "envc/detector.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "strings.h"

namespace envc {
namespace {

// Longest asterisk-delimited action we look inside.
constexpr size_t kMaxStageDirectionLength = 64;

CueSpan MakeSpan(const Utf8Text& text, size_t start, size_t end, CueSubcategory sub,
                 const DetectorConfig& cfg) {
  return CueSpan{start, end, std::string(text.Slice(start, end)), sub,
                 cfg.lexicon.IsAffectDisplay(sub)};
}

std::string TokenString(const Utf8Text& text, const Token& t) {
  // Tokens are ASCII by construction.
  std::string out;
  out.reserve(t.end - t.start);
  for (size_t i = t.start; i < t.end; ++i) out.push_back(static_cast<char>(text[i]));
  return out;
}

bool AllLetters(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return absl::ascii_isalpha(static_cast<unsigned char>(c));
  });
}

CueSubcategory StageSubcategory(const std::string& stem, const Lexicon& lex) {
  if (lex.touch_verbs.count(stem)) return CueSubcategory::kTouch;
  if (lex.eye_verbs.count(stem)) return CueSubcategory::kEyeMovement;
  return CueSubcategory::kBodyMovement;
}

// Stage verb for a word, trying the literal and the elongation-collapsed form.
std::optional<std::string> LookupStageVerb(std::string_view word, const DetectorConfig& cfg) {
  if (!AllLetters(word)) return std::nullopt;
  const std::string lower = AsciiStrToLower(word);
  if (auto stem = StageVerbStem(lower, cfg.lexicon.stage_verbs)) return stem;
  const std::string collapsed = AsciiStrToLower(
      CollapseElongation(word, cfg.elongation_min_repeat, cfg.lexicon.common_doubles));
  if (collapsed != lower) return StageVerbStem(collapsed, cfg.lexicon.stage_verbs);
  return std::nullopt;
}

bool IsStageDirectionBody(char32_t c) {
  return IsAsciiLetter(c) || c == U' ' || c == U'\'' || c == U'-';
}

bool IsEmojiModifier(char32_t c) {
  return c == 0xFE0E || c == 0xFE0F || c == 0x20E3 || (c >= 0x1F3FB && c <= 0x1F3FF);
}

bool IsEllipsisDot(char32_t c) { return c == U'.'; }
bool IsBangOrQuery(char32_t c) { return c == U'!' || c == U'?'; }

}  // namespace

absl::Status DetectorConfig::Validate() const {
  if (min_caps_run < 2) {
    return absl::InvalidArgumentError(StrCat("min_caps_run must be >= 2, got ", min_caps_run));
  }
  if (elongation_min_repeat < 3) {
    return absl::InvalidArgumentError(
        StrCat("elongation_min_repeat must be >= 3, got ", elongation_min_repeat));
  }
  if (punct_min_repeat < 2) {
    return absl::InvalidArgumentError(
        StrCat("punct_min_repeat must be >= 2, got ", punct_min_repeat));
  }
  if (!(all_caps_ratio > 0.0 && all_caps_ratio <= 1.0)) {
    return absl::InvalidArgumentError(
        StrCat("all_caps_ratio must be in (0, 1], got ", all_caps_ratio));
  }
  if (all_caps_min_words < 1) {
    return absl::InvalidArgumentError(
        StrCat("all_caps_min_words must be >= 1, got ", all_caps_min_words));
  }
  if (lexicon.FindProfile(emoji_profile_name) == nullptr) {
    return absl::InvalidArgumentError(
        StrCat("emoji_profile_name: unknown profile '", emoji_profile_name, "'"));
  }
  return lexicon.Validate();
}

const EmojiProfile& DetectorConfig::profile() const {
  static const EmojiProfile kEmpty;
  const EmojiProfile* p = lexicon.FindProfile(emoji_profile_name);
  return p != nullptr ? *p : kEmpty;
}

absl::StatusOr<DetectorConfig> MakeDetectorConfig(DetectorConfig cfg) {
  if (auto s = cfg.Validate(); !s.ok()) return s;
  return cfg;
}

std::vector<Token> WordTokens(const Utf8Text& text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (!IsWordChar(text[i])) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < n && IsWordChar(text[j])) ++j;
    tokens.push_back({i, j});
    i = j;
  }
  return tokens;
}

std::string CollapseElongation(std::string_view word, int min_repeat,
                               const StringSet& common_doubles, std::vector<bool>* kept) {
  struct Run {
    size_t start, len;
  };
  std::vector<Run> long_runs;
  for (size_t i = 0; i < word.size();) {
    const char c = word[i];
    size_t j = i + 1;
    if (absl::ascii_isalpha(static_cast<unsigned char>(c))) {
      while (j < word.size() && absl::ascii_tolower(word[j]) == absl::ascii_tolower(c)) ++j;
      if (j - i >= static_cast<size_t>(min_repeat)) long_runs.push_back({i, j - i});
    }
    i = j;
  }

  std::vector<bool> keep(word.size(), true);
  auto spelling = [&](size_t doubled_run) {
    std::string s;
    size_t r = 0;
    for (size_t i = 0; i < word.size();) {
      if (r < long_runs.size() && long_runs[r].start == i) {
        const size_t copies = (r == doubled_run) ? 2 : 1;
        s.append(copies, absl::ascii_tolower(word[i]));
        i += long_runs[r].len;
        ++r;
      } else {
        s.push_back(absl::ascii_tolower(word[i]));
        ++i;
      }
    }
    return s;
  };
  for (size_t r = 0; r < long_runs.size(); ++r) {
    const size_t copies = common_doubles.count(spelling(r)) ? 2 : 1;
    for (size_t k = copies; k < long_runs[r].len; ++k) keep[long_runs[r].start + k] = false;
  }

  std::string out;
  out.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    if (keep[i]) out.push_back(word[i]);
  }
  if (kept != nullptr) *kept = std::move(keep);
  return out;
}

bool MatchesVocalicsTerm(std::string_view lower_word, const StringSet& terms) {
  if (lower_word.empty()) return false;
  if (terms.count(lower_word)) return true;
  for (const auto& term : terms) {
    if (term.back() != '+') continue;
    const std::string_view base(term.data(), term.size() - 1);
    if (lower_word.size() < base.size() || lower_word.substr(0, base.size()) != base) continue;
    const char tail = base.back();
    if (std::all_of(lower_word.begin() + base.size(), lower_word.end(),
                    [tail](char c) { return c == tail; })) {
      return true;
    }
  }
  return false;
}

std::optional<std::string> StageVerbStem(std::string_view w, const StringSet& verbs) {
  auto has = [&](std::string_view s) { return !s.empty() && verbs.count(s) > 0; };
  auto strip = [&](std::string_view suffix) -> std::optional<std::string_view> {
    if (w.size() > suffix.size() && w.substr(w.size() - suffix.size()) == suffix) {
      return w.substr(0, w.size() - suffix.size());
    }
    return std::nullopt;
  };
  // hugging -> hugg -> hug
  auto undouble = [](std::string_view s) -> std::string_view {
    if (s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2]) return s.substr(0, s.size() - 1);
    return s;
  };
  if (has(w)) return std::string(w);
  if (auto s = strip("es"); s && has(*s)) return std::string(*s);
  if (auto s = strip("s"); s && has(*s)) return std::string(*s);
  for (std::string_view suffix : {"ing", "ed"}) {
    if (auto s = strip(suffix)) {
      if (has(*s)) return std::string(*s);
      if (has(undouble(*s))) return std::string(undouble(*s));
      const std::string with_e = StrCat(*s, "e");
      if (has(with_e)) return with_e;
    }
  }
  return std::nullopt;
}

std::vector<CueSpan> DetectStageDirections(const Utf8Text& text, const DetectorConfig& cfg) {
  std::vector<CueSpan> spans;
  const size_t n = text.size();

  // *action words*
  size_t i = 0;
  while (i < n) {
    if (text[i] != U'*') {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < n && j - i <= kMaxStageDirectionLength && text[j] != U'*' &&
           IsStageDirectionBody(text[j])) {
      ++j;
    }
    if (j >= n || text[j] != U'*') {
      ++i;
      continue;
    }
    // text[i] and text[j] are asterisks enclosing only letters, spaces,
    // apostrophes and hyphens.
    if (j - i >= 2 && IsAsciiLetter(text[i + 1]) && IsAsciiLetter(text[j - 1])) {
      size_t h = i + 1;
      while (h < j && IsAsciiLetter(text[h])) ++h;
      const std::string head = TokenString(text, Token{i + 1, h});
      if (auto stem = LookupStageVerb(head, cfg)) {
        spans.push_back(MakeSpan(text, i, j + 1, StageSubcategory(*stem, cfg.lexicon), cfg));
        i = j + 1;
        continue;
      }
    }
    i = j;
  }

  // Bare verbs outside any matched action.
  const size_t starred = spans.size();
  for (const Token& t : WordTokens(text)) {
    const bool inside = std::any_of(spans.begin(), spans.begin() + starred, [&](const CueSpan& s) {
      return t.start < s.end && s.start < t.end;
    });
    if (inside) continue;
    if (auto stem = LookupStageVerb(TokenString(text, t), cfg)) {
      spans.push_back(MakeSpan(text, t.start, t.end, StageSubcategory(*stem, cfg.lexicon), cfg));
    }
  }
  std::sort(spans.begin(), spans.end(), SpanLess);
  return spans;
}

std::vector<CueSpan> DetectEmoji(const Utf8Text& text, const DetectorConfig& cfg) {
  const EmojiProfile& profile = cfg.profile();
  std::vector<CueSpan> spans;
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    const auto cls = profile.Classify(text[i]);
    if (!cls) {
      ++i;
      continue;
    }
    const size_t start = i++;
    if (profile.join_sequences) {
      while (i < n) {
        if (IsEmojiModifier(text[i])) {
          ++i;
        } else if (text[i] == 0x200D && i + 1 < n && profile.Classify(text[i + 1])) {
          i += 2;
        } else {
          break;
        }
      }
    }
    spans.push_back(MakeSpan(text, start, i, *cls, cfg));
  }
  return spans;
}

std::vector<CueSpan> DetectVocalics(const Utf8Text& text, const DetectorConfig& cfg) {
  std::vector<CueSpan> spans;
  for (const Token& t : WordTokens(text)) {
    const std::string word = TokenString(text, t);
    const std::string lower = AsciiStrToLower(word);
    bool match = MatchesVocalicsTerm(lower, cfg.lexicon.vocalics_terms);
    if (!match) {
      const std::string collapsed = AsciiStrToLower(
          CollapseElongation(word, cfg.elongation_min_repeat, cfg.lexicon.common_doubles));
      match = collapsed != lower && MatchesVocalicsTerm(collapsed, cfg.lexicon.vocalics_terms);
    }
    if (match) spans.push_back(MakeSpan(text, t.start, t.end, CueSubcategory::kVocalics, cfg));
  }
  return spans;
}

std::vector<CueSpan> DetectVolumeCaps(const Utf8Text& text, const DetectorConfig& cfg) {
  std::vector<CueSpan> spans;
  const size_t n = text.size();
  if (cfg.all_caps_exclusion) {
    size_t upper = 0, letters = 0;
    for (size_t i = 0; i < n; ++i) {
      if (IsAsciiLetter(text[i])) {
        ++letters;
        if (IsAsciiUpper(text[i])) ++upper;
      }
    }
    int lettered_words = 0;
    for (const Token& t : WordTokens(text)) {
      for (size_t i = t.start; i < t.end; ++i) {
        if (IsAsciiLetter(text[i])) {
          ++lettered_words;
          break;
        }
      }
    }
    if (letters > 0 && lettered_words >= cfg.all_caps_min_words &&
        static_cast<double>(upper) >= cfg.all_caps_ratio * static_cast<double>(letters)) {
      return spans;
    }
  }
  size_t i = 0;
  while (i < n) {
    if (!IsAsciiUpper(text[i])) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < n && IsAsciiUpper(text[j])) ++j;
    if (j - i >= static_cast<size_t>(cfg.min_caps_run) &&
        cfg.lexicon.acronym_stoplist.count(text.Slice(i, j)) == 0) {
      spans.push_back(MakeSpan(text, i, j, CueSubcategory::kVolumeCaps, cfg));
    }
    i = j;
  }
  return spans;
}

std::vector<CueSpan> DetectVolumePunct(const Utf8Text& text, const DetectorConfig& cfg) {
  std::vector<CueSpan> spans;
  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    bool (*member)(char32_t) = nullptr;
    if (IsBangOrQuery(text[i])) member = IsBangOrQuery;
    if (IsEllipsisDot(text[i])) member = IsEllipsisDot;
    if (member == nullptr) {
      ++i;
      continue;
    }
    size_t j = i + 1;
    while (j < n && member(text[j])) ++j;
    if (j - i >= static_cast<size_t>(cfg.punct_min_repeat)) {
      spans.push_back(MakeSpan(text, i, j, CueSubcategory::kVolumePunct, cfg));
    }
    i = j;
  }
  return spans;
}

std::vector<CueSpan> DetectElongation(const Utf8Text& text, const DetectorConfig& cfg) {
  std::vector<CueSpan> spans;
  const auto min_run = static_cast<size_t>(cfg.elongation_min_repeat);
  for (const Token& t : WordTokens(text)) {
    bool elongated = false;
    size_t run = 0;
    char32_t prev = 0;
    for (size_t i = t.start; i < t.end && !elongated; ++i) {
      const char32_t c = AsciiToLower(text[i]);
      run = (IsAsciiLetter(c) && c == prev) ? run + 1 : 1;
      prev = c;
      elongated = IsAsciiLetter(c) && run >= min_run;
    }
    if (elongated) {
      spans.push_back(MakeSpan(text, t.start, t.end, CueSubcategory::kPitchElongation, cfg));
    }
  }
  return spans;
}

std::vector<CueSpan> DetectAlternatingCase(const Utf8Text& text, const DetectorConfig& cfg) {
  std::vector<CueSpan> spans;
  for (const Token& t : WordTokens(text)) {
    int rises = 0;  // lower -> upper
    for (size_t i = t.start + 1; i < t.end; ++i) {
      if (IsAsciiLower(text[i - 1]) && IsAsciiUpper(text[i])) ++rises;
    }
    bool template_match = t.end - t.start >= 4;
    for (size_t i = t.start; i < t.end && template_match; ++i) {
      const bool want_upper = (i - t.start) % 2 == 0;
      template_match = want_upper ? IsAsciiUpper(text[i]) : IsAsciiLower(text[i]);
    }
    if (rises >= 2 || template_match) {
      spans.push_back(MakeSpan(text, t.start, t.end, CueSubcategory::kPitchAltCase, cfg));
    }
  }
  return spans;
}

#define ENVC_STRING_OVERLOAD(Name)                                              \
  std::vector<CueSpan> Name(std::string_view text, const DetectorConfig& cfg) { \
    return Name(Utf8Text(text), cfg);                                           \
  }
ENVC_STRING_OVERLOAD(DetectStageDirections)
ENVC_STRING_OVERLOAD(DetectEmoji)
ENVC_STRING_OVERLOAD(DetectVocalics)
ENVC_STRING_OVERLOAD(DetectVolumeCaps)
ENVC_STRING_OVERLOAD(DetectVolumePunct)
ENVC_STRING_OVERLOAD(DetectElongation)
ENVC_STRING_OVERLOAD(DetectAlternatingCase)
#undef ENVC_STRING_OVERLOAD

int OverlapPriority(CueSubcategory sub) {
  switch (sub) {
    case CueSubcategory::kVocalics:
      return 0;
    case CueSubcategory::kBodyMovement:
    case CueSubcategory::kTouch:
    case CueSubcategory::kEyeMovement:
      return 1;
    case CueSubcategory::kFacialExpression:
    case CueSubcategory::kEmotionEmoji:
      return 2;
    case CueSubcategory::kVolumeCaps:
      return 3;
    case CueSubcategory::kPitchAltCase:
      return 4;
    case CueSubcategory::kPitchElongation:
      return 5;
    case CueSubcategory::kVolumePunct:
      return 6;
  }
  return 7;
}

absl::StatusOr<std::vector<CueSpan>> ResolveOverlaps(std::vector<CueSpan> spans,
                                                     size_t text_length) {
  for (const CueSpan& s : spans) {
    if (s.start >= s.end || s.end > text_length) {
      return absl::OutOfRangeError(StrCat("span [", s.start, ", ", s.end, ") ",
                                          SubcategoryName(s.subcategory),
                                          " is empty or exceeds text length ", text_length));
    }
  }
  std::sort(spans.begin(), spans.end(), [](const CueSpan& a, const CueSpan& b) {
    const auto key = [](const CueSpan& s) {
      return std::make_tuple(OverlapPriority(s.subcategory), -static_cast<int64_t>(s.length()),
                             s.start, s.end, Ordinal(s.subcategory));
    };
    return key(a) < key(b);
  });

  std::map<size_t, size_t> taken;  // start -> end of accepted spans
  std::vector<CueSpan> kept;
  for (CueSpan& s : spans) {
    auto next = taken.lower_bound(s.start);
    if (next != taken.end() && next->first < s.end) continue;
    if (next != taken.begin() && std::prev(next)->second > s.start) continue;
    taken.emplace(s.start, s.end);
    kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(), SpanLess);
  return kept;
}

AnnotatedPost Annotate(std::string post_id, std::string_view text, const DetectorConfig& cfg) {
  const Utf8Text utf8(text);
  std::vector<CueSpan> raw;
  using DetectFn = std::vector<CueSpan> (*)(const Utf8Text&, const DetectorConfig&);
  constexpr DetectFn kDetectors[] = {&DetectStageDirections, &DetectEmoji,       &DetectVocalics,
                                     &DetectVolumeCaps,      &DetectVolumePunct, &DetectElongation,
                                     &DetectAlternatingCase};
  for (DetectFn detect : kDetectors) {
    auto found = detect(utf8, cfg);
    raw.insert(raw.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  AnnotatedPost post;
  post.post_id = std::move(post_id);
  post.text = std::string(text);
  // Detector spans are in bounds by construction.
  post.spans = *ResolveOverlaps(std::move(raw), utf8.size());
  for (CueSpan& s : post.spans) {
    s.affect_display = cfg.lexicon.IsAffectDisplay(s.subcategory);
    ++post.counts[s.subcategory];
  }
  return post;
}

}  // namespace envc
