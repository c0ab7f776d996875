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

// Cue taxonomy and the domain types shared by every other module.
//
// Electronic nonverbal cues split into two domains. Kinesics covers
// textualized gestures and emoji; paralinguistics covers orthographic stand-ins
// for voice such as vocalization words or shouted capitals. Emotion-conveying
// emoji are filed under kinesics.

#ifndef ENVC_CUE_MODEL_H_
#define ENVC_CUE_MODEL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace envc {

enum class CueDomain : uint8_t { kKinesics, kParalinguistics };

enum class CueSubcategory : uint8_t {
  kBodyMovement,
  kTouch,
  kEyeMovement,
  kFacialExpression,
  kEmotionEmoji,
  kVocalics,
  kVolumeCaps,
  kVolumePunct,
  kPitchElongation,
  kPitchAltCase,
};

inline constexpr size_t kNumSubcategories = 10;
inline constexpr size_t kNumDomains = 2;

inline constexpr std::array<CueSubcategory, kNumSubcategories> kAllSubcategories = {
    CueSubcategory::kBodyMovement,    CueSubcategory::kTouch,
    CueSubcategory::kEyeMovement,     CueSubcategory::kFacialExpression,
    CueSubcategory::kEmotionEmoji,    CueSubcategory::kVocalics,
    CueSubcategory::kVolumeCaps,      CueSubcategory::kVolumePunct,
    CueSubcategory::kPitchElongation, CueSubcategory::kPitchAltCase,
};

constexpr size_t Ordinal(CueSubcategory s) { return static_cast<size_t>(s); }
constexpr size_t Ordinal(CueDomain d) { return static_cast<size_t>(d); }

CueDomain SubcategoryDomain(CueSubcategory sub);

// Stable wire names ("BodyMovement", "Kinesics", ...).
std::string_view SubcategoryName(CueSubcategory sub);
std::string_view DomainName(CueDomain domain);
std::optional<CueSubcategory> ParseSubcategory(std::string_view name);

// One detected cue. Offsets are Unicode scalar indices into the source text,
// half-open.
struct CueSpan {
  size_t start = 0;
  size_t end = 0;
  std::string surface;
  CueSubcategory subcategory = CueSubcategory::kBodyMovement;
  bool affect_display = false;

  size_t length() const { return end - start; }
  bool Overlaps(const CueSpan& other) const { return start < other.end && other.start < end; }
  friend bool operator==(const CueSpan&, const CueSpan&) = default;
};

// Canonical span order: (start, end, subcategory ordinal).
bool SpanLess(const CueSpan& a, const CueSpan& b);

// Per-subcategory tally indexed by ordinal.
class SubcategoryCounts {
 public:
  int64_t operator[](CueSubcategory s) const { return counts_[Ordinal(s)]; }
  int64_t& operator[](CueSubcategory s) { return counts_[Ordinal(s)]; }
  int64_t Total() const;
  friend bool operator==(const SubcategoryCounts&, const SubcategoryCounts&) = default;

 private:
  std::array<int64_t, kNumSubcategories> counts_{};
};

struct AnnotatedPost {
  std::string post_id;
  std::string text;
  std::vector<CueSpan> spans;  // sorted by SpanLess, pairwise disjoint
  SubcategoryCounts counts;

  friend bool operator==(const AnnotatedPost&, const AnnotatedPost&) = default;
};

struct CodepointRange {
  char32_t lo = 0;
  char32_t hi = 0;
  bool Contains(char32_t cp) const { return cp >= lo && cp <= hi; }
  friend bool operator==(const CodepointRange&, const CodepointRange&) = default;
};

// Scalar ranges per emoji class. Lookup order is facial, body, emotion, so a
// scalar listed in two classes takes the earlier one.
struct EmojiProfile {
  std::vector<CodepointRange> facial;
  std::vector<CodepointRange> body;
  std::vector<CodepointRange> emotion;
  // When set, variation selectors and skin-tone modifiers join the preceding
  // emoji's span. ZWJ continuations join it too.
  bool join_sequences = false;

  // Class of `cp`, if any.
  std::optional<CueSubcategory> Classify(char32_t cp) const;
  friend bool operator==(const EmojiProfile&, const EmojiProfile&) = default;
};

using StringSet = std::set<std::string, std::less<>>;

// Word and pattern lists driving the detectors.
struct Lexicon {
  StringSet stage_verbs;
  // Subsets of stage_verbs that map to Touch and EyeMovement rather than
  // BodyMovement.
  StringSet touch_verbs;
  StringSet eye_verbs;
  // Lowercase base forms. A trailing '+' marks a repeatable final letter:
  // "ugh+" matches ugh, ughh, ughhh, ...
  StringSet vocalics_terms;
  StringSet acronym_stoplist;
  StringSet common_doubles;
  std::map<std::string, EmojiProfile, std::less<>> emoji_profiles;
  // Subcategories whose spans carry affect_display = true.
  std::set<CueSubcategory> affect_display;

  const EmojiProfile* FindProfile(std::string_view name) const;
  bool IsAffectDisplay(CueSubcategory sub) const { return affect_display.count(sub) > 0; }

  absl::Status Validate() const;
  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

inline constexpr std::string_view kPaperProfile = "paper";
inline constexpr std::string_view kExtendedProfile = "extended";

// The bundled lexicon with "paper" and "extended" emoji profiles.
Lexicon DefaultLexicons();

// Parses a lexicon JSON document. Keys present in the document replace the
// corresponding default list; absent keys keep the defaults. Profiles are
// merged by name. Code points are hex strings ("1F600", "U+1F600") or
// integers.
absl::StatusOr<Lexicon> LexiconFromJson(std::string_view json);
absl::StatusOr<Lexicon> LoadLexiconFile(const std::string& path);

}  // namespace envc

#endif  // ENVC_CUE_MODEL_H_
