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

#include "envc/cue_model.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "strings.h"

namespace envc {
namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, kNumSubcategories> kSubcategoryNames = {
    "BodyMovement", "Touch",      "EyeMovement", "FacialExpression", "EmotionEmoji",
    "Vocalics",     "VolumeCaps", "VolumePunct", "PitchElongation",  "PitchAltCase",
};

std::optional<CueSubcategory> ClassifyIn(const std::vector<CodepointRange>& ranges, char32_t cp,
                                         CueSubcategory sub) {
  for (const auto& r : ranges) {
    if (r.Contains(cp)) return sub;
  }
  return std::nullopt;
}

// Acronyms and initialisms that are written in capitals without any intent to
// shout. LOL is deliberately absent: it is a vocalization.
constexpr std::string_view kAcronyms[] = {
    "ABC",   "ACT",  "AD",   "ADHD",  "AI",   "AIDS", "AKA",    "AM",     "AMD",  "API",  "ASAP",
    "ATM",   "BA",   "BBC",  "BC",    "BCE",  "BMW",  "BS",     "BTS",    "CBS",  "CD",   "CDC",
    "CE",    "CEO",  "CFO",  "CIA",   "CNN",  "COO",  "COVID",  "CPR",    "CPU",  "CRM",  "CSS",
    "CTO",   "DC",   "DHL",  "DIY",   "DMV",  "DNA",  "DNC",    "DOJ",    "DVD",  "EPA",  "ER",
    "ESL",   "ESPN", "EST",  "ETA",   "EU",   "EUR",  "FAQ",    "FBI",    "FDA",  "FIFA", "FYI",
    "GBP",   "GDP",  "GM",   "GMAT",  "GMT",  "GOP",  "GPA",    "GPS",    "GPU",  "GRE",  "HBO",
    "HDMI",  "HIV",  "HP",   "HR",    "HTML", "HTTP", "HTTPS",  "IBM",    "ICE",  "ICU",  "ID",
    "IELTS", "IKEA", "IOS",  "IPO",   "IQ",   "IRS",  "IT",     "JPY",    "JSON", "KFC",  "KPI",
    "LA",    "LAPD", "LGBT", "LGBTQ", "LLC",  "LSAT", "LTD",    "MA",     "MBA",  "MCAT", "MD",
    "MIT",   "MLB",  "MRI",  "MS",    "MTV",  "NASA", "NASCAR", "NASDAQ", "NATO", "NBA",  "NBC",
    "NCAA",  "NFL",  "NHL",  "NPR",   "NSA",  "NYC",  "NYPD",   "NYSE",   "NYU",  "OCD",  "PBS",
    "PC",    "PDF",  "PHD",  "PHP",   "PIN",  "PM",   "PR",     "PST",    "PTSD", "QA",   "RAM",
    "RIP",   "RN",   "RNA",  "ROI",   "ROM",  "RSVP", "SAT",    "SF",     "SMS",  "SQL",  "SWAT",
    "TBA",   "TBD",  "TSA",  "TV",    "UAE",  "UCLA", "UEFA",   "UFC",    "UK",   "UN",   "UPS",
    "URL",   "USA",  "USB",  "USC",   "USD",  "USPS", "USSR",   "UTC",    "UX",   "VIP",  "WHO",
    "WWE",   "WWF",  "XML",
};

constexpr std::string_view kCommonDoubles[] = {
    "add",   "agree",  "all",   "ball",  "bee",   "bell",   "bill",  "bitter", "book",  "boss",
    "bull",  "butt",   "buzz",  "call",  "chill", "class",  "cliff", "coffee", "cool",  "deep",
    "doll",  "door",   "dress", "dull",  "egg",   "fall",   "feel",  "feet",   "fill",  "food",
    "fool",  "free",   "full",  "glass", "good",  "grass",  "grill", "happy",  "hell",  "hill",
    "jazz",  "keep",   "kill",  "less",  "look",  "loop",   "mall",  "meet",   "mess",  "miss",
    "moon",  "need",   "noon",  "odd",   "off",   "pass",   "pill",  "pool",   "poor",  "pretty",
    "pull",  "room",   "see",   "seem",  "sell",  "shell",  "skill", "sleep",  "small", "smell",
    "soon",  "sorry",  "spell", "spill", "still", "stress", "stuff", "sweet",  "tall",  "tell",
    "three", "thrill", "too",   "tool",  "tree",  "wall",   "week",  "well",   "will",  "yell",
};

EmojiProfile PaperProfile() {
  EmojiProfile p;
  // U+1F910..U+1F92F holds the supplemental faces (thinking, hugging,
  // zipper-mouth, ...). Listing it under facial keeps those out of the
  // emotion class, which also spans that block.
  p.facial = {{0x1F600, 0x1F64F}, {0x1F910, 0x1F92F}};
  p.body = {{0x1F400, 0x1F4FF}};
  p.emotion = {{0x1F900, 0x1F9E1}};
  p.join_sequences = false;
  return p;
}

EmojiProfile ExtendedProfile() {
  EmojiProfile p;
  p.facial = {{0x2639, 0x263A},
              {0x1F600, 0x1F64F},
              {0x1F910, 0x1F92F},
              {0x1F970, 0x1F97A},
              {0x1F9D0, 0x1F9D0}};
  p.body = {{0x261D, 0x261D},   {0x270A, 0x270D},   {0x1F400, 0x1F4FF},
            {0x1F590, 0x1F596}, {0x1F90C, 0x1F90F}, {0x1F930, 0x1F93E},
            {0x1F9B0, 0x1F9BF}, {0x1F9CD, 0x1F9CF}, {0x1FAF0, 0x1FAF8}};
  p.emotion = {{0x2600, 0x27BF},   {0x2B50, 0x2B50},   {0x2B55, 0x2B55},  {0x1F300, 0x1F5FF},
               {0x1F680, 0x1F6FF}, {0x1F900, 0x1F9FF}, {0x1FA70, 0x1FAFF}};
  p.join_sequences = true;
  return p;
}

absl::Status CheckRanges(std::string_view profile, std::string_view cls,
                         std::vector<CodepointRange> ranges) {
  for (const auto& r : ranges) {
    if (r.lo > r.hi || r.hi > 0x10FFFF) {
      return absl::InvalidArgumentError(StrCat(
          "emoji profile '", profile, "' class ", cls, ": bad range ",
          absl::Hex(static_cast<uint32_t>(r.lo)), "-", absl::Hex(static_cast<uint32_t>(r.hi))));
    }
  }
  std::sort(ranges.begin(), ranges.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  for (size_t i = 1; i < ranges.size(); ++i) {
    if (ranges[i].lo <= ranges[i - 1].hi) {
      return absl::InvalidArgumentError(StrCat("emoji profile '", profile, "' class ", cls,
                                               ": overlapping ranges at ",
                                               absl::Hex(static_cast<uint32_t>(ranges[i].lo))));
    }
  }
  return absl::OkStatus();
}

bool HasWhitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return absl::ascii_isspace(static_cast<unsigned char>(c)); });
}

bool HasUpper(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return absl::ascii_isupper(static_cast<unsigned char>(c)); });
}

bool HasLower(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return absl::ascii_islower(static_cast<unsigned char>(c)); });
}

absl::Status CheckLowerWords(std::string_view field, const StringSet& words) {
  for (const auto& w : words) {
    if (w.empty() || HasWhitespace(w) || HasUpper(w)) {
      return absl::InvalidArgumentError(
          StrCat(field, ": entry '", w, "' must be non-empty lowercase with no whitespace"));
    }
  }
  return absl::OkStatus();
}

// JSON helpers -------------------------------------------------------------

absl::StatusOr<StringSet> ReadStringList(const json& doc, std::string_view key) {
  const json& v = doc.at(std::string(key));
  if (!v.is_array()) {
    return absl::InvalidArgumentError(StrCat("lexicon key '", key, "' must be an array"));
  }
  StringSet out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      return absl::InvalidArgumentError(
          StrCat("lexicon key '", key, "' must contain only strings"));
    }
    out.insert(item.get<std::string>());
  }
  return out;
}

absl::StatusOr<char32_t> ReadCodepoint(const json& v, std::string_view where) {
  if (v.is_number_unsigned() || v.is_number_integer()) {
    const auto n = v.get<int64_t>();
    if (n < 0 || n > 0x10FFFF) {
      return absl::InvalidArgumentError(StrCat(where, ": code point out of range"));
    }
    return static_cast<char32_t>(n);
  }
  if (!v.is_string()) {
    return absl::InvalidArgumentError(StrCat(where, ": code point must be hex string or integer"));
  }
  std::string s = v.get<std::string>();
  if (absl::StartsWithIgnoreCase(s, "U+")) s = s.substr(2);
  if (absl::StartsWithIgnoreCase(s, "0x")) s = s.substr(2);
  uint32_t n = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n, 16);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || n > 0x10FFFF) {
    return absl::InvalidArgumentError(
        StrCat(where, ": bad code point '", v.get<std::string>(), "'"));
  }
  return static_cast<char32_t>(n);
}

absl::StatusOr<std::vector<CodepointRange>> ReadRanges(const json& v, std::string_view where) {
  if (!v.is_array()) {
    return absl::InvalidArgumentError(StrCat(where, " must be an array of {lo, hi}"));
  }
  std::vector<CodepointRange> out;
  for (const auto& item : v) {
    if (!item.is_object() || !item.contains("lo") || !item.contains("hi")) {
      return absl::InvalidArgumentError(StrCat(where, ": each range needs lo and hi"));
    }
    auto lo = ReadCodepoint(item["lo"], where);
    if (!lo.ok()) return lo.status();
    auto hi = ReadCodepoint(item["hi"], where);
    if (!hi.ok()) return hi.status();
    out.push_back({*lo, *hi});
  }
  return out;
}

absl::StatusOr<EmojiProfile> ReadProfile(const json& v, const std::string& name) {
  if (!v.is_object()) {
    return absl::InvalidArgumentError(StrCat("emoji profile '", name, "' must be an object"));
  }
  EmojiProfile p;
  for (const auto& [key, value] : v.items()) {
    const std::string where = StrCat("emoji profile '", name, "' class ", key);
    if (key == "join_sequences") {
      if (!value.is_boolean()) {
        return absl::InvalidArgumentError(StrCat(where, " must be boolean"));
      }
      p.join_sequences = value.get<bool>();
      continue;
    }
    std::vector<CodepointRange>* target = nullptr;
    if (key == "facial") target = &p.facial;
    if (key == "body") target = &p.body;
    if (key == "emotion") target = &p.emotion;
    if (target == nullptr) {
      return absl::InvalidArgumentError(
          StrCat("emoji profile '", name, "': unknown class '", key, "'"));
    }
    auto ranges = ReadRanges(value, where);
    if (!ranges.ok()) return ranges.status();
    *target = *std::move(ranges);
  }
  return p;
}

}  // namespace

CueDomain SubcategoryDomain(CueSubcategory sub) {
  switch (sub) {
    case CueSubcategory::kBodyMovement:
    case CueSubcategory::kTouch:
    case CueSubcategory::kEyeMovement:
    case CueSubcategory::kFacialExpression:
    case CueSubcategory::kEmotionEmoji:
      return CueDomain::kKinesics;
    case CueSubcategory::kVocalics:
    case CueSubcategory::kVolumeCaps:
    case CueSubcategory::kVolumePunct:
    case CueSubcategory::kPitchElongation:
    case CueSubcategory::kPitchAltCase:
      return CueDomain::kParalinguistics;
  }
  return CueDomain::kParalinguistics;
}

std::string_view SubcategoryName(CueSubcategory sub) { return kSubcategoryNames[Ordinal(sub)]; }

std::string_view DomainName(CueDomain domain) {
  return domain == CueDomain::kKinesics ? "Kinesics" : "Paralinguistics";
}

std::optional<CueSubcategory> ParseSubcategory(std::string_view name) {
  for (CueSubcategory s : kAllSubcategories) {
    if (EqualsIgnoreCase(SubcategoryName(s), name)) return s;
  }
  return std::nullopt;
}

bool SpanLess(const CueSpan& a, const CueSpan& b) {
  return std::make_tuple(a.start, a.end, Ordinal(a.subcategory)) <
         std::make_tuple(b.start, b.end, Ordinal(b.subcategory));
}

int64_t SubcategoryCounts::Total() const {
  int64_t total = 0;
  for (int64_t c : counts_) total += c;
  return total;
}

std::optional<CueSubcategory> EmojiProfile::Classify(char32_t cp) const {
  if (auto s = ClassifyIn(facial, cp, CueSubcategory::kFacialExpression)) return s;
  if (auto s = ClassifyIn(body, cp, CueSubcategory::kBodyMovement)) return s;
  return ClassifyIn(emotion, cp, CueSubcategory::kEmotionEmoji);
}

const EmojiProfile* Lexicon::FindProfile(std::string_view name) const {
  auto it = emoji_profiles.find(name);
  return it == emoji_profiles.end() ? nullptr : &it->second;
}

absl::Status Lexicon::Validate() const {
  if (auto s = CheckLowerWords("stage_verbs", stage_verbs); !s.ok()) return s;
  if (auto s = CheckLowerWords("touch_verbs", touch_verbs); !s.ok()) return s;
  if (auto s = CheckLowerWords("eye_verbs", eye_verbs); !s.ok()) return s;
  if (auto s = CheckLowerWords("vocalics_terms", vocalics_terms); !s.ok()) return s;
  for (const auto& term : vocalics_terms) {
    const size_t plus = term.find('+');
    if (plus != std::string::npos && (plus != term.size() - 1 || plus == 0)) {
      return absl::InvalidArgumentError(
          StrCat("vocalics_terms: '+' must be the last character of '", term, "'"));
    }
  }
  for (const auto& a : acronym_stoplist) {
    if (a.empty() || HasWhitespace(a) || HasLower(a)) {
      return absl::InvalidArgumentError(
          StrCat("acronym_stoplist: entry '", a, "' must be non-empty uppercase"));
    }
  }
  if (auto s = CheckLowerWords("common_doubles", common_doubles); !s.ok()) return s;
  for (const auto& [name, profile] : emoji_profiles) {
    if (auto s = CheckRanges(name, "facial", profile.facial); !s.ok()) return s;
    if (auto s = CheckRanges(name, "body", profile.body); !s.ok()) return s;
    if (auto s = CheckRanges(name, "emotion", profile.emotion); !s.ok()) return s;
  }
  return absl::OkStatus();
}

Lexicon DefaultLexicons() {
  Lexicon lex;
  lex.stage_verbs = {"hug",  "wave",   "frown", "smile", "clap", "hold",
                     "lean", "squint", "wink",  "shrug", "nod",  "facepalm"};
  lex.touch_verbs = {"hug", "hold", "lean"};
  lex.eye_verbs = {"squint", "wink"};
  lex.vocalics_terms = {"lol",   "lmao",  "lmfao",   "rofl",  "yawn", "ugh+", "hmm+",
                        "grrr+", "haha+", "hahaha+", "hehe+", "gawd", "sigh", "argh+",
                        "aww+",  "phew",  "meh",     "heyy+", "yay",  "eww+", "shh+"};
  for (std::string_view a : kAcronyms) lex.acronym_stoplist.emplace(a);
  for (std::string_view w : kCommonDoubles) lex.common_doubles.emplace(w);
  lex.emoji_profiles.emplace(std::string(kPaperProfile), PaperProfile());
  lex.emoji_profiles.emplace(std::string(kExtendedProfile), ExtendedProfile());
  lex.affect_display = {CueSubcategory::kFacialExpression, CueSubcategory::kEmotionEmoji,
                        CueSubcategory::kVocalics};
  return lex;
}

absl::StatusOr<Lexicon> LexiconFromJson(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return absl::InvalidArgumentError("lexicon: malformed JSON");
  if (!doc.is_object()) return absl::InvalidArgumentError("lexicon: top level must be an object");

  Lexicon lex = DefaultLexicons();
  const std::pair<std::string_view, StringSet*> lists[] = {
      {"stage_verbs", &lex.stage_verbs},
      {"touch_verbs", &lex.touch_verbs},
      {"eye_verbs", &lex.eye_verbs},
      {"vocalics_terms", &lex.vocalics_terms},
      {"acronym_stoplist", &lex.acronym_stoplist},
      {"common_doubles", &lex.common_doubles},
  };
  for (const auto& [key, value] : doc.items()) {
    bool handled = false;
    for (const auto& [name, target] : lists) {
      if (key == name) {
        auto words = ReadStringList(doc, name);
        if (!words.ok()) return words.status();
        *target = *std::move(words);
        handled = true;
      }
    }
    if (handled) continue;
    if (key == "emoji_profiles") {
      if (!value.is_object()) {
        return absl::InvalidArgumentError("lexicon key 'emoji_profiles' must be an object");
      }
      for (const auto& [pname, pvalue] : value.items()) {
        auto profile = ReadProfile(pvalue, pname);
        if (!profile.ok()) return profile.status();
        lex.emoji_profiles[pname] = *std::move(profile);
      }
    } else if (key == "affect_display") {
      auto names = ReadStringList(doc, "affect_display");
      if (!names.ok()) return names.status();
      lex.affect_display.clear();
      for (const auto& n : *names) {
        auto sub = ParseSubcategory(n);
        if (!sub)
          return absl::InvalidArgumentError(
              StrCat("affect_display: unknown subcategory '", n, "'"));
        lex.affect_display.insert(*sub);
      }
    } else {
      return absl::InvalidArgumentError(StrCat("lexicon: unknown key '", key, "'"));
    }
  }
  if (auto s = lex.Validate(); !s.ok()) return s;
  return lex;
}

absl::StatusOr<Lexicon> LoadLexiconFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(StrCat(path, ": cannot open lexicon file"));
  std::ostringstream buf;
  buf << in.rdbuf();
  auto lex = LexiconFromJson(buf.str());
  if (!lex.ok()) {
    return absl::InvalidArgumentError(StrCat(path, ": ", lex.status().message()));
  }
  return lex;
}

}  // namespace envc
