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

#include <gtest/gtest.h>

#include <regex>
#include <string>
#include <vector>

#include "fuzz_text.h"

namespace envc {
namespace {

DetectorConfig Default() { return DetectorConfig(); }

std::vector<std::string> Surfaces(const std::vector<CueSpan>& spans) {
  std::vector<std::string> out;
  for (const auto& s : spans) out.push_back(s.surface);
  return out;
}

std::vector<CueSubcategory> Subs(const std::vector<CueSpan>& spans) {
  std::vector<CueSubcategory> out;
  for (const auto& s : spans) out.push_back(s.subcategory);
  return out;
}

// Stage directions ------------------------------------------------------------

TEST(StageDirectionTest, StarredTouchVerb) {
  const auto spans = DetectStageDirections("*hugs*", Default());
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].subcategory, CueSubcategory::kTouch);
  EXPECT_EQ(spans[0].surface, "*hugs*");
  EXPECT_EQ(spans[0].start, 0u);
  EXPECT_EQ(spans[0].end, 6u);
}

TEST(StageDirectionTest, EmptyText) { EXPECT_TRUE(DetectStageDirections("", Default()).empty()); }

TEST(StageDirectionTest, UnknownActionNeedsLexiconEntry) {
  auto spans = DetectStageDirections("hug me *kicks*", Default());
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].surface, "hug");
  EXPECT_EQ(spans[0].subcategory, CueSubcategory::kTouch);

  DetectorConfig cfg;
  cfg.lexicon.stage_verbs.insert("kick");
  spans = DetectStageDirections("hug me *kicks*", cfg);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].surface, "hug");
  EXPECT_EQ(spans[0].subcategory, CueSubcategory::kTouch);
  EXPECT_EQ(spans[1].surface, "*kicks*");
  EXPECT_EQ(spans[1].subcategory, CueSubcategory::kBodyMovement);
}

TEST(StageDirectionTest, SubcategoryByHeadVerb) {
  EXPECT_EQ(Subs(DetectStageDirections("*winks*", Default())),
            std::vector{CueSubcategory::kEyeMovement});
  EXPECT_EQ(Subs(DetectStageDirections("*holds hand*", Default())),
            std::vector{CueSubcategory::kTouch});
  EXPECT_EQ(Subs(DetectStageDirections("*waves hello*", Default())),
            std::vector{CueSubcategory::kBodyMovement});
  EXPECT_EQ(Subs(DetectStageDirections("*smiling*", Default())),
            std::vector{CueSubcategory::kBodyMovement});
  EXPECT_EQ(Subs(DetectStageDirections("she frowned", Default())),
            std::vector{CueSubcategory::kBodyMovement});
}

TEST(StageDirectionTest, StemRules) {
  const StringSet verbs = DefaultLexicons().stage_verbs;
  EXPECT_EQ(StageVerbStem("hugging", verbs), "hug");
  EXPECT_EQ(StageVerbStem("waved", verbs), "wave");
  EXPECT_EQ(StageVerbStem("smiles", verbs), "smile");
  EXPECT_EQ(StageVerbStem("claps", verbs), "clap");
  EXPECT_FALSE(StageVerbStem("hugely", verbs).has_value());
  EXPECT_FALSE(StageVerbStem("", verbs).has_value());
}

TEST(StageDirectionTest, AsteriskEmphasisOfOtherWordsIsIgnored) {
  EXPECT_TRUE(DetectStageDirections("this is *really* important", Default()).empty());
  EXPECT_TRUE(DetectStageDirections("5 * 3 = 15", Default()).empty());
}

// Emoji -------------------------------------------------------------------------

TEST(EmojiTest, SingleFace) {
  const auto spans = DetectEmoji("\U0001F604", Default());
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].subcategory, CueSubcategory::kFacialExpression);
  EXPECT_TRUE(spans[0].affect_display);
}

TEST(EmojiTest, PlainText) { EXPECT_TRUE(DetectEmoji("plain text", Default()).empty()); }

TEST(EmojiTest, OneSpanPerScalar) {
  const auto spans = DetectEmoji("\U0001F914\U0001F914\U0001F914", Default());
  ASSERT_EQ(spans.size(), 3u);
  for (size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(spans[i].subcategory, CueSubcategory::kFacialExpression);
    EXPECT_EQ(spans[i].start, i);
    EXPECT_EQ(spans[i].end, i + 1);
  }
}

TEST(EmojiTest, ExtendedProfileJoinsModifiersAndZwj) {
  DetectorConfig cfg;
  cfg.emoji_profile_name = "extended";
  // thumbs up + skin tone, heart + VS16, family joined by ZWJ
  const std::string text = "\U0001F44D\U0001F3FD ❤️ \U0001F468‍\U0001F469‍\U0001F467";
  const auto spans = DetectEmoji(text, cfg);
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].surface, "\U0001F44D\U0001F3FD");
  EXPECT_EQ(spans[1].surface, "❤️");
  EXPECT_EQ(spans[1].subcategory, CueSubcategory::kEmotionEmoji);
  EXPECT_EQ(spans[2].end - spans[2].start, 5u);
  // The "paper" profile sees neither the heart nor the modifiers.
  EXPECT_EQ(DetectEmoji(text, Default()).size(), 4u);
}

// Vocalics ----------------------------------------------------------------------

TEST(VocalicsTest, Examples) {
  EXPECT_EQ(Surfaces(DetectVocalics("lol", Default())), std::vector<std::string>{"lol"});
  const auto ugh = DetectVocalics("ughhh", Default());
  ASSERT_EQ(ugh.size(), 1u);
  EXPECT_EQ(ugh[0].end - ugh[0].start, 5u);
  EXPECT_TRUE(DetectVocalics("loly", Default()).empty());
}

TEST(VocalicsTest, CaseInsensitiveAndElongationAware) {
  EXPECT_EQ(DetectVocalics("LOL LoL lOl", Default()).size(), 3u);
  EXPECT_EQ(DetectVocalics("loooool", Default()).size(), 1u);
  EXPECT_EQ(DetectVocalics("hahaha hmmmmm grrrr", Default()).size(), 3u);
  EXPECT_TRUE(DetectVocalics("lolly ugly", Default()).empty());
}

// Caps ----------------------------------------------------------------------------

TEST(VolumeCapsTest, Examples) {
  EXPECT_EQ(Surfaces(DetectVolumeCaps("absolutely NOT", Default())),
            std::vector<std::string>{"NOT"});
  EXPECT_TRUE(DetectVolumeCaps("NASA launch", Default()).empty());
  EXPECT_EQ(
      Surfaces(DetectVolumeCaps("Just finished reading Fahrenheit 451... DAMN...", Default())),
      std::vector<std::string>{"DAMN"});
}

TEST(VolumeCapsTest, ThresholdAndAllCapsExclusion) {
  EXPECT_TRUE(DetectVolumeCaps("an OK day", Default()).empty());
  DetectorConfig two;
  two.min_caps_run = 2;
  EXPECT_EQ(DetectVolumeCaps("an OK day", two).size(), 1u);
  EXPECT_TRUE(DetectVolumeCaps("I AM SO TIRED OF THIS", Default()).empty());
  DetectorConfig off;
  off.all_caps_exclusion = false;
  EXPECT_EQ(DetectVolumeCaps("I AM SO TIRED OF THIS", off).size(), 2u);
  // A lone shouted word is not styling.
  EXPECT_EQ(DetectVolumeCaps("STOP", Default()).size(), 1u);
}

// Punctuation -----------------------------------------------------------------

TEST(VolumePunctTest, Examples) {
  EXPECT_EQ(Surfaces(DetectVolumePunct("Today is Friday!!!!!!", Default())),
            std::vector<std::string>{"!!!!!!"});
  EXPECT_EQ(Surfaces(DetectVolumePunct("overthinking..", Default())),
            std::vector<std::string>{".."});
  EXPECT_TRUE(DetectVolumePunct("Done.", Default()).empty());
  EXPECT_EQ(Surfaces(DetectVolumePunct("what?!? ok...", Default())),
            (std::vector<std::string>{"?!?", "..."}));
}

// Elongation ------------------------------------------------------------------

TEST(ElongationTest, Examples) {
  EXPECT_EQ(Surfaces(DetectElongation("soooo good", Default())), std::vector<std::string>{"soooo"});
  EXPECT_TRUE(DetectElongation("soo good", Default()).empty());
  EXPECT_EQ(DetectElongation("thankkkkk goood", Default()).size(), 2u);
  EXPECT_TRUE(DetectElongation("in 1999", Default()).empty());
}

TEST(ElongationTest, CollapseUsesCommonDoubles) {
  const StringSet doubles = DefaultLexicons().common_doubles;
  EXPECT_EQ(CollapseElongation("goood", 3, doubles), "good");
  EXPECT_EQ(CollapseElongation("thankkkkk", 3, doubles), "thank");
  EXPECT_EQ(CollapseElongation("soooo", 3, doubles), "so");
  EXPECT_EQ(CollapseElongation("EXAAAAAAAAMS", 3, doubles), "EXAMS");
  EXPECT_EQ(CollapseElongation("coffee", 3, doubles), "coffee");
}

// Alternating case ------------------------------------------------------------

TEST(AltCaseTest, Examples) {
  EXPECT_EQ(DetectAlternatingCase("HiYa", Default()).size(), 1u);
  EXPECT_TRUE(DetectAlternatingCase("Hello", Default()).empty());
  EXPECT_EQ(DetectAlternatingCase("ooOoOoh", Default()).size(), 1u);
  EXPECT_TRUE(DetectAlternatingCase("HELLO hello", Default()).empty());
  EXPECT_TRUE(DetectAlternatingCase("McDonald", Default()).empty());
}

// Overlap resolution ------------------------------------------------------------

CueSpan Span(size_t start, size_t end, CueSubcategory sub) {
  CueSpan s;
  s.start = start;
  s.end = end;
  s.subcategory = sub;
  return s;
}

TEST(ResolveOverlapsTest, LoLResolvesToVocalics) {
  const auto post = Annotate("p", "LoL", Default());
  ASSERT_EQ(post.spans.size(), 1u);
  EXPECT_EQ(post.spans[0].subcategory, CueSubcategory::kVocalics);
  DetectorConfig two;
  two.min_caps_run = 2;
  auto resolved = ResolveOverlaps(
      {Span(0, 3, CueSubcategory::kPitchAltCase), Span(0, 3, CueSubcategory::kVocalics),
       Span(0, 1, CueSubcategory::kVolumeCaps)},
      3);
  ASSERT_TRUE(resolved.ok());
  ASSERT_EQ(resolved->size(), 1u);
  EXPECT_EQ((*resolved)[0].subcategory, CueSubcategory::kVocalics);
}

TEST(ResolveOverlapsTest, DisjointPassThrough) {
  const std::vector<CueSpan> in = {Span(0, 2, CueSubcategory::kVolumePunct),
                                   Span(3, 5, CueSubcategory::kVocalics),
                                   Span(5, 6, CueSubcategory::kFacialExpression)};
  auto out = ResolveOverlaps(in, 10);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out, in);
}

TEST(ResolveOverlapsTest, UghhhPrefersVocalics) {
  const auto post = Annotate("p", "ughhh", Default());
  ASSERT_EQ(post.spans.size(), 1u);
  EXPECT_EQ(post.spans[0].subcategory, CueSubcategory::kVocalics);
}

TEST(ResolveOverlapsTest, PriorityOrder) {
  const CueSubcategory order[] = {
      CueSubcategory::kVocalics,   CueSubcategory::kTouch,        CueSubcategory::kFacialExpression,
      CueSubcategory::kVolumeCaps, CueSubcategory::kPitchAltCase, CueSubcategory::kPitchElongation,
      CueSubcategory::kVolumePunct};
  for (size_t i = 0; i + 1 < std::size(order); ++i) {
    EXPECT_LT(OverlapPriority(order[i]), OverlapPriority(order[i + 1]));
  }
  EXPECT_EQ(OverlapPriority(CueSubcategory::kBodyMovement),
            OverlapPriority(CueSubcategory::kEyeMovement));
  EXPECT_EQ(OverlapPriority(CueSubcategory::kEmotionEmoji),
            OverlapPriority(CueSubcategory::kFacialExpression));
}

TEST(ResolveOverlapsTest, TiesGoToLongerThenEarlier) {
  auto out = ResolveOverlaps(
      {Span(0, 3, CueSubcategory::kVolumeCaps), Span(2, 7, CueSubcategory::kVolumeCaps)}, 10);
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out->size(), 1u);
  EXPECT_EQ((*out)[0].start, 2u);
  out = ResolveOverlaps(
      {Span(2, 5, CueSubcategory::kVolumeCaps), Span(0, 3, CueSubcategory::kVolumeCaps)}, 10);
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out->size(), 1u);
  EXPECT_EQ((*out)[0].start, 0u);
}

TEST(ResolveOverlapsTest, RejectsOutOfBounds) {
  EXPECT_FALSE(ResolveOverlaps({Span(2, 11, CueSubcategory::kVocalics)}, 10).ok());
  EXPECT_FALSE(ResolveOverlaps({Span(4, 4, CueSubcategory::kVocalics)}, 10).ok());
}

// Annotate ----------------------------------------------------------------------

TEST(AnnotateTest, WorkedExample) {
  const auto post = Annotate(
      "w", "I have so much homework & I'm overthinking.. \U0001F629 gawd I'm such a mess...",
      Default());
  EXPECT_GE(post.counts[CueSubcategory::kVolumePunct], 1);
  EXPECT_GE(
      post.counts[CueSubcategory::kFacialExpression] + post.counts[CueSubcategory::kEmotionEmoji],
      1);
  bool gawd = false;
  for (const auto& s : post.spans) {
    gawd |= s.subcategory == CueSubcategory::kVocalics && s.surface == "gawd";
  }
  EXPECT_TRUE(gawd);
}

TEST(AnnotateTest, SamplePosts) {
  EXPECT_TRUE(Annotate("1", "singing is a wonderful remedy.", Default()).spans.empty());
  const auto post =
      Annotate("2", "My cat cuddled with me and I feel better. I love caaaats \U0001F431\U0001F431",
               Default());
  ASSERT_EQ(post.spans.size(), 3u);
  EXPECT_EQ(post.spans[0].surface, "caaaats");
  EXPECT_EQ(post.spans[0].subcategory, CueSubcategory::kPitchElongation);
  EXPECT_EQ(post.spans[1].subcategory, CueSubcategory::kBodyMovement);
  EXPECT_EQ(post.spans[2].subcategory, CueSubcategory::kBodyMovement);
}

struct TaxonomyCase {
  const char* text;
  CueSubcategory sub;
  const char* profile;
};

TEST(AnnotateTest, TaxonomyExamples) {
  const TaxonomyCase cases[] = {
      {"hug", CueSubcategory::kTouch, "paper"},
      {"\U0001F604", CueSubcategory::kFacialExpression, "paper"},
      {"❤", CueSubcategory::kEmotionEmoji, "extended"},
      {"lol", CueSubcategory::kVocalics, "paper"},
      {"yawn", CueSubcategory::kVocalics, "paper"},
      {"ughh", CueSubcategory::kVocalics, "paper"},
      {"THIS", CueSubcategory::kVolumeCaps, "paper"},
      {"STOP", CueSubcategory::kVolumeCaps, "paper"},
      {"!!!", CueSubcategory::kVolumePunct, "paper"},
      {"???", CueSubcategory::kVolumePunct, "paper"},
      {"soooo", CueSubcategory::kPitchElongation, "paper"},
      {"noooo", CueSubcategory::kPitchElongation, "paper"},
      {"HiYa", CueSubcategory::kPitchAltCase, "paper"},
      {"LoL", CueSubcategory::kVocalics, "paper"},
  };
  for (const auto& c : cases) {
    DetectorConfig cfg;
    cfg.emoji_profile_name = c.profile;
    const auto post = Annotate("t3", c.text, cfg);
    ASSERT_EQ(post.spans.size(), 1u) << c.text;
    EXPECT_EQ(post.spans[0].subcategory, c.sub) << c.text;
    EXPECT_EQ(post.spans[0].surface, c.text);
  }
}

TEST(AnnotateTest, ConfigValidation) {
  DetectorConfig cfg;
  cfg.min_caps_run = 1;
  EXPECT_FALSE(MakeDetectorConfig(cfg).ok());
  cfg = DetectorConfig();
  cfg.elongation_min_repeat = 2;
  EXPECT_FALSE(MakeDetectorConfig(cfg).ok());
  cfg = DetectorConfig();
  cfg.punct_min_repeat = 1;
  EXPECT_FALSE(MakeDetectorConfig(cfg).ok());
  cfg = DetectorConfig();
  cfg.emoji_profile_name = "nope";
  EXPECT_FALSE(MakeDetectorConfig(cfg).ok());
  EXPECT_TRUE(MakeDetectorConfig(DetectorConfig()).ok());
}

// Properties ------------------------------------------------------------------

TEST(DetectorPropertyTest, AnnotateInvariantsOnFuzz) {
  const auto texts = testing::FuzzCorpus(1234, 3000, 14, /*allow_invalid=*/true);
  for (const char* profile : {"paper", "extended"}) {
    DetectorConfig cfg;
    cfg.emoji_profile_name = profile;
    for (const std::string& text : texts) {
      const AnnotatedPost post = Annotate("f", text, cfg);
      ASSERT_EQ(post, Annotate("f", text, cfg)) << text;
      const Utf8Text u(text);
      SubcategoryCounts counts;
      for (size_t i = 0; i < post.spans.size(); ++i) {
        const CueSpan& s = post.spans[i];
        ASSERT_LT(s.start, s.end) << text;
        ASSERT_LE(s.end, u.size()) << text;
        ASSERT_EQ(s.surface, u.Slice(s.start, s.end)) << text;
        ASSERT_EQ(s.affect_display, cfg.lexicon.IsAffectDisplay(s.subcategory));
        if (i > 0) {
          ASSERT_TRUE(SpanLess(post.spans[i - 1], s)) << text;
          ASSERT_LE(post.spans[i - 1].end, s.start) << text;
        }
        counts[s.subcategory] += 1;
      }
      ASSERT_EQ(counts, post.counts) << text;
    }
  }
}

TEST(DetectorPropertyTest, ElongationThresholdIsMonotone) {
  const auto texts = testing::FuzzCorpus(77, 2000);
  for (const std::string& text : texts) {
    size_t prev = SIZE_MAX;
    for (int k = 3; k <= 7; ++k) {
      DetectorConfig cfg;
      cfg.elongation_min_repeat = k;
      const size_t raw = DetectElongation(text, cfg).size();
      const size_t resolved = Annotate("m", text, cfg).counts[CueSubcategory::kPitchElongation];
      ASSERT_LE(raw, prev) << text;
      ASSERT_LE(resolved, raw) << text;
      prev = raw;
    }
  }
}

// Independent regex oracles on ASCII text. -----------------------------------

std::string AsciiOnly(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (static_cast<unsigned char>(c) < 0x80) out += c;
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> RegexRuns(const std::string& text, const std::regex& re) {
  std::vector<std::pair<size_t, size_t>> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator();
       ++it) {
    out.emplace_back(static_cast<size_t>(it->position()),
                     static_cast<size_t>(it->position() + it->length()));
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> Offsets(const std::vector<CueSpan>& spans) {
  std::vector<std::pair<size_t, size_t>> out;
  for (const auto& s : spans) out.emplace_back(s.start, s.end);
  return out;
}

TEST(DetectorOracleTest, PunctuationRunsMatchRegex) {
  const std::regex re(R"([!?]{2,}|\.{2,})");
  for (const std::string& raw : testing::FuzzCorpus(5, 3000)) {
    const std::string text = AsciiOnly(raw);
    ASSERT_EQ(Offsets(DetectVolumePunct(text, Default())), RegexRuns(text, re)) << text;
  }
}

TEST(DetectorOracleTest, ElongatedWordsMatchRegex) {
  const std::regex word(R"([A-Za-z0-9_]+)");
  const std::regex run(R"(([a-z])\1\1)", std::regex::icase);
  for (const std::string& raw : testing::FuzzCorpus(6, 3000)) {
    const std::string text = AsciiOnly(raw);
    std::vector<std::pair<size_t, size_t>> expected;
    for (auto [b, e] : RegexRuns(text, word)) {
      if (std::regex_search(text.substr(b, e - b), run)) expected.emplace_back(b, e);
    }
    ASSERT_EQ(Offsets(DetectElongation(text, Default())), expected) << text;
  }
}

TEST(DetectorOracleTest, CapsRunsMatchRegex) {
  const std::regex caps(R"([A-Z]{3,})");
  const std::regex word(R"([A-Za-z0-9_]*[A-Za-z][A-Za-z0-9_]*)");
  const StringSet& stop = DefaultLexicons().acronym_stoplist;
  for (const std::string& raw : testing::FuzzCorpus(7, 3000)) {
    const std::string text = AsciiOnly(raw);
    size_t upper = 0, letters = 0;
    for (char c : text) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        ++letters;
        upper += std::isupper(static_cast<unsigned char>(c)) ? 1 : 0;
      }
    }
    const size_t words = RegexRuns(text, word).size();
    std::vector<std::pair<size_t, size_t>> expected;
    const bool styled = words >= 3 && letters > 0 && upper * 10 >= letters * 9;
    if (!styled) {
      for (auto [b, e] : RegexRuns(text, caps)) {
        if (!stop.count(text.substr(b, e - b))) expected.emplace_back(b, e);
      }
    }
    ASSERT_EQ(Offsets(DetectVolumeCaps(text, Default())), expected) << text;
  }
}

}  // namespace
}  // namespace envc
