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

#include <gtest/gtest.h>

namespace envc {
namespace {

TEST(CueModelTest, DomainMapping) {
  EXPECT_EQ(SubcategoryDomain(CueSubcategory::kFacialExpression), CueDomain::kKinesics);
  EXPECT_EQ(SubcategoryDomain(CueSubcategory::kVocalics), CueDomain::kParalinguistics);
  EXPECT_EQ(SubcategoryDomain(CueSubcategory::kEmotionEmoji), CueDomain::kKinesics);
}

TEST(CueModelTest, MappingIsTotalAndBalanced) {
  int kinesics = 0, para = 0;
  for (CueSubcategory s : kAllSubcategories) {
    (SubcategoryDomain(s) == CueDomain::kKinesics ? kinesics : para) += 1;
  }
  EXPECT_EQ(kinesics, 5);
  EXPECT_EQ(para, 5);
}

TEST(CueModelTest, NamesRoundTrip) {
  for (CueSubcategory s : kAllSubcategories) {
    auto parsed = ParseSubcategory(SubcategoryName(s));
    ASSERT_TRUE(parsed.has_value()) << SubcategoryName(s);
    EXPECT_EQ(*parsed, s);
  }
  EXPECT_EQ(ParseSubcategory("vocalics"), CueSubcategory::kVocalics);
  EXPECT_FALSE(ParseSubcategory("Shouting").has_value());
}

TEST(CueModelTest, DefaultLexiconContents) {
  const Lexicon lex = DefaultLexicons();
  for (const char* v : {"hug", "wave", "frown", "smile", "clap"}) {
    EXPECT_TRUE(lex.stage_verbs.count(v)) << v;
  }
  for (const char* v : {"lol", "yawn", "ugh+", "hmm+", "grrr+", "haha+", "gawd", "sigh"}) {
    EXPECT_TRUE(lex.vocalics_terms.count(v)) << v;
  }
  for (const char* v : {"good", "cool", "too", "see"}) {
    EXPECT_TRUE(lex.common_doubles.count(v)) << v;
  }
  EXPECT_GE(lex.acronym_stoplist.size(), 100u);
  for (const char* a : {"NASA", "FBI", "USA"}) EXPECT_TRUE(lex.acronym_stoplist.count(a)) << a;
  EXPECT_FALSE(lex.acronym_stoplist.count("LOL"));
  EXPECT_TRUE(lex.touch_verbs.count("hug"));
  EXPECT_TRUE(lex.eye_verbs.count("wink"));
}

TEST(CueModelTest, PaperProfileRanges) {
  const Lexicon lex = DefaultLexicons();
  const EmojiProfile* paper = lex.FindProfile("paper");
  ASSERT_NE(paper, nullptr);
  EXPECT_EQ(paper->Classify(0x1F604), CueSubcategory::kFacialExpression);
  EXPECT_EQ(paper->Classify(0x1F600), CueSubcategory::kFacialExpression);
  EXPECT_EQ(paper->Classify(0x1F64F), CueSubcategory::kFacialExpression);
  EXPECT_EQ(paper->Classify(0x1F431), CueSubcategory::kBodyMovement);
  EXPECT_EQ(paper->Classify(0x1F4FF), CueSubcategory::kBodyMovement);
  EXPECT_EQ(paper->Classify(0x1F970), CueSubcategory::kEmotionEmoji);
  EXPECT_EQ(paper->Classify(0x1F9E1), CueSubcategory::kEmotionEmoji);
  EXPECT_EQ(paper->Classify(0x1F914), CueSubcategory::kFacialExpression);
  EXPECT_FALSE(paper->Classify(0x1F9E2).has_value());
  EXPECT_FALSE(paper->Classify(0x2764).has_value());
  EXPECT_FALSE(paper->join_sequences);
}

TEST(CueModelTest, ExtendedProfileCoversHeart) {
  const Lexicon lex = DefaultLexicons();
  const EmojiProfile* ext = lex.FindProfile("extended");
  ASSERT_NE(ext, nullptr);
  EXPECT_TRUE(ext->Classify(0x2764).has_value());
  EXPECT_TRUE(ext->Classify(0x1F525).has_value());
  EXPECT_TRUE(ext->Classify(0x1FA70).has_value());
  EXPECT_TRUE(ext->join_sequences);
}

TEST(CueModelTest, BundledProfilesAreWellFormed) {
  const Lexicon lex = DefaultLexicons();
  for (const auto& [name, p] : lex.emoji_profiles) {
    for (const auto* ranges : {&p.facial, &p.body, &p.emotion}) {
      for (size_t i = 0; i < ranges->size(); ++i) {
        EXPECT_LE((*ranges)[i].lo, (*ranges)[i].hi) << name;
        for (size_t k = 0; k < i; ++k) {
          const bool disjoint =
              (*ranges)[i].hi < (*ranges)[k].lo || (*ranges)[k].hi < (*ranges)[i].lo;
          EXPECT_TRUE(disjoint) << name << " ranges " << i << " and " << k;
        }
      }
    }
  }
  EXPECT_TRUE(lex.Validate().ok());
}

TEST(CueModelTest, DefaultLexiconIsDeterministic) {
  EXPECT_EQ(DefaultLexicons(), DefaultLexicons());
}

TEST(CueModelTest, AffectDisplayDefaults) {
  const Lexicon lex = DefaultLexicons();
  for (CueSubcategory s : kAllSubcategories) {
    const bool expected = s == CueSubcategory::kFacialExpression ||
                          s == CueSubcategory::kEmotionEmoji || s == CueSubcategory::kVocalics;
    EXPECT_EQ(lex.IsAffectDisplay(s), expected) << SubcategoryName(s);
  }
}

TEST(CueModelTest, LexiconJsonReplacesPresentKeysOnly) {
  auto lex = LexiconFromJson(R"({"stage_verbs": ["kick"], "emoji_profiles": {"mine": {
      "facial": [{"lo": "U+1F600", "hi": "1F601"}], "body": [], "emotion": []}}})");
  ASSERT_TRUE(lex.ok()) << lex.status();
  EXPECT_EQ(lex->stage_verbs, StringSet{"kick"});
  EXPECT_EQ(lex->vocalics_terms, DefaultLexicons().vocalics_terms);
  ASSERT_NE(lex->FindProfile("mine"), nullptr);
  ASSERT_NE(lex->FindProfile("paper"), nullptr);
  EXPECT_EQ(lex->FindProfile("mine")->Classify(0x1F601), CueSubcategory::kFacialExpression);
}

TEST(CueModelTest, LexiconJsonErrors) {
  EXPECT_FALSE(LexiconFromJson("{").ok());
  EXPECT_FALSE(LexiconFromJson("[]").ok());
  EXPECT_FALSE(LexiconFromJson(R"({"stage_verbs": ["Hug"]})").ok());
  EXPECT_FALSE(LexiconFromJson(R"({"stage_verbs": ["two words"]})").ok());
  EXPECT_FALSE(LexiconFromJson(R"({"vocalics_terms": ["u+gh"]})").ok());
  EXPECT_FALSE(LexiconFromJson(R"({"acronym_stoplist": ["nasa"]})").ok());
  EXPECT_FALSE(LexiconFromJson(R"({"surprise": 1})").ok());
  EXPECT_FALSE(LexiconFromJson(
                   R"({"emoji_profiles": {"bad": {"facial": [{"lo": "1F601", "hi": "1F600"}]}}})")
                   .ok());
  EXPECT_FALSE(LexiconFromJson(R"({"emoji_profiles": {"bad": {"facial": [
      {"lo": "1F600", "hi": "1F610"}, {"lo": "1F605", "hi": "1F620"}]}}})")
                   .ok());
  auto unknown = LoadLexiconFile("/nonexistent/lexicon.json");
  EXPECT_FALSE(unknown.ok());
}

}  // namespace
}  // namespace envc
