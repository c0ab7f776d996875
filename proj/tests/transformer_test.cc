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

#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "fuzz_text.h"

namespace envc {
namespace {

std::string StripAll(std::string_view text) { return Strip(text, StripConfig()).output; }

TEST(StripTest, Examples) {
  EXPECT_EQ(StripAll("Today is Friday!!!!!! thankkkkk goood"), "Today is Friday! thank good");
  EXPECT_EQ(StripAll("singing is a wonderful remedy."), "singing is a wonderful remedy.");
  EXPECT_EQ(StripAll("EXAAAAAAAAMS \U0001F629"), "Exams");
  EXPECT_EQ(StripAll("Today is Friday!!!!!!"), "Today is Friday!");
  EXPECT_EQ(StripAll("plain"), "plain");
  EXPECT_EQ(StripAll(""), "");
}

TEST(StripTest, EachRule) {
  EXPECT_EQ(StripAll("so happy \U0001F604\U0001F604 today"), "so happy today");
  EXPECT_EQ(StripAll("*hugs* see you soon"), "see you soon");
  EXPECT_EQ(StripAll("ok lol that works"), "ok that works");
  EXPECT_EQ(StripAll("ugh, mondays"), ", mondays");
  EXPECT_EQ(StripAll("this is soooo cool"), "this is so cool");
  EXPECT_EQ(StripAll("that is NOT fine"), "that is not fine");
  EXPECT_EQ(StripAll("STOP it now"), "Stop it now");
  EXPECT_EQ(StripAll("wait what?!?"), "wait what?");
  EXPECT_EQ(StripAll("well... fine"), "well. fine");
  EXPECT_EQ(StripAll("  spaced   out  ,  words "), "spaced out, words");
  EXPECT_EQ(StripAll("in 1999 it was fine"), "in 1999 it was fine");
}

TEST(StripTest, RemovalsReferToOriginalText) {
  const std::string text = "\U0001F629 gawd soooo TIRED!!!";
  const StripReport report = Strip(text, StripConfig());
  const Utf8Text original(text);
  ASSERT_EQ(report.removals.size(), 5u);
  EXPECT_EQ(report.removals[0].rule, StripRule::kEmojiDelete);
  EXPECT_EQ(report.removals[1].rule, StripRule::kVocalicsDelete);
  EXPECT_EQ(report.removals[1].span.surface, "gawd");
  EXPECT_EQ(report.removals[2].rule, StripRule::kElongationCollapse);
  EXPECT_EQ(report.removals[3].rule, StripRule::kCapsFold);
  EXPECT_EQ(report.removals[4].rule, StripRule::kPunctCollapse);
  for (const Removal& r : report.removals) {
    EXPECT_EQ(original.Slice(r.span.start, r.span.end), r.span.surface);
  }
  EXPECT_EQ(report.output, "so tired!");
}

TEST(StripTest, DisabledRulesLeaveCuesAlone) {
  StripConfig cfg;
  cfg.rules_enabled = {StripRule::kPunctCollapse};
  EXPECT_EQ(Strip("NO way!!! \U0001F604", cfg).output, "NO way! \U0001F604");
  cfg.rules_enabled.clear();
  EXPECT_EQ(Strip("NO   way!!!", cfg).output, "NO   way!!!");
  EXPECT_TRUE(Strip("NO   way!!!", cfg).removals.empty());
}

TEST(StripTest, RuleNamesRoundTrip) {
  for (StripRule r : kAllStripRules) EXPECT_EQ(ParseStripRule(StripRuleName(r)), r);
  EXPECT_FALSE(ParseStripRule("emoji").has_value());
}

TEST(VerifyStrippedTest, Examples) {
  EXPECT_TRUE(VerifyStripped("EXAAAAAAAAMS \U0001F629", StripConfig()));
  EXPECT_TRUE(VerifyStripped("", StripConfig()));
  EXPECT_TRUE(VerifyStripped("plain words only", StripConfig()));
  StripConfig no_emoji;
  no_emoji.rules_enabled.erase(StripRule::kEmojiDelete);
  EXPECT_FALSE(VerifyStripped("nice \U0001F604", no_emoji));
}

// Lowercased maximal ASCII letter runs, with scalar offsets.
struct Word {
  std::string lower;
  size_t start;
  size_t end;
};

std::vector<Word> Words(const Utf8Text& t) {
  std::vector<Word> out;
  for (size_t i = 0; i < t.size();) {
    if (!IsAsciiLetter(t[i])) {
      ++i;
      continue;
    }
    Word w{"", i, i};
    while (i < t.size() && IsAsciiLetter(t[i])) {
      w.lower += static_cast<char>(AsciiToLower(t[i]));
      ++i;
    }
    w.end = i;
    out.push_back(std::move(w));
  }
  return out;
}

TEST(StripPropertyTest, FuzzedInvariants) {
  const StripConfig cfg;
  for (const char* profile : {"paper", "extended"}) {
    StripConfig c = cfg;
    c.detector_cfg.emoji_profile_name = profile;
    for (const std::string& text : testing::FuzzCorpus(2024, 2500, 14)) {
      const StripReport report = Strip(text, c);
      // Idempotence and cue elimination.
      ASSERT_EQ(Strip(report.output, c).output, report.output) << text;
      ASSERT_TRUE(Annotate("", report.output, c.detector_cfg).spans.empty())
          << text << " -> " << report.output;

      const Utf8Text in(text);
      const Utf8Text out(report.output);
      ASSERT_LE(out.size(), in.size()) << text;

      // Words that neither overlap nor touch a removal survive, up to case.
      std::map<std::string, int> survivors;
      for (const Word& w : Words(in)) {
        bool touched = false;
        for (const Removal& r : report.removals) {
          touched |= w.start <= r.span.end && r.span.start <= w.end;
        }
        if (!touched) survivors[w.lower] += 1;
      }
      for (const Word& w : Words(out)) {
        auto it = survivors.find(w.lower);
        if (it != survivors.end() && it->second > 0) --it->second;
      }
      for (const auto& [word, left] : survivors) {
        ASSERT_EQ(left, 0) << "lost '" << word << "' in " << text << " -> " << report.output;
      }
    }
  }
}

TEST(StripPropertyTest, InvalidUtf8DoesNotCrash) {
  for (const std::string& text : testing::FuzzCorpus(31, 1000, 10, /*allow_invalid=*/true)) {
    const StripReport report = Strip(text, StripConfig());
    ASSERT_EQ(Strip(report.output, StripConfig()).output, report.output) << text;
  }
}

}  // namespace
}  // namespace envc
