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

#include "envc/api.h"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "envc/corpus.h"
#include "fuzz_text.h"
#include "json.hpp"

namespace envc {
namespace {

using json = nlohmann::ordered_json;

TEST(OptionsTest, DefaultsAndOverrides) {
  auto cfg = DetectorConfigFromOptions("");
  ASSERT_TRUE(cfg.ok());
  EXPECT_EQ(cfg->min_caps_run, 3);
  cfg = DetectorConfigFromOptions(
      R"({"min_caps_run": 2, "emoji_profile_name": "extended", "all_caps_exclusion": false,
          "all_caps_ratio": 0.8, "all_caps_min_words": 4, "punct_min_repeat": 3,
          "elongation_min_repeat": 4})");
  ASSERT_TRUE(cfg.ok()) << cfg.status();
  EXPECT_EQ(cfg->min_caps_run, 2);
  EXPECT_EQ(cfg->emoji_profile_name, "extended");
  EXPECT_FALSE(cfg->all_caps_exclusion);
  EXPECT_DOUBLE_EQ(cfg->all_caps_ratio, 0.8);
  EXPECT_EQ(cfg->all_caps_min_words, 4);
  EXPECT_EQ(cfg->punct_min_repeat, 3);
  EXPECT_EQ(cfg->elongation_min_repeat, 4);

  auto lex = DetectorConfigFromOptions(R"({"lexicon": {"vocalics_terms": ["blah"]}})");
  ASSERT_TRUE(lex.ok()) << lex.status();
  EXPECT_EQ(lex->lexicon.vocalics_terms, StringSet{"blah"});
}

TEST(OptionsTest, ErrorsNameTheKey) {
  const std::pair<const char*, const char*> cases[] = {
      {R"({"min_caps": 2})", "min_caps"},
      {R"({"min_caps_run": "two"})", "min_caps_run"},
      {R"({"min_caps_run": 1})", "min_caps_run"},
      {R"({"emoji_profile_name": "nope"})", "nope"},
      {R"({"all_caps_exclusion": 1})", "all_caps_exclusion"},
      {R"({"lexicon": "/does/not/exist.json"})", "/does/not/exist.json"},
      {R"([1, 2])", "object"},
      {R"({"rules": ["emoji_delete"]})", "rules"},
  };
  for (const auto& [options, needle] : cases) {
    const auto cfg = DetectorConfigFromOptions(options);
    ASSERT_FALSE(cfg.ok()) << options;
    EXPECT_NE(std::string(cfg.status().message()).find(needle), std::string::npos)
        << options << ": " << cfg.status();
  }
  EXPECT_FALSE(DetectorConfigFromOptions("{not json").ok());
}

TEST(OptionsTest, StripRules) {
  auto cfg = StripConfigFromOptions(R"({"rules": ["punct_collapse"], "min_caps_run": 4})");
  ASSERT_TRUE(cfg.ok()) << cfg.status();
  EXPECT_EQ(cfg->rules_enabled, std::set<StripRule>{StripRule::kPunctCollapse});
  EXPECT_EQ(cfg->detector_cfg.min_caps_run, 4);
  EXPECT_FALSE(StripConfigFromOptions(R"({"rules": ["nope"]})").ok());
  EXPECT_FALSE(StripConfigFromOptions(R"({"rules": "punct_collapse"})").ok());
}

TEST(ApiTest, Examples) {
  auto ann = AnnotateToJson("soooo good", "");
  ASSERT_TRUE(ann.ok());
  const json j = json::parse(*ann);
  ASSERT_EQ(j["spans"].size(), 1u);
  EXPECT_EQ(j["spans"][0]["subcategory"], "PitchElongation");
  EXPECT_EQ(json::parse(*AnnotateToJson("", ""))["spans"].size(), 0u);

  auto stripped = StripToJson("Today is Friday!!!!!!", "");
  ASSERT_TRUE(stripped.ok());
  EXPECT_EQ(json::parse(*stripped)["output"], "Today is Friday!");
  EXPECT_EQ(json::parse(*StripToJson("plain", ""))["output"], "plain");
  EXPECT_FALSE(AnnotateToJson("x", R"({"bogus": 1})").ok());
}

// Parity oracle: the CLI run in-process on the same input.
std::string RunCli(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::Run(args, out, err);
  return out.str();
}

TEST(ParityTest, AnnotateMatchesCliOnSyntheticCorpus) {
  const std::string corpus = std::string(ENVC_SOURCE_DIR) + "/data/synthetic_corpus.jsonl";
  int code = -1;
  const std::string cli = RunCli({"annotate", "--in", corpus, "--profile", "extended"}, &code);
  ASSERT_EQ(code, 0);
  auto posts = ReadPosts(corpus, PostFormat::kJsonl);
  ASSERT_TRUE(posts.ok());
  std::string api;
  for (const Post& p : *posts) {
    auto line = AnnotateToJson(p.text, R"({"emoji_profile_name":"extended"})", p.post_id);
    ASSERT_TRUE(line.ok());
    api += *line + "\n";
  }
  EXPECT_EQ(api, cli);
}

TEST(ParityTest, FuzzTextsMatchCli) {
  for (const std::string& text : testing::FuzzCorpus(404, 150)) {
    // The "=" form keeps texts that start with '-' from parsing as flags.
    const std::string text_arg = text.empty() ? "--text" : "--text=" + text;
    std::vector<std::string> ann_args = {"annotate", text_arg, "--min-caps-run", "2"};
    std::vector<std::string> strip_args = {"strip", text_arg, "--json"};
    if (text.empty()) {
      ann_args.insert(ann_args.begin() + 2, "");
      strip_args.insert(strip_args.begin() + 2, "");
    }
    int code = -1;
    const std::string cli_ann = RunCli(ann_args, &code);
    ASSERT_EQ(code, 0) << text;
    auto api_ann = AnnotateToJson(text, R"({"min_caps_run":2})");
    ASSERT_TRUE(api_ann.ok());
    EXPECT_EQ(*api_ann + "\n", cli_ann) << text;

    const std::string cli_strip = RunCli(strip_args, &code);
    ASSERT_EQ(code, 0) << text;
    auto api_strip = StripToJson(text, "");
    ASSERT_TRUE(api_strip.ok());
    EXPECT_EQ(*api_strip + "\n", cli_strip) << text;
  }
}

}  // namespace
}  // namespace envc
