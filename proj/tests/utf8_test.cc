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

#include "envc/utf8.h"

#include <gtest/gtest.h>

#include "envc/rng.h"

namespace envc {
namespace {

TEST(Utf8Test, DecodesMixedWidthScalars) {
  const Utf8Text t("aé€\U0001F604");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0], U'a');
  EXPECT_EQ(t[1], U'é');
  EXPECT_EQ(t[2], U'€');
  EXPECT_EQ(t[3], U'\U0001F604');
  EXPECT_EQ(t.Slice(1, 3), "é€");
  EXPECT_EQ(t.Slice(3, 4), "\U0001F604");
  EXPECT_EQ(t.Slice(2, 2), "");
}

TEST(Utf8Test, EmptyText) {
  const Utf8Text t("");
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.Slice(0, 0), "");
}

TEST(Utf8Test, InvalidBytesBecomeOneReplacementEach) {
  const std::string bytes = "a\xff\xc3z\xe2\x82";
  const Utf8Text t(bytes);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[1], U'�');
  EXPECT_EQ(t[2], U'�');
  EXPECT_EQ(t[3], U'z');
  EXPECT_EQ(t[4], U'\uFFFD');
  EXPECT_EQ(t[5], U'\uFFFD');
  EXPECT_EQ(t.Slice(0, t.size()), bytes);
  EXPECT_FALSE(IsValidUtf8(bytes));
}

TEST(Utf8Test, RejectsOverlongAndSurrogates) {
  EXPECT_FALSE(IsValidUtf8("\xc0\xaf"));
  EXPECT_FALSE(IsValidUtf8("\xed\xa0\x80"));
  EXPECT_FALSE(IsValidUtf8("\xf4\x90\x80\x80"));
  EXPECT_TRUE(IsValidUtf8("\xf4\x8f\xbf\xbf"));
}

// Oracle: the scalars we encode are the scalars we must decode.
TEST(Utf8Test, RoundTripsRandomScalars) {
  SplitMix64 rng(99);
  for (int iter = 0; iter < 2000; ++iter) {
    std::u32string cps;
    const int n = static_cast<int>(rng.Uniform(20));
    for (int i = 0; i < n; ++i) {
      char32_t cp;
      do {
        cp = static_cast<char32_t>(rng.Uniform(0x110000));
      } while (cp >= 0xD800 && cp <= 0xDFFF);
      cps.push_back(cp);
    }
    const std::string bytes = EncodeUtf8(cps);
    ASSERT_TRUE(IsValidUtf8(bytes));
    const Utf8Text t(bytes);
    ASSERT_EQ(t.scalars(), cps);
    // Slices concatenate back to the whole.
    std::string joined;
    for (size_t i = 0; i < t.size(); ++i) joined += t.Slice(i, i + 1);
    ASSERT_EQ(joined, bytes);
  }
}

}  // namespace
}  // namespace envc
