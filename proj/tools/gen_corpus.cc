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

// Writes a synthetic corpus with planted cues and the per-subcategory counts
// implied by construction. Filler words are lowercase dictionary words that
// trigger no detector; post k carries k % 4 planted cues.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "envc/cue_model.h"
#include "envc/rng.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using envc::CueSubcategory;

constexpr const char* kFiller[] = {
    "the",   "we",      "went",    "to",     "park",    "after",     "class",    "and",
    "it",    "was",     "fine",    "my",     "friend",  "said",      "she",      "would",
    "call",  "later",   "weather", "today",  "feels",   "different", "coffee",   "shop",
    "on",    "corner",  "finally", "opened", "bus",     "late",      "again",    "think",
    "new",   "phone",   "works",   "dinner", "plans",   "maybe",     "tomorrow", "train",
    "paper", "library", "rain",    "window", "morning", "weekend",   "garden",   "music",
};

struct Plant {
  CueSubcategory sub;
  const char* surface;
  bool attach;  // glued to the previous word instead of standing alone
};

const std::vector<Plant>& Plants() {
  static const std::vector<Plant> kPlants = {
      {CueSubcategory::kBodyMovement, "*wave*", false},
      {CueSubcategory::kBodyMovement, "*claps*", false},
      {CueSubcategory::kBodyMovement, "*shrug*", false},
      {CueSubcategory::kBodyMovement, "\U0001F431", false},
      {CueSubcategory::kBodyMovement, "\U0001F44D", false},
      {CueSubcategory::kTouch, "*hug*", false},
      {CueSubcategory::kTouch, "*hugs*", false},
      {CueSubcategory::kTouch, "*leans in*", false},
      {CueSubcategory::kEyeMovement, "*wink*", false},
      {CueSubcategory::kEyeMovement, "*squints*", false},
      {CueSubcategory::kFacialExpression, "\U0001F604", false},
      {CueSubcategory::kFacialExpression, "\U0001F602", false},
      {CueSubcategory::kFacialExpression, "\U0001F914", false},
      {CueSubcategory::kEmotionEmoji, "\U0001F970", false},
      {CueSubcategory::kEmotionEmoji, "\U0001F97A", false},
      {CueSubcategory::kEmotionEmoji, "\U0001F9E1", false},
      {CueSubcategory::kVocalics, "lol", false},
      {CueSubcategory::kVocalics, "ugh", false},
      {CueSubcategory::kVocalics, "hmmm", false},
      {CueSubcategory::kVocalics, "haha", false},
      {CueSubcategory::kVocalics, "sigh", false},
      {CueSubcategory::kVocalics, "LoL", false},
      {CueSubcategory::kVolumeCaps, "REALLY", false},
      {CueSubcategory::kVolumeCaps, "NEVER", false},
      {CueSubcategory::kVolumeCaps, "STOP", false},
      {CueSubcategory::kVolumePunct, "!!!", true},
      {CueSubcategory::kVolumePunct, "??", true},
      {CueSubcategory::kVolumePunct, "?!", true},
      {CueSubcategory::kVolumePunct, "...", true},
      {CueSubcategory::kPitchElongation, "sooooo", false},
      {CueSubcategory::kPitchElongation, "noooo", false},
      {CueSubcategory::kPitchElongation, "yesss", false},
      {CueSubcategory::kPitchElongation, "pleaseee", false},
      {CueSubcategory::kPitchAltCase, "HiYa", false},
      {CueSubcategory::kPitchAltCase, "wHaTeVeR", false},
      {CueSubcategory::kPitchAltCase, "SoRrY", false},
  };
  return kPlants;
}

constexpr const char* kEmotions[] = {"happy", "sad", "angry", "stressed", "calm"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the planted-cue synthetic corpus", "envc_gen_corpus"};
  int posts = 200;
  uint64_t seed = 20260101;
  std::string corpus_path, counts_path;
  app.add_option("--posts", posts, "Number of posts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--corpus", corpus_path, "Output JSONL corpus")->required();
  app.add_option("--counts", counts_path, "Output JSON with planted counts")->required();
  CLI11_PARSE(app, argc, argv);

  // Subcategories are drawn from one stream and surfaces from another so that
  // the pool of surfaces can grow without shifting the subcategory mix.
  envc::SplitMix64 pick_sub = envc::DeriveStream(seed, 0);
  envc::SplitMix64 pick_surface = envc::DeriveStream(seed, 1);
  envc::SplitMix64 pick_words = envc::DeriveStream(seed, 2);

  std::vector<std::vector<const Plant*>> by_sub(envc::kNumSubcategories);
  for (const Plant& p : Plants()) by_sub[envc::Ordinal(p.sub)].push_back(&p);

  envc::SubcategoryCounts planted;
  int64_t with_cue = 0;
  std::ofstream corpus(corpus_path, std::ios::binary | std::ios::trunc);
  if (!corpus) {
    std::cerr << corpus_path << ": cannot open for writing\n";
    return 2;
  }
  for (int k = 0; k < posts; ++k) {
    const int n_words = 6 + static_cast<int>(pick_words.Uniform(7));
    std::vector<std::string> words;
    for (int w = 0; w < n_words; ++w) {
      words.emplace_back(kFiller[pick_words.Uniform(std::size(kFiller))]);
    }
    words[0][0] = static_cast<char>(words[0][0] - 'a' + 'A');

    const int n_plants = k % 4;
    for (int p = 0; p < n_plants; ++p) {
      const auto& pool = by_sub[pick_sub.Uniform(envc::kNumSubcategories)];
      const Plant& plant = *pool[pick_surface.Uniform(pool.size())];
      planted[plant.sub] += 1;
      // Plants go right after a filler word, so an attached plant always has
      // a plain word before it.
      size_t slot;
      do {
        slot = 1 + pick_words.Uniform(words.size());
      } while (words[slot - 1].front() == '\x01');
      if (plant.attach) {
        // Mark the word so later plants avoid it.
        words[slot - 1] = "\x01" + words[slot - 1] + plant.surface;
      } else {
        words.insert(words.begin() + static_cast<std::ptrdiff_t>(slot),
                     std::string("\x01") + plant.surface);
      }
    }
    if (n_plants > 0) ++with_cue;

    std::string text;
    for (size_t w = 0; w < words.size(); ++w) {
      if (w > 0) text += ' ';
      text += words[w][0] == '\x01' ? words[w].substr(1) : words[w];
    }
    json j;
    char id[16];
    std::snprintf(id, sizeof(id), "syn-%03d", k + 1);
    j["post_id"] = id;
    j["text"] = text;
    j["emotion"] = kEmotions[k % 5];
    j["sarcastic"] = (k / 5) % 2 == 1;
    corpus << j.dump(-1, ' ', false) << "\n";
  }

  json counts;
  counts["posts_total"] = posts;
  counts["posts_with_any_cue"] = with_cue;
  json per = json::object();
  for (CueSubcategory s : envc::kAllSubcategories) {
    per[std::string(envc::SubcategoryName(s))] = planted[s];
  }
  counts["per_subcategory"] = per;
  std::ofstream counts_out(counts_path, std::ios::binary | std::ios::trunc);
  if (!counts_out) {
    std::cerr << counts_path << ": cannot open for writing\n";
    return 2;
  }
  counts_out << counts.dump(2) << "\n";
  return 0;
}
