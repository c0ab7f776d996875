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

#include "envc/corpus.h"
#include "json.hpp"
#include "strings.h"

namespace envc {
namespace {

using json = nlohmann::ordered_json;

absl::Status TypeError(std::string_view key, std::string_view want) {
  return absl::InvalidArgumentError(StrCat("option '", key, "' must be ", want));
}

absl::Status IntOption(const json& v, std::string_view key, int* out) {
  if (!v.is_number_integer()) return TypeError(key, "an integer");
  const int64_t x = v.get<int64_t>();
  if (x < -1000000 || x > 1000000) return TypeError(key, "an integer of moderate size");
  *out = static_cast<int>(x);
  return absl::OkStatus();
}

// Applies one detector option; `known` is cleared for keys outside the
// detector vocabulary.
absl::Status ApplyDetectorOption(const std::string& key, const json& v, DetectorConfig* cfg,
                                 bool* known) {
  *known = true;
  if (key == "lexicon") {
    absl::StatusOr<Lexicon> lex;
    if (v.is_string()) {
      lex = LoadLexiconFile(v.get<std::string>());
    } else if (v.is_object()) {
      lex = LexiconFromJson(v.dump());
    } else {
      return TypeError(key, "a file path or an object");
    }
    if (!lex.ok()) {
      return absl::InvalidArgumentError(StrCat("option 'lexicon': ", lex.status().message()));
    }
    cfg->lexicon = *std::move(lex);
    return absl::OkStatus();
  }
  if (key == "min_caps_run") return IntOption(v, key, &cfg->min_caps_run);
  if (key == "elongation_min_repeat") return IntOption(v, key, &cfg->elongation_min_repeat);
  if (key == "punct_min_repeat") return IntOption(v, key, &cfg->punct_min_repeat);
  if (key == "all_caps_min_words") return IntOption(v, key, &cfg->all_caps_min_words);
  if (key == "emoji_profile_name") {
    if (!v.is_string()) return TypeError(key, "a string");
    cfg->emoji_profile_name = v.get<std::string>();
    return absl::OkStatus();
  }
  if (key == "all_caps_exclusion") {
    if (!v.is_boolean()) return TypeError(key, "a boolean");
    cfg->all_caps_exclusion = v.get<bool>();
    return absl::OkStatus();
  }
  if (key == "all_caps_ratio") {
    if (!v.is_number()) return TypeError(key, "a number");
    cfg->all_caps_ratio = v.get<double>();
    return absl::OkStatus();
  }
  *known = false;
  return absl::OkStatus();
}

absl::StatusOr<json> ParseOptions(std::string_view options_json) {
  if (StripAsciiWhitespace(options_json).empty()) return json::object();
  json doc = json::parse(options_json, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return absl::InvalidArgumentError("options: malformed JSON");
  if (!doc.is_object()) return absl::InvalidArgumentError("options: must be a JSON object");
  return doc;
}

absl::StatusOr<DetectorConfig> Finish(DetectorConfig cfg) {
  auto made = MakeDetectorConfig(std::move(cfg));
  if (!made.ok()) {
    return absl::InvalidArgumentError(StrCat("options: ", made.status().message()));
  }
  return made;
}

}  // namespace

absl::StatusOr<DetectorConfig> DetectorConfigFromOptions(std::string_view options_json) {
  auto doc = ParseOptions(options_json);
  if (!doc.ok()) return doc.status();
  DetectorConfig cfg;
  for (const auto& [key, value] : doc->items()) {
    bool known;
    if (auto s = ApplyDetectorOption(key, value, &cfg, &known); !s.ok()) return s;
    if (!known) return absl::InvalidArgumentError(StrCat("unknown option '", key, "'"));
  }
  return Finish(std::move(cfg));
}

absl::StatusOr<StripConfig> StripConfigFromOptions(std::string_view options_json) {
  auto doc = ParseOptions(options_json);
  if (!doc.ok()) return doc.status();
  StripConfig cfg;
  for (const auto& [key, value] : doc->items()) {
    if (key == "rules") {
      if (!value.is_array()) return TypeError(key, "a list of rule names");
      cfg.rules_enabled.clear();
      for (const json& r : value) {
        if (!r.is_string()) return TypeError(key, "a list of rule names");
        auto rule = ParseStripRule(r.get<std::string>());
        if (!rule) {
          return absl::InvalidArgumentError(
              StrCat("option 'rules': unknown rule '", r.get<std::string>(), "'"));
        }
        cfg.rules_enabled.insert(*rule);
      }
      continue;
    }
    bool known;
    if (auto s = ApplyDetectorOption(key, value, &cfg.detector_cfg, &known); !s.ok()) return s;
    if (!known) return absl::InvalidArgumentError(StrCat("unknown option '", key, "'"));
  }
  auto det = Finish(std::move(cfg.detector_cfg));
  if (!det.ok()) return det.status();
  cfg.detector_cfg = *std::move(det);
  return cfg;
}

std::string StripReportToJson(const StripReport& report) {
  json j;
  j["output"] = report.output;
  json removals = json::array();
  for (const Removal& r : report.removals) {
    json rj;
    rj["rule"] = StripRuleName(r.rule);
    rj["start"] = r.span.start;
    rj["end"] = r.span.end;
    rj["surface"] = r.span.surface;
    rj["subcategory"] = SubcategoryName(r.span.subcategory);
    removals.push_back(std::move(rj));
  }
  j["removals"] = std::move(removals);
  return j.dump(-1, ' ', /*ensure_ascii=*/false, json::error_handler_t::replace);
}

absl::StatusOr<std::string> AnnotateToJson(std::string_view text, std::string_view options_json,
                                           std::string post_id) {
  auto cfg = DetectorConfigFromOptions(options_json);
  if (!cfg.ok()) return cfg.status();
  return AnnotatedPostToJson(Annotate(std::move(post_id), text, *cfg));
}

absl::StatusOr<std::string> StripToJson(std::string_view text, std::string_view options_json) {
  auto cfg = StripConfigFromOptions(options_json);
  if (!cfg.ok()) return cfg.status();
  return StripReportToJson(Strip(text, *cfg));
}

}  // namespace envc
