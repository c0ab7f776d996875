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

#include "envc/experiment.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "envc/csv.h"
#include "envc/rng.h"
#include "json.hpp"
#include "strings.h"

namespace envc {
namespace {

using json = nlohmann::ordered_json;

std::string Dump(const json& j, int indent = -1) {
  return j.dump(indent, ' ', /*ensure_ascii=*/false, json::error_handler_t::replace);
}

absl::StatusOr<std::string> StringField(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    return absl::InvalidArgumentError(StrCat("missing or non-string field '", key, "'"));
  }
  return it->get<std::string>();
}

json Interval(const std::pair<double, double>& ci) { return json::array({ci.first, ci.second}); }

}  // namespace

std::string_view CueConditionName(CueCondition c) {
  return c == CueCondition::kPresent ? "Present" : "Removed";
}

std::string_view CellName(size_t cell) {
  static constexpr std::string_view kNames[kNumCells] = {"literal_present", "literal_removed",
                                                         "sarcastic_present", "sarcastic_removed"};
  return cell < kNumCells ? kNames[cell] : "";
}

std::string StimulusItemToJson(const StimulusItem& item) {
  json j;
  j["item_id"] = item.item_id;
  j["source_post_id"] = item.source_post_id;
  j["emotion"] = item.emotion;
  j["sarcastic"] = item.sarcastic;
  j["cue_condition"] = CueConditionName(item.cue_condition);
  j["rendered_text"] = item.rendered_text;
  return Dump(j);
}

absl::StatusOr<StimulusItem> StimulusItemFromJson(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return absl::InvalidArgumentError("not a JSON object");
  StimulusItem item;
  for (auto [key, dst] :
       {std::pair{"item_id", &item.item_id}, std::pair{"source_post_id", &item.source_post_id},
        std::pair{"emotion", &item.emotion}, std::pair{"rendered_text", &item.rendered_text}}) {
    auto v = StringField(j, key);
    if (!v.ok()) return v.status();
    *dst = *std::move(v);
  }
  auto sarc = j.find("sarcastic");
  if (sarc == j.end() || !sarc->is_boolean()) {
    return absl::InvalidArgumentError("missing or non-boolean field 'sarcastic'");
  }
  item.sarcastic = sarc->get<bool>();
  auto cond = StringField(j, "cue_condition");
  if (!cond.ok()) return cond.status();
  if (*cond == "Present") {
    item.cue_condition = CueCondition::kPresent;
  } else if (*cond == "Removed") {
    item.cue_condition = CueCondition::kRemoved;
  } else {
    return absl::InvalidArgumentError(
        StrCat("cue_condition '", *cond, "' is neither Present nor Removed"));
  }
  return item;
}

absl::StatusOr<std::vector<StimulusItem>> ReadStimuliJsonl(std::istream& in,
                                                           const std::string& name) {
  std::vector<StimulusItem> items;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (StripAsciiWhitespace(line).empty()) continue;
    auto item = StimulusItemFromJson(line);
    if (!item.ok()) {
      return absl::InvalidArgumentError(StrCat(name, ":", line_no, ": ", item.status().message()));
    }
    items.push_back(*std::move(item));
  }
  if (in.bad()) return absl::DataLossError(StrCat(name, ": read error"));
  return items;
}

bool SameLabel(std::string_view a, std::string_view b) {
  return EqualsIgnoreCase(StripAsciiWhitespace(a), StripAsciiWhitespace(b));
}

bool IsUncertainSelection(std::string_view selected) { return SameLabel(selected, "Uncertain"); }

absl::StatusOr<std::vector<StimulusItem>> BuildDesign(const std::vector<Post>& posts,
                                                      const std::vector<std::string>& emotions,
                                                      int items_per_cell,
                                                      const StripConfig& strip_cfg, uint64_t seed) {
  if (items_per_cell < 1) {
    return absl::InvalidArgumentError(StrCat("items_per_cell must be >= 1, got ", items_per_cell));
  }
  if (auto st = strip_cfg.detector_cfg.Validate(); !st.ok()) return st;
  for (size_t i = 0; i < emotions.size(); ++i) {
    if (StripAsciiWhitespace(emotions[i]).empty()) {
      return absl::InvalidArgumentError(StrCat("emotion #", i + 1, " is empty"));
    }
    for (size_t k = 0; k < i; ++k) {
      if (SameLabel(emotions[i], emotions[k])) {
        return absl::InvalidArgumentError(StrCat("emotion '", emotions[i], "' listed twice"));
      }
    }
  }

  // Cue detection is shared across strata, so do it once per labelled post.
  std::vector<bool> has_cue(posts.size(), false);
  for (size_t i = 0; i < posts.size(); ++i) {
    if (!posts[i].emotion || !posts[i].sarcastic) continue;
    has_cue[i] = !Annotate(posts[i].post_id, posts[i].text, strip_cfg.detector_cfg).spans.empty();
  }

  std::vector<StimulusItem> items;
  uint64_t stratum = 0;
  for (const std::string& emotion : emotions) {
    const std::string label = AsciiStrToLower(StripAsciiWhitespace(emotion));
    for (bool sarcastic : {false, true}) {
      const std::string stratum_name =
          StrCat("emotion=", emotion, ", sarcastic=", sarcastic ? "true" : "false");
      std::vector<size_t> eligible;
      for (size_t i = 0; i < posts.size(); ++i) {
        if (has_cue[i] && *posts[i].sarcastic == sarcastic &&
            SameLabel(*posts[i].emotion, emotion)) {
          eligible.push_back(i);
        }
      }
      if (eligible.size() < static_cast<size_t>(items_per_cell)) {
        return absl::FailedPreconditionError(
            StrCat("stratum (", stratum_name, ") has ", eligible.size(),
                   " eligible posts with cues, need ", items_per_cell));
      }
      SplitMix64 rng = DeriveStream(seed, stratum++);
      for (size_t k = 0; k < static_cast<size_t>(items_per_cell); ++k) {
        std::swap(eligible[k], eligible[k + rng.Uniform(eligible.size() - k)]);
      }
      std::vector<size_t> chosen(eligible.begin(), eligible.begin() + items_per_cell);
      std::sort(chosen.begin(), chosen.end());

      for (size_t k = 0; k < chosen.size(); ++k) {
        const Post& post = posts[chosen[k]];
        StripReport stripped = Strip(post.text, strip_cfg);
        if (stripped.output == post.text) {
          return absl::FailedPreconditionError(StrCat("post ", post.post_id, " (", stratum_name,
                                                      "): stripping leaves the text unchanged"));
        }
        if (!Annotate(post.post_id, stripped.output, strip_cfg.detector_cfg).spans.empty()) {
          return absl::InternalError(
              StrCat("post ", post.post_id, ": cues remain after stripping"));
        }
        const std::string base =
            StrCat(label, "-", sarcastic ? "sarcastic" : "literal", "-", k + 1);
        items.push_back({StrCat(base, "-P"), post.post_id, emotion, sarcastic,
                         CueCondition::kPresent, post.text});
        items.push_back({StrCat(base, "-R"), post.post_id, emotion, sarcastic,
                         CueCondition::kRemoved, std::move(stripped.output)});
      }
    }
  }
  return items;
}

absl::StatusOr<std::vector<ResponseRecord>> ReadResponsesCsv(std::istream& in,
                                                             const std::string& name) {
  CsvReader reader(in);
  auto header = reader.Next();
  if (!header.ok()) {
    return absl::InvalidArgumentError(StrCat(name, ": ", header.status().message()));
  }
  std::vector<ResponseRecord> out;
  if (!header->has_value()) return out;
  std::map<std::string, size_t> columns;
  for (size_t i = 0; i < (*header)->fields.size(); ++i) {
    columns[AsciiStrToLower(StripAsciiWhitespace((*header)->fields[i]))] = i;
  }
  size_t idx[3];
  const char* required[3] = {"participant_id", "item_id", "selected"};
  for (int c = 0; c < 3; ++c) {
    auto it = columns.find(required[c]);
    if (it == columns.end()) {
      return absl::InvalidArgumentError(
          StrCat(name, ":", (*header)->line, ": header lacks column '", required[c], "'"));
    }
    idx[c] = it->second;
  }
  const size_t width = *std::max_element(std::begin(idx), std::end(idx)) + 1;
  while (true) {
    auto rec = reader.Next();
    if (!rec.ok()) {
      return absl::InvalidArgumentError(StrCat(name, ": ", rec.status().message()));
    }
    if (!rec->has_value()) break;
    const CsvRecord& r = **rec;
    if (r.fields.size() < width) {
      return absl::InvalidArgumentError(StrCat(name, ":", r.line, ": expected at least ", width,
                                               " fields, got ", r.fields.size()));
    }
    ResponseRecord resp;
    resp.participant_id = std::string(StripAsciiWhitespace(r.fields[idx[0]]));
    resp.item_id = std::string(StripAsciiWhitespace(r.fields[idx[1]]));
    resp.selected = r.fields[idx[2]];
    if (resp.participant_id.empty() || resp.item_id.empty()) {
      return absl::InvalidArgumentError(
          StrCat(name, ":", r.line, ": empty participant_id or item_id"));
    }
    resp.is_uncertain = IsUncertainSelection(resp.selected);
    out.push_back(std::move(resp));
  }
  return out;
}

namespace {

absl::StatusOr<std::unordered_map<std::string, const StimulusItem*>> IndexItems(
    const std::vector<StimulusItem>& items) {
  std::unordered_map<std::string, const StimulusItem*> by_id;
  for (const StimulusItem& item : items) {
    if (!by_id.emplace(item.item_id, &item).second) {
      return absl::InvalidArgumentError(StrCat("duplicate item_id '", item.item_id, "'"));
    }
  }
  return by_id;
}

}  // namespace

absl::StatusOr<std::vector<ConditionSummary>> ScoreResponses(
    const std::vector<ResponseRecord>& responses, const std::vector<StimulusItem>& items) {
  auto by_id = IndexItems(items);
  if (!by_id.ok()) return by_id.status();
  std::map<std::string, ConditionSummary> per_participant;
  for (const ResponseRecord& r : responses) {
    auto it = by_id->find(r.item_id);
    if (it == by_id->end()) {
      return absl::NotFoundError(StrCat("response from participant '", r.participant_id,
                                        "' names unknown item_id '", r.item_id, "'"));
    }
    const StimulusItem& item = *it->second;
    ConditionSummary& s = per_participant[r.participant_id];
    s.participant_id = r.participant_id;
    CellCounts& cell = s.cells[CellIndex(item.sarcastic, item.cue_condition)];
    ++cell.shown;
    if (SameLabel(r.selected, item.emotion)) ++cell.correct;
    if (r.is_uncertain || IsUncertainSelection(r.selected)) ++cell.uncertain;
  }
  std::vector<ConditionSummary> out;
  out.reserve(per_participant.size());
  for (auto& [id, s] : per_participant) out.push_back(std::move(s));
  return out;
}

absl::StatusOr<AnalysisReport> Analyze(const std::vector<ResponseRecord>& responses,
                                       const std::vector<StimulusItem>& items) {
  if (responses.empty()) return absl::InvalidArgumentError("no responses");
  auto summaries = ScoreResponses(responses, items);
  if (!summaries.ok()) return summaries.status();
  auto by_id = IndexItems(items);
  if (!by_id.ok()) return by_id.status();

  AnalysisReport report;
  report.participants = static_cast<int64_t>(summaries->size());
  report.responses = static_cast<int64_t>(responses.size());

  for (const ConditionSummary& s : *summaries) {
    for (size_t c = 0; c < kNumCells; ++c) {
      report.cells[c].totals.shown += s.cells[c].shown;
      report.cells[c].totals.correct += s.cells[c].correct;
      report.cells[c].totals.uncertain += s.cells[c].uncertain;
    }
  }
  for (CellReport& cell : report.cells) {
    const CellCounts& t = cell.totals;
    if (t.shown == 0) continue;
    cell.accuracy = static_cast<double>(t.correct) / static_cast<double>(t.shown);
    cell.uncertainty = static_cast<double>(t.uncertain) / static_cast<double>(t.shown);
    cell.accuracy_ci = *WilsonInterval(t.correct, t.shown, 0.95);
    cell.uncertainty_ci = *WilsonInterval(t.uncertain, t.shown, 0.95);
  }

  for (int sarcastic = 0; sarcastic < 2; ++sarcastic) {
    ContrastReport& contrast = report.contrasts[sarcastic];
    contrast.label =
        sarcastic ? "sarcastic: removed - present correct" : "literal: removed - present correct";
    std::vector<double> removed, present;
    for (const ConditionSummary& s : *summaries) {
      const CellCounts& p = s.cells[CellIndex(sarcastic, CueCondition::kPresent)];
      const CellCounts& r = s.cells[CellIndex(sarcastic, CueCondition::kRemoved)];
      if (p.shown == 0 || r.shown == 0) continue;
      removed.push_back(static_cast<double>(r.correct));
      present.push_back(static_cast<double>(p.correct));
    }
    contrast.participants = static_cast<int64_t>(removed.size());
    auto test = PairedTTest(removed, present);
    if (test.ok()) {
      contrast.test = *test;
    } else {
      contrast.error = std::string(test.status().message());
    }
  }

  Eigen::MatrixXd design(static_cast<Eigen::Index>(responses.size()), 3);
  std::vector<bool> correct(responses.size());
  for (size_t i = 0; i < responses.size(); ++i) {
    const StimulusItem& item = *by_id->at(responses[i].item_id);
    const auto row = static_cast<Eigen::Index>(i);
    design(row, 0) = 1.0;
    design(row, 1) = item.cue_condition == CueCondition::kPresent ? 1.0 : 0.0;
    design(row, 2) = item.sarcastic ? 1.0 : 0.0;
    correct[i] = SameLabel(responses[i].selected, item.emotion);
  }
  auto fit = LogisticFit(design, correct);
  if (fit.ok()) {
    report.logistic = *std::move(fit);
  } else {
    report.logistic_error = std::string(fit.status().message());
  }
  return report;
}

std::string AnalysisReportToJson(const AnalysisReport& report, bool pretty) {
  json j;
  j["participants"] = report.participants;
  j["responses"] = report.responses;
  json cells = json::object();
  for (size_t c = 0; c < kNumCells; ++c) {
    const CellReport& cell = report.cells[c];
    json cj;
    cj["shown"] = cell.totals.shown;
    cj["correct"] = cell.totals.correct;
    cj["uncertain"] = cell.totals.uncertain;
    if (cell.totals.shown > 0) {
      cj["accuracy"] = cell.accuracy;
      cj["accuracy_ci95"] = Interval(cell.accuracy_ci);
      cj["uncertainty"] = cell.uncertainty;
      cj["uncertainty_ci95"] = Interval(cell.uncertainty_ci);
    } else {
      cj["accuracy"] = nullptr;
      cj["uncertainty"] = nullptr;
    }
    cells[std::string(CellName(c))] = std::move(cj);
  }
  j["cells"] = std::move(cells);

  json tests = json::array();
  for (const ContrastReport& c : report.contrasts) {
    json tj;
    tj["contrast"] = c.label;
    tj["participants"] = c.participants;
    if (c.test) {
      tj["t"] = c.test->t;
      tj["df"] = c.test->df;
      tj["mean_diff"] = c.test->mean_diff;
      tj["ci95"] = json::array({c.test->ci_low, c.test->ci_high});
    } else {
      tj["error"] = c.error;
    }
    tests.push_back(std::move(tj));
  }
  j["paired_t_tests"] = std::move(tests);

  json lj;
  if (report.logistic) {
    static constexpr const char* kNames[] = {"intercept", "envc_present", "sarcastic"};
    json coefs = json::object();
    for (Eigen::Index k = 0; k < report.logistic->coefficients.size(); ++k) {
      coefs[kNames[k]] = {{"estimate", report.logistic->coefficients[k]},
                          {"std_error", report.logistic->standard_errors[k]}};
    }
    lj["coefficients"] = std::move(coefs);
    lj["converged"] = report.logistic->converged;
    lj["separation"] = report.logistic->separation;
    lj["iterations"] = report.logistic->iterations;
  } else {
    lj["error"] = report.logistic_error;
  }
  j["logistic"] = std::move(lj);
  j["caveat"] = kAnalysisCaveat;
  return Dump(j, pretty ? 2 : -1);
}

}  // namespace envc
