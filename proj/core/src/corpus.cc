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

#include "envc/corpus.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "envc/ordered_map.h"
#include "envc/rng.h"
#include "envc/utf8.h"
#include "json.hpp"
#include "strings.h"

namespace envc {
namespace {

using json = nlohmann::ordered_json;

std::string Dump(const json& j) {
  return j.dump(-1, ' ', /*ensure_ascii=*/false, json::error_handler_t::replace);
}

std::optional<bool> ParseBool(std::string_view s) {
  const std::string v = AsciiStrToLower(StripAsciiWhitespace(s));
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  return std::nullopt;
}

json SpanToJson(const CueSpan& s) {
  json j;
  j["start"] = s.start;
  j["end"] = s.end;
  j["surface"] = s.surface;
  j["subcategory"] = SubcategoryName(s.subcategory);
  j["affect_display"] = s.affect_display;
  return j;
}

json CountsToJson(const SubcategoryCounts& counts) {
  json j = json::object();
  for (CueSubcategory s : kAllSubcategories) j[std::string(SubcategoryName(s))] = counts[s];
  return j;
}

absl::StatusOr<SubcategoryCounts> CountsFromJson(const json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("counts must be an object");
  SubcategoryCounts counts;
  for (const auto& [key, value] : j.items()) {
    auto sub = ParseSubcategory(key);
    if (!sub) return absl::InvalidArgumentError(StrCat("unknown subcategory '", key, "'"));
    if (!value.is_number_integer() || value.get<int64_t>() < 0) {
      return absl::InvalidArgumentError(
          StrCat("count for ", key, " must be a non-negative integer"));
    }
    counts[*sub] = value.get<int64_t>();
  }
  return counts;
}

}  // namespace

absl::StatusOr<PostFormat> ParsePostFormat(std::string_view name) {
  if (name == "jsonl") return PostFormat::kJsonl;
  if (name == "csv") return PostFormat::kCsv;
  return absl::InvalidArgumentError(StrCat("unknown format '", name, "' (want jsonl or csv)"));
}

// PostReader ---------------------------------------------------------------

absl::StatusOr<std::unique_ptr<PostReader>> PostReader::Open(const std::string& path,
                                                             PostFormat format) {
  auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*file) return absl::NotFoundError(StrCat(path, ": cannot open"));
  std::unique_ptr<PostReader> reader(new PostReader(*file, format, path));
  reader->owned_ = std::move(file);
  return reader;
}

absl::StatusOr<std::unique_ptr<PostReader>> PostReader::FromStream(std::istream& in,
                                                                   PostFormat format,
                                                                   std::string name) {
  return std::unique_ptr<PostReader>(new PostReader(in, format, std::move(name)));
}

absl::StatusOr<std::optional<Post>> PostReader::Next() {
  return format_ == PostFormat::kJsonl ? NextJsonl() : NextCsv();
}

absl::StatusOr<std::optional<Post>> PostReader::NextJsonl() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (StripAsciiWhitespace(line).empty()) continue;
    auto skip = [&](std::string reason) { skipped_.push_back({line_, std::move(reason)}); };

    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      skip("not a JSON object");
      continue;
    }
    if (!j.contains("post_id") || !j["post_id"].is_string() ||
        j["post_id"].get<std::string>().empty()) {
      skip("missing post_id");
      continue;
    }
    if (!j.contains("text") || !j["text"].is_string()) {
      skip("missing text");
      continue;
    }
    Post post;
    post.post_id = j["post_id"].get<std::string>();
    post.text = j["text"].get<std::string>();
    if (j.contains("emotion") && !j["emotion"].is_null()) {
      if (!j["emotion"].is_string()) {
        skip("emotion must be a string");
        continue;
      }
      post.emotion = j["emotion"].get<std::string>();
    }
    if (j.contains("sarcastic") && !j["sarcastic"].is_null()) {
      if (!j["sarcastic"].is_boolean()) {
        skip("sarcastic must be a boolean");
        continue;
      }
      post.sarcastic = j["sarcastic"].get<bool>();
    }
    return std::optional<Post>(std::move(post));
  }
  if (in_.bad()) return absl::DataLossError(StrCat(name_, ": read error after line ", line_));
  return std::optional<Post>();
}

absl::StatusOr<std::optional<Post>> PostReader::NextCsv() {
  if (!header_read_) {
    auto header = csv_.Next();
    if (!header.ok())
      return absl::InvalidArgumentError(StrCat(name_, ": ", header.status().message()));
    header_read_ = true;
    if (!header->has_value()) return std::optional<Post>();
    const auto& fields = (*header)->fields;
    for (size_t i = 0; i < fields.size(); ++i) {
      columns_[AsciiStrToLower(StripAsciiWhitespace(fields[i]))] = i;
    }
    if (!columns_.count("post_id") || !columns_.count("text")) {
      return absl::InvalidArgumentError(
          StrCat(name_, ": line ", (*header)->line, ": CSV header must name post_id and text"));
    }
  }
  while (true) {
    auto rec = csv_.Next();
    if (!rec.ok()) return absl::InvalidArgumentError(StrCat(name_, ": ", rec.status().message()));
    if (!rec->has_value()) return std::optional<Post>();
    const CsvRecord& r = **rec;
    auto field = [&](const char* col) -> std::optional<std::string> {
      auto it = columns_.find(col);
      if (it == columns_.end() || it->second >= r.fields.size()) return std::nullopt;
      return r.fields[it->second];
    };
    auto skip = [&](std::string reason) { skipped_.push_back({r.line, std::move(reason)}); };

    Post post;
    auto id = field("post_id");
    auto text = field("text");
    if (!id || id->empty()) {
      skip("missing post_id");
      continue;
    }
    if (!text) {
      skip("missing text");
      continue;
    }
    post.post_id = *id;
    post.text = *text;
    if (auto e = field("emotion"); e && !e->empty()) post.emotion = *e;
    if (auto s = field("sarcastic"); s && !s->empty()) {
      post.sarcastic = ParseBool(*s);
      if (!post.sarcastic) {
        skip(StrCat("bad sarcastic value '", *s, "'"));
        continue;
      }
    }
    if (!IsValidUtf8(post.text)) {
      skip("text is not valid UTF-8");
      continue;
    }
    return std::optional<Post>(std::move(post));
  }
}

absl::StatusOr<std::vector<Post>> ReadPosts(const std::string& path, PostFormat format,
                                            std::vector<SkippedLine>* skipped) {
  auto reader = PostReader::Open(path, format);
  if (!reader.ok()) return reader.status();
  std::vector<Post> posts;
  while (true) {
    auto next = (*reader)->Next();
    if (!next.ok()) return next.status();
    if (!next->has_value()) break;
    posts.push_back(**std::move(next));
  }
  if (skipped != nullptr) *skipped = (*reader)->skipped();
  return posts;
}

// Annotation ---------------------------------------------------------------

absl::Status AnnotateCorpus(PostReader& reader, const DetectorConfig& cfg, int workers,
                            const std::function<void(AnnotatedPost&&)>& sink) {
  absl::Status read_status;
  std::function<std::optional<Post>()> source = [&]() -> std::optional<Post> {
    if (!read_status.ok()) return std::nullopt;
    auto next = reader.Next();
    if (!next.ok()) {
      read_status = next.status();
      return std::nullopt;
    }
    return *std::move(next);
  };
  std::function<AnnotatedPost(const Post&)> fn = [&cfg](const Post& p) {
    return Annotate(p.post_id, p.text, cfg);
  };
  OrderedParallelMap<Post, AnnotatedPost>(source, fn, sink, workers);
  return read_status;
}

std::vector<AnnotatedPost> AnnotateCorpus(const std::vector<Post>& posts, const DetectorConfig& cfg,
                                          int workers) {
  size_t next = 0;
  std::function<std::optional<const Post*>()> source = [&]() -> std::optional<const Post*> {
    if (next == posts.size()) return std::nullopt;
    return &posts[next++];
  };
  std::function<AnnotatedPost(const Post* const&)> fn = [&cfg](const Post* const& p) {
    return Annotate(p->post_id, p->text, cfg);
  };
  std::vector<AnnotatedPost> out;
  out.reserve(posts.size());
  std::function<void(AnnotatedPost &&)> sink = [&out](AnnotatedPost&& a) {
    out.push_back(std::move(a));
  };
  OrderedParallelMap<const Post*, AnnotatedPost>(source, fn, sink, workers);
  return out;
}

std::string AnnotatedPostToJson(const AnnotatedPost& post) {
  json j;
  j["post_id"] = post.post_id;
  j["text"] = post.text;
  j["spans"] = json::array();
  for (const CueSpan& s : post.spans) j["spans"].push_back(SpanToJson(s));
  j["counts"] = CountsToJson(post.counts);
  return Dump(j);
}

absl::StatusOr<AnnotatedPost> AnnotatedPostFromJson(std::string_view line) {
  json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return absl::InvalidArgumentError("not a JSON object");
  if (!j.contains("post_id") || !j["post_id"].is_string()) {
    return absl::InvalidArgumentError("missing post_id");
  }
  if (!j.contains("text") || !j["text"].is_string())
    return absl::InvalidArgumentError("missing text");
  if (!j.contains("spans") || !j["spans"].is_array())
    return absl::InvalidArgumentError("missing spans");
  AnnotatedPost post;
  post.post_id = j["post_id"].get<std::string>();
  post.text = j["text"].get<std::string>();
  for (const auto& s : j["spans"]) {
    if (!s.is_object() || !s.contains("start") || !s.contains("end") ||
        !s.contains("subcategory") || !s["start"].is_number_unsigned() ||
        !s["end"].is_number_unsigned() || !s["subcategory"].is_string()) {
      return absl::InvalidArgumentError("malformed span");
    }
    auto sub = ParseSubcategory(s["subcategory"].get<std::string>());
    if (!sub) {
      return absl::InvalidArgumentError(
          StrCat("unknown subcategory '", s["subcategory"].get<std::string>(), "'"));
    }
    CueSpan span;
    span.start = s["start"].get<size_t>();
    span.end = s["end"].get<size_t>();
    span.subcategory = *sub;
    if (s.contains("surface") && s["surface"].is_string())
      span.surface = s["surface"].get<std::string>();
    if (s.contains("affect_display") && s["affect_display"].is_boolean()) {
      span.affect_display = s["affect_display"].get<bool>();
    }
    post.spans.push_back(std::move(span));
  }
  // Counts are derived data; recompute rather than trust the input.
  for (const CueSpan& s : post.spans) ++post.counts[s.subcategory];
  if (j.contains("counts")) {
    auto given = CountsFromJson(j["counts"]);
    if (!given.ok()) return given.status();
    if (!(*given == post.counts)) return absl::InvalidArgumentError("counts disagree with spans");
  }
  return post;
}

absl::StatusOr<std::vector<AnnotatedPost>> ReadAnnotatedJsonl(std::istream& in,
                                                              const std::string& name) {
  std::vector<AnnotatedPost> out;
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (StripAsciiWhitespace(line).empty()) continue;
    auto post = AnnotatedPostFromJson(line);
    if (!post.ok()) {
      return absl::InvalidArgumentError(StrCat(name, ": line ", n, ": ", post.status().message()));
    }
    out.push_back(*std::move(post));
  }
  return out;
}

// Frequencies --------------------------------------------------------------

void FrequencyAccumulator::Add(const AnnotatedPost& post) {
  ++table_.posts_total;
  if (!post.spans.empty()) ++table_.posts_with_any_cue;
  for (const CueSpan& s : post.spans) ++table_.per_subcategory[s.subcategory];
}

FrequencyTable FrequencyAccumulator::Finish() const {
  FrequencyTable t = table_;
  t.per_domain = {};
  for (CueSubcategory s : kAllSubcategories) {
    t.per_domain[Ordinal(SubcategoryDomain(s))] += t.per_subcategory[s];
  }
  return t;
}

FrequencyTable CategoryFrequencies(const std::vector<AnnotatedPost>& annotated) {
  FrequencyAccumulator acc;
  for (const auto& a : annotated) acc.Add(a);
  return acc.Finish();
}

std::string FrequencyTableToJson(const FrequencyTable& table) {
  json j;
  j["posts_total"] = table.posts_total;
  j["posts_with_any_cue"] = table.posts_with_any_cue;
  j["per_domain"] = {{"Kinesics", table.domain(CueDomain::kKinesics)},
                     {"Paralinguistics", table.domain(CueDomain::kParalinguistics)}};
  j["per_subcategory"] = CountsToJson(table.per_subcategory);
  return Dump(j);
}

absl::StatusOr<FrequencyTable> FrequencyTableFromJson(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("per_subcategory")) {
    return absl::InvalidArgumentError("frequency table: malformed JSON");
  }
  auto counts = CountsFromJson(j["per_subcategory"]);
  if (!counts.ok()) return counts.status();
  FrequencyAccumulator acc;
  FrequencyTable t = acc.Finish();
  t.per_subcategory = *counts;
  for (CueSubcategory s : kAllSubcategories) {
    t.per_domain[Ordinal(SubcategoryDomain(s))] += t.per_subcategory[s];
  }
  if (j.contains("posts_total")) t.posts_total = j["posts_total"].get<int64_t>();
  if (j.contains("posts_with_any_cue"))
    t.posts_with_any_cue = j["posts_with_any_cue"].get<int64_t>();
  return t;
}

// Sampling -----------------------------------------------------------------

absl::StatusOr<ReviewBatch> StratifiedSample(const std::vector<AnnotatedPost>& annotated,
                                             const Quota& quota, uint64_t seed) {
  for (const auto& [sub, q] : quota) {
    if (q < 0) {
      return absl::InvalidArgumentError(
          StrCat("quota for ", SubcategoryName(sub), " must be >= 0, got ", q));
    }
  }
  ReviewBatch batch;
  batch.seed = seed;
  batch.quota = quota;
  for (CueSubcategory sub : kAllSubcategories) {
    auto it = quota.find(sub);
    if (it == quota.end() || it->second == 0) continue;

    std::vector<std::pair<size_t, size_t>> eligible;  // (post, span)
    for (size_t p = 0; p < annotated.size(); ++p) {
      for (size_t s = 0; s < annotated[p].spans.size(); ++s) {
        if (annotated[p].spans[s].subcategory == sub) eligible.emplace_back(p, s);
      }
    }
    const size_t k = std::min(static_cast<size_t>(it->second), eligible.size());
    SplitMix64 rng = DeriveStream(seed, Ordinal(sub));
    std::vector<size_t> order(eligible.size());
    std::iota(order.begin(), order.end(), 0);
    for (size_t i = 0; i < k; ++i) {
      const size_t j = i + rng.Uniform(order.size() - i);
      std::swap(order[i], order[j]);
    }
    order.resize(k);
    std::sort(order.begin(), order.end());
    for (size_t idx : order) {
      const auto [p, s] = eligible[idx];
      batch.items.push_back({annotated[p].post_id, annotated[p].spans[s], std::nullopt});
    }
  }
  return batch;
}

std::string ReviewBatchToCsv(const ReviewBatch& batch) {
  std::string out = "post_id,start,end,surface,subcategory,verdict\n";
  for (const ReviewItem& item : batch.items) {
    std::string verdict;
    if (item.verdict) verdict = *item.verdict == Verdict::kTruePositive ? "TP" : "FP";
    out += CsvLine({item.post_id, StrCat(item.span.start), StrCat(item.span.end), item.span.surface,
                    std::string(SubcategoryName(item.span.subcategory)), verdict});
    out.push_back('\n');
  }
  return out;
}

absl::StatusOr<ReviewBatch> ReviewBatchFromCsv(std::istream& in, const std::string& name) {
  CsvReader reader(in);
  auto header = reader.Next();
  if (!header.ok())
    return absl::InvalidArgumentError(StrCat(name, ": ", header.status().message()));
  if (!header->has_value()) return absl::InvalidArgumentError(StrCat(name, ": empty review file"));
  const std::vector<std::string> want = {"post_id", "start",       "end",
                                         "surface", "subcategory", "verdict"};
  if ((*header)->fields != want) {
    return absl::InvalidArgumentError(
        StrCat(name, ": line 1: header must be post_id,start,end,surface,subcategory,verdict"));
  }
  const Lexicon defaults = DefaultLexicons();
  ReviewBatch batch;
  while (true) {
    auto rec = reader.Next();
    if (!rec.ok()) return absl::InvalidArgumentError(StrCat(name, ": ", rec.status().message()));
    if (!rec->has_value()) break;
    const CsvRecord& r = **rec;
    auto bad = [&](std::string_view why) {
      return absl::InvalidArgumentError(StrCat(name, ": line ", r.line, ": ", why));
    };
    if (r.fields.size() != 6) return bad("expected 6 fields");
    ReviewItem item;
    item.post_id = r.fields[0];
    if (!SimpleAtoi(r.fields[1], &item.span.start) || !SimpleAtoi(r.fields[2], &item.span.end) ||
        item.span.start >= item.span.end) {
      return bad("bad start/end");
    }
    item.span.surface = r.fields[3];
    auto sub = ParseSubcategory(r.fields[4]);
    if (!sub) return bad(StrCat("unknown subcategory '", r.fields[4], "'"));
    item.span.subcategory = *sub;
    item.span.affect_display = defaults.IsAffectDisplay(*sub);
    const std::string v = AsciiStrToLower(StripAsciiWhitespace(r.fields[5]));
    if (v == "tp" || v == "truepositive") {
      item.verdict = Verdict::kTruePositive;
    } else if (v == "fp" || v == "falsepositive") {
      item.verdict = Verdict::kFalsePositive;
    } else if (!v.empty()) {
      return bad(StrCat("verdict must be TP, FP or empty, got '", r.fields[5], "'"));
    }
    ++batch.quota[*sub];
    batch.items.push_back(std::move(item));
  }
  return batch;
}

absl::StatusOr<std::map<CueSubcategory, Precision>> PrecisionFromReviews(const ReviewBatch& batch) {
  std::map<CueSubcategory, std::pair<int64_t, int64_t>> tally;  // (tp, fp)
  for (size_t i = 0; i < batch.items.size(); ++i) {
    const ReviewItem& item = batch.items[i];
    if (!item.verdict) {
      return absl::FailedPreconditionError(StrCat(
          "item ", i + 1, " (post ", item.post_id, ", ", SubcategoryName(item.span.subcategory),
          " [", item.span.start, ", ", item.span.end, ")) has no verdict"));
    }
    auto& [tp, fp] = tally[item.span.subcategory];
    (*item.verdict == Verdict::kTruePositive ? tp : fp) += 1;
  }
  std::map<CueSubcategory, Precision> out;
  for (const auto& [sub, counts] : tally) {
    const int64_t n = counts.first + counts.second;
    out[sub] = {static_cast<double>(counts.first) / static_cast<double>(n), n};
  }
  return out;
}

absl::StatusOr<std::pair<CueSubcategory, int64_t>> ParseQuotaEntry(std::string_view entry) {
  const size_t eq = entry.find('=');
  if (eq == std::string_view::npos) {
    return absl::InvalidArgumentError(
        StrCat("quota '", entry, "' must look like Subcategory=count"));
  }
  auto sub = ParseSubcategory(entry.substr(0, eq));
  if (!sub) {
    return absl::InvalidArgumentError(StrCat("quota '", entry, "': unknown subcategory"));
  }
  int64_t n = 0;
  if (!SimpleAtoi(entry.substr(eq + 1), &n) || n < 0) {
    return absl::InvalidArgumentError(StrCat("quota '", entry, "': count must be an integer >= 0"));
  }
  return std::make_pair(*sub, n);
}

}  // namespace envc
