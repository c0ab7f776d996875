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

// Corpus-scale annotation and tallying. This module also hosts the stratified
// precision-review loop.

#ifndef ENVC_CORPUS_H_
#define ENVC_CORPUS_H_

#include <array>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "envc/csv.h"
#include "envc/cue_model.h"
#include "envc/detector.h"

namespace envc {

struct Post {
  std::string post_id;
  std::string text;
  std::optional<std::string> emotion;
  std::optional<bool> sarcastic;
  friend bool operator==(const Post&, const Post&) = default;
};

enum class PostFormat { kJsonl, kCsv };
absl::StatusOr<PostFormat> ParsePostFormat(std::string_view name);

struct SkippedLine {
  size_t line;
  std::string reason;
};

// Streams posts from JSONL or CSV. Malformed records are skipped and recorded
// with their line number; I/O failures and a bad CSV header are errors.
//
// JSONL: one object per line with string post_id and text, optional string
// emotion and boolean sarcastic. CSV: header row naming post_id and text,
// optionally emotion and sarcastic (true/false/1/0).
class PostReader {
 public:
  static absl::StatusOr<std::unique_ptr<PostReader>> Open(const std::string& path,
                                                          PostFormat format);
  // Reads from a caller-owned stream; `name` prefixes error messages.
  static absl::StatusOr<std::unique_ptr<PostReader>> FromStream(std::istream& in, PostFormat format,
                                                                std::string name);

  // Next well-formed post, or std::nullopt at end of input.
  absl::StatusOr<std::optional<Post>> Next();

  const std::vector<SkippedLine>& skipped() const { return skipped_; }
  const std::string& name() const { return name_; }

 private:
  PostReader(std::istream& in, PostFormat format, std::string name)
      : in_(in), format_(format), name_(std::move(name)), csv_(in) {}

  absl::StatusOr<std::optional<Post>> NextJsonl();
  absl::StatusOr<std::optional<Post>> NextCsv();

  std::unique_ptr<std::ifstream> owned_;
  std::istream& in_;
  PostFormat format_;
  std::string name_;
  size_t line_ = 0;
  CsvReader csv_;
  bool header_read_ = false;
  std::map<std::string, size_t> columns_;
  std::vector<SkippedLine> skipped_;
};

// Reads a whole file. Skips are reported through `skipped` when non-null.
absl::StatusOr<std::vector<Post>> ReadPosts(const std::string& path, PostFormat format,
                                            std::vector<SkippedLine>* skipped = nullptr);

// Annotates posts on `workers` threads; `sink` sees results in input order and
// the output is identical for any worker count. Stops at the first read error.
absl::Status AnnotateCorpus(PostReader& reader, const DetectorConfig& cfg, int workers,
                            const std::function<void(AnnotatedPost&&)>& sink);
std::vector<AnnotatedPost> AnnotateCorpus(const std::vector<Post>& posts, const DetectorConfig& cfg,
                                          int workers);

// One JSON object per post: post_id, text, spans[{start, end, surface,
// subcategory, affect_display}], counts{<subcategory>: n} with all ten keys.
std::string AnnotatedPostToJson(const AnnotatedPost& post);
absl::StatusOr<AnnotatedPost> AnnotatedPostFromJson(std::string_view line);
// Reads annotate output; blank lines are ignored, anything else malformed is
// an error naming the line.
absl::StatusOr<std::vector<AnnotatedPost>> ReadAnnotatedJsonl(std::istream& in,
                                                              const std::string& name);

struct FrequencyTable {
  SubcategoryCounts per_subcategory;
  std::array<int64_t, kNumDomains> per_domain{};
  int64_t posts_total = 0;
  int64_t posts_with_any_cue = 0;

  int64_t domain(CueDomain d) const { return per_domain[Ordinal(d)]; }
  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

class FrequencyAccumulator {
 public:
  void Add(const AnnotatedPost& post);
  FrequencyTable Finish() const;

 private:
  FrequencyTable table_;
};

FrequencyTable CategoryFrequencies(const std::vector<AnnotatedPost>& annotated);
std::string FrequencyTableToJson(const FrequencyTable& table);
absl::StatusOr<FrequencyTable> FrequencyTableFromJson(std::string_view json);

enum class Verdict { kTruePositive, kFalsePositive };

struct ReviewItem {
  std::string post_id;
  CueSpan span;
  std::optional<Verdict> verdict;
  friend bool operator==(const ReviewItem&, const ReviewItem&) = default;
};

using Quota = std::map<CueSubcategory, int64_t>;

struct ReviewBatch {
  std::vector<ReviewItem> items;
  uint64_t seed = 0;
  Quota quota;
};

// Draws up to quota[s] spans of each subcategory uniformly without
// replacement. Each subcategory uses its own SplitMix64 stream derived from
// (seed, ordinal), so changing one quota leaves the other draws unchanged.
// Items come out grouped by subcategory ordinal, in corpus order within a
// group.
absl::StatusOr<ReviewBatch> StratifiedSample(const std::vector<AnnotatedPost>& annotated,
                                             const Quota& quota, uint64_t seed);

// CSV with header post_id,start,end,surface,subcategory,verdict. Verdict cells
// hold TP or FP; an empty cell marks an unreviewed item.
std::string ReviewBatchToCsv(const ReviewBatch& batch);
absl::StatusOr<ReviewBatch> ReviewBatchFromCsv(std::istream& in, const std::string& name);

struct Precision {
  double precision;
  int64_t n;
};

// TP / (TP + FP) per subcategory; subcategories with no items are omitted.
// Any item without a verdict is an error naming it.
absl::StatusOr<std::map<CueSubcategory, Precision>> PrecisionFromReviews(const ReviewBatch& batch);

// Parses "Subcategory=count".
absl::StatusOr<std::pair<CueSubcategory, int64_t>> ParseQuotaEntry(std::string_view entry);

}  // namespace envc

#endif  // ENVC_CORPUS_H_
