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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "envc/api.h"
#include "envc/corpus.h"
#include "envc/experiment.h"
#include "envc/transformer.h"
#include "json.hpp"

namespace envc::cli {
namespace {

using json = nlohmann::ordered_json;

std::string Dump(const json& j, int indent = -1) {
  return j.dump(indent, ' ', /*ensure_ascii=*/false, json::error_handler_t::replace);
}

// A failed subcommand: exit code plus message.
struct Failure {
  int code;
  std::string message;
};

Failure Usage(std::string message) { return {kExitUsage, std::move(message)}; }
Failure Data(std::string message) { return {kExitData, std::move(message)}; }
Failure Data(const std::string& prefix, const absl::Status& status) {
  return {kExitData, prefix + std::string(status.message())};
}

using Result = std::optional<Failure>;  // nullopt means success

// Destination for results: the --out file when given, else `fallback`.
class Output {
 public:
  explicit Output(std::ostream& fallback) : stream_(&fallback) {}

  Result Open(const std::string& path) {
    if (path.empty() || path == "-") return std::nullopt;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) return Data(path + ": cannot open for writing");
    path_ = path;
    stream_ = file_.get();
    return std::nullopt;
  }

  std::ostream& stream() { return *stream_; }

  Result Close() {
    stream_->flush();
    if (file_) {
      file_->close();
      if (!*file_) return Data(path_ + ": write failed");
    }
    return std::nullopt;
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
  std::string path_;
};

// Source of lines: a file, or standard input for "-".
class Input {
 public:
  Result Open(const std::string& path) {
    name_ = path;
    if (path == "-") {
      stream_ = &std::cin;
      name_ = "<stdin>";
      return std::nullopt;
    }
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) return Data(path + ": cannot open");
    stream_ = file_.get();
    return std::nullopt;
  }
  std::istream& stream() { return *stream_; }
  const std::string& name() const { return name_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
  std::string name_;
};

struct DetectorFlags {
  std::string lexicon;
  std::string profile = std::string(kPaperProfile);
  int min_caps_run = 3;
  int elong_min = 3;
  int punct_min = 2;
  bool no_all_caps_exclusion = false;
};

void AddDetectorFlags(CLI::App* cmd, DetectorFlags* f) {
  cmd->add_option("--lexicon", f->lexicon,
                  "Lexicon JSON file (default: $ENVC_LEXICON, else the bundled lexicon)");
  cmd->add_option("--profile", f->profile, "Emoji profile: paper, extended or lexicon-defined")
      ->capture_default_str();
  cmd->add_option("--min-caps-run", f->min_caps_run, "Shortest capital run counted as shouting")
      ->capture_default_str();
  cmd->add_option("--elong-min", f->elong_min, "Shortest repeated-letter run counted as elongation")
      ->capture_default_str();
  cmd->add_option("--punct-min", f->punct_min, "Shortest !/? or dot run counted as a cue")
      ->capture_default_str();
  cmd->add_flag("--no-all-caps-exclusion", f->no_all_caps_exclusion,
                "Report capitals even in posts written entirely in uppercase");
}

std::variant<DetectorConfig, Failure> BuildDetectorConfig(const DetectorFlags& f) {
  DetectorConfig cfg;
  std::string lexicon_path = f.lexicon;
  if (lexicon_path.empty()) {
    if (const char* env = std::getenv("ENVC_LEXICON"); env != nullptr) lexicon_path = env;
  }
  if (!lexicon_path.empty()) {
    auto lex = LoadLexiconFile(lexicon_path);
    if (!lex.ok()) return Data("--lexicon: ", lex.status());
    cfg.lexicon = *std::move(lex);
  }
  cfg.emoji_profile_name = f.profile;
  cfg.min_caps_run = f.min_caps_run;
  cfg.elongation_min_repeat = f.elong_min;
  cfg.punct_min_repeat = f.punct_min;
  cfg.all_caps_exclusion = !f.no_all_caps_exclusion;
  auto made = MakeDetectorConfig(std::move(cfg));
  if (!made.ok()) return Usage("invalid detector flags: " + std::string(made.status().message()));
  return *std::move(made);
}

std::variant<std::set<StripRule>, Failure> ParseRules(const std::vector<std::string>& names) {
  if (names.empty()) return std::set<StripRule>(kAllStripRules.begin(), kAllStripRules.end());
  std::set<StripRule> rules;
  for (const std::string& n : names) {
    auto r = ParseStripRule(n);
    if (!r) return Usage("--rules: unknown rule '" + n + "'");
    rules.insert(*r);
  }
  return rules;
}

std::variant<PostFormat, Failure> ResolveFormat(const std::string& flag, const std::string& path) {
  std::string name = flag;
  if (name.empty()) {
    name = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0 ? "csv" : "jsonl";
  }
  auto fmt = ParsePostFormat(name);
  if (!fmt.ok()) return Usage("--format: " + std::string(fmt.status().message()));
  return *fmt;
}

absl::StatusOr<std::unique_ptr<PostReader>> OpenPosts(const std::string& path, PostFormat fmt) {
  if (path == "-") return PostReader::FromStream(std::cin, fmt, "<stdin>");
  return PostReader::Open(path, fmt);
}

void ReportSkipped(const PostReader& reader, std::ostream& err) {
  for (const SkippedLine& s : reader.skipped()) {
    err << reader.name() << ":" << s.line << ": skipped: " << s.reason << "\n";
  }
}

// annotate -------------------------------------------------------------------

struct AnnotateArgs {
  std::string in, out, format;
  std::optional<std::string> text;
  int workers = 1;
  DetectorFlags det;
};

Result RunAnnotate(const AnnotateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.in.empty() != a.text.has_value())
    return Usage("annotate: give exactly one of --in or --text");
  auto cfg = BuildDetectorConfig(a.det);
  if (auto* f = std::get_if<Failure>(&cfg)) return *f;
  const DetectorConfig& dc = std::get<DetectorConfig>(cfg);
  auto fmt = ResolveFormat(a.format, a.in);
  if (auto* f = std::get_if<Failure>(&fmt)) return *f;

  std::unique_ptr<PostReader> reader;
  if (!a.in.empty()) {
    auto r = OpenPosts(a.in, std::get<PostFormat>(fmt));
    if (!r.ok()) return Data("--in: ", r.status());
    reader = *std::move(r);
  }
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  if (!reader) {
    output.stream() << AnnotatedPostToJson(Annotate("", *a.text, dc)) << "\n";
    return output.Close();
  }
  absl::Status st = AnnotateCorpus(*reader, dc, a.workers, [&](AnnotatedPost&& p) {
    output.stream() << AnnotatedPostToJson(p) << "\n";
  });
  ReportSkipped(*reader, err);
  if (!st.ok()) return Data("", st);
  return output.Close();
}

// strip ----------------------------------------------------------------------

struct StripArgs {
  std::string in, out, format;
  std::optional<std::string> text;
  std::vector<std::string> rules;
  bool json = false;
  DetectorFlags det;
};

Result RunStrip(const StripArgs& a, std::ostream& out, std::ostream& err) {
  if (a.in.empty() != a.text.has_value()) return Usage("strip: give exactly one of --in or --text");
  auto det = BuildDetectorConfig(a.det);
  if (auto* f = std::get_if<Failure>(&det)) return *f;
  auto rules = ParseRules(a.rules);
  if (auto* f = std::get_if<Failure>(&rules)) return *f;
  StripConfig cfg;
  cfg.detector_cfg = std::get<DetectorConfig>(std::move(det));
  cfg.rules_enabled = std::get<std::set<StripRule>>(std::move(rules));
  auto fmt = ResolveFormat(a.format, a.in);
  if (auto* f = std::get_if<Failure>(&fmt)) return *f;

  std::unique_ptr<PostReader> reader;
  if (!a.in.empty()) {
    auto r = OpenPosts(a.in, std::get<PostFormat>(fmt));
    if (!r.ok()) return Data("--in: ", r.status());
    reader = *std::move(r);
  }
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  if (!reader) {
    StripReport report = Strip(*a.text, cfg);
    output.stream() << (a.json ? StripReportToJson(report) : report.output) << "\n";
    return output.Close();
  }
  while (true) {
    auto post = reader->Next();
    if (!post.ok()) {
      ReportSkipped(*reader, err);
      return Data("", post.status());
    }
    if (!post->has_value()) break;
    json j;
    j["post_id"] = (*post)->post_id;
    json report = json::parse(StripReportToJson(Strip((*post)->text, cfg)));
    for (auto& [k, v] : report.items()) j[k] = v;
    output.stream() << Dump(j) << "\n";
  }
  ReportSkipped(*reader, err);
  return output.Close();
}

// stats ----------------------------------------------------------------------

struct StatsArgs {
  std::string in, out, plot;
  bool pretty = false;
};

void WritePrettyTable(const FrequencyTable& t, std::ostream& os) {
  os << std::left << std::setw(18) << "subcategory" << std::setw(17) << "domain" << std::right
     << std::setw(8) << "count"
     << "\n";
  for (CueSubcategory s : kAllSubcategories) {
    os << std::left << std::setw(18) << SubcategoryName(s) << std::setw(17)
       << DomainName(SubcategoryDomain(s)) << std::right << std::setw(8) << t.per_subcategory[s]
       << "\n";
  }
  for (CueDomain d : {CueDomain::kKinesics, CueDomain::kParalinguistics}) {
    os << std::left << std::setw(35) << (std::string(DomainName(d)) + " total") << std::right
       << std::setw(8) << t.domain(d) << "\n";
  }
  os << std::left << std::setw(35) << "posts" << std::right << std::setw(8) << t.posts_total
     << "\n";
  os << std::left << std::setw(35) << "posts with any cue" << std::right << std::setw(8)
     << t.posts_with_any_cue << "\n";
}

Result RunStats(const StatsArgs& a, std::ostream& out) {
  Input input;
  if (auto f = input.Open(a.in)) return f;
  FrequencyAccumulator acc;
  std::string line;
  size_t line_no = 0;
  while (std::getline(input.stream(), line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto post = AnnotatedPostFromJson(line);
    if (!post.ok()) {
      return Data(input.name() + ":" + std::to_string(line_no) + ": ", post.status());
    }
    acc.Add(*post);
  }
  if (input.stream().bad()) return Data(input.name() + ": read error");
  const FrequencyTable table = acc.Finish();

  if (!a.plot.empty()) {
    Output plot(out);
    if (auto f = plot.Open(a.plot)) return f;
    plot.stream() << FrequencyChartSvg(table);
    if (auto f = plot.Close()) return f;
  }
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  if (a.pretty) {
    WritePrettyTable(table, output.stream());
  } else {
    output.stream() << FrequencyTableToJson(table) << "\n";
  }
  return output.Close();
}

// sample / validate ----------------------------------------------------------

struct SampleArgs {
  std::string in, out;
  std::vector<std::string> quota;
  uint64_t seed = 0;
};

Result RunSample(const SampleArgs& a, std::ostream& out) {
  Quota quota;
  for (const std::string& entry : a.quota) {
    std::stringstream parts(entry);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.empty()) continue;
      auto q = ParseQuotaEntry(piece);
      if (!q.ok()) return Usage("--quota: " + std::string(q.status().message()));
      quota[q->first] = q->second;
    }
  }
  Input input;
  if (auto f = input.Open(a.in)) return f;
  auto annotated = ReadAnnotatedJsonl(input.stream(), input.name());
  if (!annotated.ok()) return Data("", annotated.status());
  auto batch = StratifiedSample(*annotated, quota, a.seed);
  if (!batch.ok()) return Data("", batch.status());
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  output.stream() << ReviewBatchToCsv(*batch);
  return output.Close();
}

struct ValidateArgs {
  std::string in, out;
  bool pretty = false;
};

Result RunValidate(const ValidateArgs& a, std::ostream& out) {
  Input input;
  if (auto f = input.Open(a.in)) return f;
  auto batch = ReviewBatchFromCsv(input.stream(), input.name());
  if (!batch.ok()) return Data("", batch.status());
  auto precision = PrecisionFromReviews(*batch);
  if (!precision.ok()) return Data(input.name() + ": ", precision.status());
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  if (a.pretty) {
    output.stream() << std::left << std::setw(18) << "subcategory" << std::right << std::setw(10)
                    << "precision" << std::setw(8) << "n"
                    << "\n";
    for (const auto& [sub, p] : *precision) {
      output.stream() << std::left << std::setw(18) << SubcategoryName(sub) << std::right
                      << std::setw(10) << std::fixed << std::setprecision(3) << p.precision
                      << std::setw(8) << p.n << "\n";
    }
  } else {
    json j = json::object();
    for (const auto& [sub, p] : *precision) {
      j[std::string(SubcategoryName(sub))] = {{"precision", p.precision}, {"n", p.n}};
    }
    output.stream() << Dump(j) << "\n";
  }
  return output.Close();
}

// design / analyze -----------------------------------------------------------

struct DesignArgs {
  std::string in, out, format;
  std::vector<std::string> emotions;
  std::vector<std::string> rules;
  int items_per_cell = 0;
  uint64_t seed = 0;
  DetectorFlags det;
};

Result RunDesign(const DesignArgs& a, std::ostream& out, std::ostream& err) {
  auto det = BuildDetectorConfig(a.det);
  if (auto* f = std::get_if<Failure>(&det)) return *f;
  auto rules = ParseRules(a.rules);
  if (auto* f = std::get_if<Failure>(&rules)) return *f;
  auto fmt = ResolveFormat(a.format, a.in);
  if (auto* f = std::get_if<Failure>(&fmt)) return *f;
  StripConfig cfg;
  cfg.detector_cfg = std::get<DetectorConfig>(std::move(det));
  cfg.rules_enabled = std::get<std::set<StripRule>>(std::move(rules));

  auto reader = OpenPosts(a.in, std::get<PostFormat>(fmt));
  if (!reader.ok()) return Data("--in: ", reader.status());
  std::vector<Post> posts;
  while (true) {
    auto post = (*reader)->Next();
    if (!post.ok()) return Data("", post.status());
    if (!post->has_value()) break;
    posts.push_back(**std::move(post));
  }
  ReportSkipped(**reader, err);
  auto items = BuildDesign(posts, a.emotions, a.items_per_cell, cfg, a.seed);
  if (!items.ok()) return Data("design: ", items.status());
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  for (const StimulusItem& item : *items) output.stream() << StimulusItemToJson(item) << "\n";
  return output.Close();
}

struct AnalyzeArgs {
  std::string responses, stimuli, out;
  bool pretty = false;
};

Result RunAnalyze(const AnalyzeArgs& a, std::ostream& out) {
  Input stimuli_in;
  if (auto f = stimuli_in.Open(a.stimuli)) return f;
  auto items = ReadStimuliJsonl(stimuli_in.stream(), stimuli_in.name());
  if (!items.ok()) return Data("", items.status());
  Input responses_in;
  if (auto f = responses_in.Open(a.responses)) return f;
  auto responses = ReadResponsesCsv(responses_in.stream(), responses_in.name());
  if (!responses.ok()) return Data("", responses.status());
  if (responses->empty()) return Data(responses_in.name() + ": no responses");
  auto report = Analyze(*responses, *items);
  if (!report.ok()) return Data(responses_in.name() + ": ", report.status());
  Output output(out);
  if (auto f = output.Open(a.out)) return f;
  output.stream() << AnalysisReportToJson(*report, a.pretty) << "\n";
  return output.Close();
}

}  // namespace

std::string FrequencyChartSvg(const FrequencyTable& table) {
  constexpr int kWidth = 720, kHeight = 400;
  constexpr int kLeft = 60, kRight = 20, kTop = 40, kBottom = 130;
  constexpr int kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;
  const int n = static_cast<int>(kNumSubcategories);
  const int slot = kPlotW / n;
  const int bar = slot * 2 / 3;
  int64_t max_count = 1;
  for (CueSubcategory s : kAllSubcategories) {
    max_count = std::max(max_count, table.per_subcategory[s]);
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << "Cue frequencies (" << table.posts_total << " posts)</text>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << kLeft + kPlotW
      << "\" y2=\"" << kTop + kPlotH << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + kPlotH << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">"
      << max_count << "</text>\n";
  svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + kPlotH + 4
      << "\" text-anchor=\"end\">0</text>\n";
  for (int i = 0; i < n; ++i) {
    const CueSubcategory s = kAllSubcategories[i];
    const int64_t count = table.per_subcategory[s];
    const int h = static_cast<int>(count * kPlotH / max_count);
    const int x = kLeft + i * slot + (slot - bar) / 2;
    const int y = kTop + kPlotH - h;
    const char* fill = SubcategoryDomain(s) == CueDomain::kKinesics ? "#4e79a7" : "#f28e2b";
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar << "\" height=\"" << h
        << "\" fill=\"" << fill << "\"><title>" << SubcategoryName(s) << ": " << count
        << "</title></rect>\n";
    svg << "<text x=\"" << x + bar / 2 << "\" y=\"" << y - 4 << "\" text-anchor=\"middle\">"
        << count << "</text>\n";
    const int lx = x + bar / 2, ly = kTop + kPlotH + 12;
    svg << "<text x=\"" << lx << "\" y=\"" << ly << "\" text-anchor=\"end\" transform=\"rotate(-45 "
        << lx << " " << ly << ")\">" << SubcategoryName(s) << "</text>\n";
  }
  const int ly = kHeight - 14;
  svg << "<rect x=\"" << kLeft << "\" y=\"" << ly - 10 << "\" width=\"12\" height=\"12\" "
      << "fill=\"#4e79a7\"/><text x=\"" << kLeft + 18 << "\" y=\"" << ly << "\">Kinesics</text>\n";
  svg << "<rect x=\"" << kLeft + 110 << "\" y=\"" << ly - 10 << "\" width=\"12\" height=\"12\" "
      << "fill=\"#f28e2b\"/><text x=\"" << kLeft + 128 << "\" y=\"" << ly
      << "\">Paralinguistics</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"envc: detect, strip and analyse nonverbal cues in social-media text", "envc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "envc 0.1.0");

  AnnotateArgs annotate_args;
  CLI::App* annotate =
      app.add_subcommand("annotate", "Detect cues; writes one JSON object per post");
  annotate->add_option("--in", annotate_args.in, "Posts file (JSONL or CSV, '-' for stdin)");
  annotate->add_option("--text", annotate_args.text, "Annotate one literal text instead");
  annotate->add_option("--out", annotate_args.out, "Output path (default stdout)");
  annotate->add_option("--format", annotate_args.format, "Input format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  annotate->add_option("--workers", annotate_args.workers, "Annotation threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  AddDetectorFlags(annotate, &annotate_args.det);

  StripArgs strip_args;
  CLI::App* strip = app.add_subcommand("strip", "Remove cues, keeping the words");
  strip->add_option("--text", strip_args.text, "Text to strip; prints the stripped text");
  strip->add_option("--in", strip_args.in, "Posts file; writes one JSON object per post");
  strip->add_option("--out", strip_args.out, "Output path (default stdout)");
  strip->add_option("--format", strip_args.format, "Input format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  strip->add_option("--rules", strip_args.rules, "Comma-separated strip rules (default all)")
      ->delimiter(',');
  strip->add_flag("--json", strip_args.json, "With --text, print the full report as JSON");
  AddDetectorFlags(strip, &strip_args.det);

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand("stats", "Cue frequency table from annotate output");
  stats->alias("freqs");
  stats->add_option("--in", stats_args.in, "annotate output ('-' for stdin)")->required();
  stats->add_option("--out", stats_args.out, "Output path (default stdout)");
  stats->add_flag("--pretty", stats_args.pretty, "Human-readable table instead of JSON");
  stats->add_option("--plot", stats_args.plot, "Also write an SVG bar chart to this path");

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand("sample", "Draw a stratified precision-review batch");
  sample->add_option("--in", sample_args.in, "annotate output")->required();
  sample->add_option("--quota", sample_args.quota, "Subcategory=count entries")->required();
  sample->add_option("--seed", sample_args.seed, "Random seed")->required();
  sample->add_option("--out", sample_args.out, "Output CSV path (default stdout)");

  ValidateArgs validate_args;
  CLI::App* validate =
      app.add_subcommand("validate", "Precision per subcategory from a reviewed batch");
  validate->add_option("--in", validate_args.in, "Reviewed batch CSV")->required();
  validate->add_option("--out", validate_args.out, "Output path (default stdout)");
  validate->add_flag("--pretty", validate_args.pretty, "Human-readable table instead of JSON");

  DesignArgs design_args;
  CLI::App* design = app.add_subcommand("design", "Build a balanced Present/Removed stimulus set");
  design->add_option("--in", design_args.in, "Posts with emotion and sarcastic labels")->required();
  design->add_option("--emotions", design_args.emotions, "Comma-separated emotion labels")
      ->required()
      ->delimiter(',');
  design->add_option("--items-per-cell", design_args.items_per_cell, "Source posts per stratum")
      ->required()
      ->check(CLI::PositiveNumber);
  design->add_option("--seed", design_args.seed, "Random seed")->required();
  design->add_option("--out", design_args.out, "Output JSONL path (default stdout)");
  design->add_option("--format", design_args.format, "Input format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  design->add_option("--rules", design_args.rules, "Comma-separated strip rules (default all)")
      ->delimiter(',');
  AddDetectorFlags(design, &design_args.det);

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "Score responses against a stimulus set");
  analyze->add_option("--responses", analyze_args.responses, "CSV participant_id,item_id,selected")
      ->required();
  analyze->add_option("--stimuli", analyze_args.stimuli, "design output")->required();
  analyze->add_option("--out", analyze_args.out, "Output path (default stdout)");
  analyze->add_flag("--pretty", analyze_args.pretty, "Indented JSON");

  std::vector<const char*> argv;
  argv.push_back("envc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Result result;
  if (annotate->parsed()) {
    result = RunAnnotate(annotate_args, out, err);
  } else if (strip->parsed()) {
    result = RunStrip(strip_args, out, err);
  } else if (stats->parsed()) {
    result = RunStats(stats_args, out);
  } else if (sample->parsed()) {
    result = RunSample(sample_args, out);
  } else if (validate->parsed()) {
    result = RunValidate(validate_args, out);
  } else if (design->parsed()) {
    result = RunDesign(design_args, out, err);
  } else if (analyze->parsed()) {
    result = RunAnalyze(analyze_args, out);
  }
  if (result) {
    err << "envc: " << result->message << "\n";
    return result->code;
  }
  return kExitOk;
}

}  // namespace envc::cli
