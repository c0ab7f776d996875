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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "envc/corpus.h"
#include "envc/detector.h"
#include "envc/transformer.h"
#include "fuzz_text.h"

namespace envc {
namespace {

const std::vector<std::string>& Texts() {
  static const auto* texts = new std::vector<std::string>(testing::FuzzCorpus(1, 2000, 16));
  return *texts;
}

int64_t TotalBytes() {
  int64_t n = 0;
  for (const auto& t : Texts()) n += static_cast<int64_t>(t.size());
  return n;
}

void BM_Annotate(benchmark::State& state) {
  DetectorConfig cfg;
  cfg.emoji_profile_name = state.range(0) ? "extended" : "paper";
  for (auto _ : state) {
    for (const auto& text : Texts()) benchmark::DoNotOptimize(Annotate("b", text, cfg));
  }
  state.SetBytesProcessed(state.iterations() * TotalBytes());
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(Texts().size()));
}
BENCHMARK(BM_Annotate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Strip(benchmark::State& state) {
  const StripConfig cfg;
  for (auto _ : state) {
    for (const auto& text : Texts()) benchmark::DoNotOptimize(Strip(text, cfg));
  }
  state.SetBytesProcessed(state.iterations() * TotalBytes());
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(Texts().size()));
}
BENCHMARK(BM_Strip)->Unit(benchmark::kMillisecond);

void BM_AnnotateCorpus(benchmark::State& state) {
  std::vector<Post> posts;
  for (const auto& text : Texts()) posts.push_back({"p", text, std::nullopt, std::nullopt});
  const DetectorConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnnotateCorpus(posts, cfg, static_cast<int>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(posts.size()));
}
BENCHMARK(BM_AnnotateCorpus)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace
}  // namespace envc

BENCHMARK_MAIN();
