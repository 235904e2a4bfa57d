// Copyright 2026 The slukit Authors
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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "slukit/align.h"
#include "slukit/channel.h"
#include "slukit/codec.h"
#include "slukit/grammar.h"
#include "slukit/metrics.h"
#include "slukit/stats.h"
#include "slukit/symbol_table.h"

namespace {

using namespace slukit;

std::vector<std::string> RandomTokens(std::mt19937_64& rng, size_t len,
                                      int alphabet) {
  std::vector<std::string> out;
  for (size_t i = 0; i < len; ++i)
    out.push_back("w" + std::to_string(rng() % alphabet));
  return out;
}

void BM_Align(benchmark::State& state) {
  std::mt19937_64 rng(1);
  size_t len = static_cast<size_t>(state.range(0));
  auto ref = RandomTokens(rng, len, 50);
  auto hyp = RandomTokens(rng, len, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Align(ref, hyp));
  }
}
BENCHMARK(BM_Align)->Arg(8)->Arg(32)->Arg(128);

void BM_EncodeDecode(benchmark::State& state) {
  SymbolTable table = DefaultSymbolTable();
  Utterance u;
  u.id = "b";
  u.tokens = {"vocadom", "allume", "la", "lumière", "de", "la", "chambre"};
  u.intent = "set_device";
  u.slots = {{"action", 1, 2, "allume"},
             {"device", 2, 4, "la lumière"},
             {"location-room", 4, 7, "de la chambre"}};
  for (auto _ : state) {
    EnrichedTranscript t = Encode(u, table);
    benchmark::DoNotOptimize(Decode(t, table));
  }
}
BENCHMARK(BM_EncodeDecode);

void BM_Cer(benchmark::State& state) {
  std::vector<std::string> ref{"action", "device", "location-room", "time"};
  std::vector<std::string> hyp{"device", "action", "amount"};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Cer(ref, hyp));
  }
}
BENCHMARK(BM_Cer);

void BM_Pearson(benchmark::State& state) {
  std::mt19937_64 rng(2);
  size_t n = static_cast<size_t>(state.range(0));
  std::vector<double> x, y;
  for (size_t i = 0; i < n; ++i) {
    x.push_back((rng() >> 11) * 0x1.0p-53);
    y.push_back((rng() >> 11) * 0x1.0p-53);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Pearson(x, y));
  }
}
BENCHMARK(BM_Pearson)->Arg(100)->Arg(10000);

void BM_GrammarSample(benchmark::State& state) {
  Grammar g = Grammar::Load(std::string(SLUKIT_DATA_DIR) + "/demo.grammar");
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.Sample(100, seed++));
  }
}
BENCHMARK(BM_GrammarSample);

}  // namespace

BENCHMARK_MAIN();
