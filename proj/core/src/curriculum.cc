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

#include "slukit/curriculum.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"
#include "slukit/codec.h"
#include "slukit/error.h"

namespace slukit {

using nlohmann::json;

StagePlan ReadStagePlan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stage plan: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ParseError("invalid JSON in stage plan: " + path.string());
  StagePlan plan;
  if (j.contains("concept_frequency_threshold") &&
      !j.at("concept_frequency_threshold").is_null()) {
    plan.concept_frequency_threshold =
        j.at("concept_frequency_threshold").get<double>();
  }
  plan.duplication_factor = j.value("duplication_factor", 1);
  if (plan.duplication_factor < 1)
    throw ValidationError("stage plan: duplication_factor must be >= 1");
  return plan;
}

std::map<std::string, size_t> ConceptHistogram(
    const std::vector<Utterance>& corpus) {
  std::map<std::string, size_t> hist;
  for (const Utterance& u : corpus) {
    for (const SlotSpan& s : u.slots) ++hist[s.label];
  }
  return hist;
}

std::vector<Utterance> SelectUnderrepresented(
    const std::vector<Utterance>& corpus, double threshold) {
  std::map<std::string, size_t> hist = ConceptHistogram(corpus);
  std::vector<Utterance> slice;
  for (const Utterance& u : corpus) {
    bool rare = std::any_of(u.slots.begin(), u.slots.end(),
                            [&](const SlotSpan& s) {
                              return static_cast<double>(hist[s.label]) <
                                     threshold;
                            });
    if (rare) slice.push_back(u);
  }
  return slice;
}

std::vector<Utterance> DuplicateBalance(const std::vector<Utterance>& slice,
                                        int factor) {
  if (factor < 1)
    throw ValidationError("duplicate balance: factor must be >= 1");
  std::vector<Utterance> out;
  out.reserve(slice.size() * static_cast<size_t>(factor));
  for (const Utterance& u : slice) {
    out.push_back(u);
    for (int copy = 2; copy <= factor; ++copy) {
      Utterance dup = u;
      dup.id = u.id + "-dup" + std::to_string(copy);
      out.push_back(std::move(dup));
    }
  }
  return out;
}

namespace {

// Concept-only rendering: the intent group is dropped, slot delimiters stay.
EnrichedRecord ConceptOnlyRecord(const Utterance& u, const SymbolTable& table) {
  Utterance stripped = u;
  stripped.intent = kNoneIntent;
  return {u.id, Encode(stripped, table).text, u.meta};
}

std::map<std::string, size_t> HistogramOf(const std::vector<Utterance>& v) {
  return ConceptHistogram(v);
}

}  // namespace

StageSet StageEmit(const std::vector<Utterance>& corpus, const StagePlan& plan,
                   const SymbolTable& table) {
  StageSet stages;
  stages.duplication_factor = plan.duplication_factor;

  double threshold = plan.concept_frequency_threshold;
  if (threshold < 0.0) {
    // Default: a concept is under-represented below a tenth of the median
    // concept frequency.
    std::map<std::string, size_t> hist = ConceptHistogram(corpus);
    std::vector<size_t> freqs;
    for (const auto& [label, n] : hist) freqs.push_back(n);
    if (freqs.empty()) {
      threshold = 0.0;
    } else {
      std::sort(freqs.begin(), freqs.end());
      threshold = static_cast<double>(freqs[freqs.size() / 2]) / 10.0;
    }
  }
  stages.threshold_used = threshold;

  // data2: every concept-annotated utterance, concept symbols only.
  stages.data2.name = "data2";
  stages.data2.epochs_hint = 12;
  std::vector<Utterance> annotated;
  for (const Utterance& u : corpus) {
    if (!u.slots.empty()) annotated.push_back(u);
  }
  for (const Utterance& u : annotated)
    stages.data2.records.push_back(ConceptOnlyRecord(u, table));
  stages.data2.concept_histogram = HistogramOf(annotated);

  // data3: under-represented slice, duplicated.
  stages.data3.name = "data3";
  stages.data3.epochs_hint = 9;
  std::vector<Utterance> rare =
      DuplicateBalance(SelectUnderrepresented(corpus, threshold),
                       plan.duplication_factor);
  for (const Utterance& u : rare)
    stages.data3.records.push_back(ConceptOnlyRecord(u, table));
  stages.data3.concept_histogram = HistogramOf(rare);

  // data4: whole corpus with intent and concept symbols.
  stages.data4.name = "data4";
  stages.data4.epochs_hint = 11;
  for (const Utterance& u : corpus) {
    stages.data4.records.push_back({u.id, Encode(u, table).text, u.meta});
  }
  stages.data4.concept_histogram = HistogramOf(corpus);

  // data4*: same transcripts with out-of-slot words masked.
  stages.data4_star.name = "data4_star";
  stages.data4_star.epochs_hint = 11;
  for (const EnrichedRecord& r : stages.data4.records) {
    stages.data4_star.records.push_back(
        {r.id, MaskOutsideSlots(EnrichedTranscript{r.text}, table).text,
         r.meta});
  }
  stages.data4_star.concept_histogram = stages.data4.concept_histogram;

  return stages;
}

void WriteStageSet(const std::filesystem::path& dir, const StageSet& stages) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());

  json manifest;
  manifest["threshold_used"] = stages.threshold_used;
  manifest["duplication_factor"] = stages.duplication_factor;
  for (const StageOutput* stage :
       {&stages.data2, &stages.data3, &stages.data4, &stages.data4_star}) {
    std::filesystem::path file = dir / (stage->name + ".jsonl");
    WriteEnrichedCorpus(file, stage->records);
    json hist = json::object();
    for (const auto& [label, n] : stage->concept_histogram) hist[label] = n;
    manifest["stages"][stage->name] = {
        {"file", file.filename().string()},
        {"utterances", stage->records.size()},
        {"concept_histogram", hist},
        {"epochs_hint", stage->epochs_hint}};
  }
  std::ofstream out(dir / "manifest.json");
  if (!out) throw IoError("cannot write manifest: " + (dir / "manifest.json").string());
  out << manifest.dump(2) << '\n';
}

}  // namespace slukit
