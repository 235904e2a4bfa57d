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

#ifndef SLUKIT_CURRICULUM_H_
#define SLUKIT_CURRICULUM_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "slukit/corpus.h"
#include "slukit/symbol_table.h"

namespace slukit {

// Parameters of the staged training-set construction. A negative threshold
// asks for the default: median concept frequency / 10.
struct StagePlan {
  double concept_frequency_threshold = -1.0;
  int duplication_factor = 1;  // >= 1
};

StagePlan ReadStagePlan(const std::filesystem::path& path);

// Concept label -> number of slot occurrences across the corpus.
std::map<std::string, size_t> ConceptHistogram(
    const std::vector<Utterance>& corpus);

// Utterances containing at least one concept whose corpus frequency is
// strictly below the threshold.
std::vector<Utterance> SelectUnderrepresented(
    const std::vector<Utterance>& corpus, double threshold);

// Repeats every utterance `factor` times; copies get "-dupK" id suffixes,
// factor 1 is the identity.
std::vector<Utterance> DuplicateBalance(const std::vector<Utterance>& slice,
                                        int factor);

// One emitted training stage: concept-only transcripts for the slot-filling
// stages, intent+concept for the intent stage, and its masked variant.
struct StageOutput {
  std::string name;
  std::vector<EnrichedRecord> records;
  std::map<std::string, size_t> concept_histogram;
  int epochs_hint = 0;  // reference training schedule, bookkeeping only
};

struct StageSet {
  StageOutput data2;       // concept-annotated slice
  StageOutput data3;       // under-represented slice, duplicated
  StageOutput data4;       // intent + concept transcripts
  StageOutput data4_star;  // data4 with out-of-slot words masked
  double threshold_used = 0.0;
  int duplication_factor = 1;
};

StageSet StageEmit(const std::vector<Utterance>& corpus, const StagePlan& plan,
                   const SymbolTable& table);

// Writes data2/data3/data4/data4_star JSONL files plus manifest.json into
// the directory (created if missing).
void WriteStageSet(const std::filesystem::path& dir, const StageSet& stages);

}  // namespace slukit

#endif  // SLUKIT_CURRICULUM_H_
