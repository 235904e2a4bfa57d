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

#ifndef SLUKIT_CHANNEL_H_
#define SLUKIT_CHANNEL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "slukit/codec.h"
#include "slukit/corpus.h"
#include "slukit/stats.h"
#include "slukit/symbol_table.h"

namespace slukit {

// Independent per-token corruption rates standing in for ASR output.
// Word events act on the word part of each space-separated chunk; a deleted
// word takes its glued delimiters with it unless symbols_immune is set.
// Delimiter characters are additionally deleted one by one at symbol_del.
// TODO: burst mode (correlated adjacent errors); only the independent
// per-token model exists today.
struct NoiseProfile {
  std::string name = "noise";
  double p_sub = 0.0;
  double p_del = 0.0;
  double p_ins = 0.0;
  double symbol_del = 0.0;
  bool symbols_immune = false;
  std::vector<std::string> confusion_vocab;  // substitution/insertion pool
  uint64_t seed = 0;

  // Rates in range, p_sub + p_del <= 1, and no delimiter characters of the
  // given table inside confusion words.
  void Validate(const SymbolTable& table) const;
};

// JSON: {"name": "mixed", "p_sub": 0.1, "p_del": 0.05, "p_ins": 0.05,
//        "symbol_del": 0.2, "symbols_immune": false,
//        "confusion_vocab": ["...", ...], "seed": 7}
NoiseProfile ReadNoiseProfile(const std::filesystem::path& path);
std::vector<NoiseProfile> ReadNoiseProfileSweep(
    const std::filesystem::path& path);

// Corrupts an enriched corpus. Each utterance draws from its own generator
// keyed by (profile seed, utterance id), so output is deterministic and
// independent of processing order. When the profile has no confusion
// vocabulary, the corpus's own word inventory is used. Hypotheses carry
// meta["noise"] = profile name.
std::vector<EnrichedRecord> Corrupt(const std::vector<EnrichedRecord>& corpus,
                                    const NoiseProfile& profile,
                                    const SymbolTable& table);

// One sweep point of the WER/CER correlation methodology: corrupt, score
// every utterance, correlate the two per-utterance vectors.
struct StudyRow {
  std::string profile_name;
  CorrelationReport correlation;
  double mean_wer = 0.0;
  double mean_cer = 0.0;
  size_t utterances = 0;
};

// Requires >= 100 reference utterances, each with at least one concept.
// Throws ValidationError on degenerate (constant) score vectors, e.g. under
// a zero-noise profile.
std::vector<StudyRow> WerCerStudy(const std::vector<Utterance>& reference,
                                  const std::vector<NoiseProfile>& sweep,
                                  const SymbolTable& table);

}  // namespace slukit

#endif  // SLUKIT_CHANNEL_H_
