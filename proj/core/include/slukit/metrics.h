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

#ifndef SLUKIT_METRICS_H_
#define SLUKIT_METRICS_H_

#include <map>
#include <string>
#include <vector>

#include "slukit/align.h"
#include "slukit/corpus.h"
#include "slukit/symbol_table.h"

namespace slukit {

// Order-insensitive concept error rate. A reference label multiset is
// matched against a hypothesis label multiset: leftovers pair up as
// substitutions, the remainder counts as deletions or insertions.
struct CerResult {
  int matched = 0;
  int substituted = 0;
  int deleted = 0;
  int inserted = 0;
  int ref_count = 0;
  // ref_count == 0: the rate is a sentinel (inserted x 100) and is excluded
  // from corpus averages.
  bool empty_reference = false;

  double Cer() const;
};

CerResult Cer(const std::vector<std::string>& ref_labels,
              const std::vector<std::string>& hyp_labels);

// Per-intent one-vs-rest counts with micro and macro averages, in [0,1].
struct IntentClassScores {
  int tp = 0, fp = 0, fn = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

struct IntentConfusion {
  std::map<std::string, IntentClassScores> per_class;
  double micro_precision = 0.0, micro_recall = 0.0, micro_f1 = 0.0;
  double macro_precision = 0.0, macro_recall = 0.0, macro_f1 = 0.0;
};

IntentConfusion IntentScores(
    const std::vector<std::pair<std::string, std::string>>& ref_hyp_pairs);

// Corpus-level evaluation.
struct ScoreOptions {
  std::string group_by;      // meta key, e.g. "noise"; empty = no grouping
  bool with_values = false;  // CER matches require equal slot values
  bool char_level = false;   // WER over enriched-transcript codepoints
  std::string model_name = "slukit";
};

struct UtteranceScore {
  std::string id;
  double wer = 0.0;
  bool wer_valid = true;  // false when the reference has no tokens
  double cer = 0.0;
  bool cer_valid = true;  // false when the reference has no concepts
  int ref_words = 0;
  int ref_concepts = 0;
  bool intent_match = false;
  std::string ref_intent, hyp_intent;
  std::map<std::string, std::string> meta;
};

struct EvalRow {
  std::string group;  // meta value, or "All"
  double mean_wer = 0.0;
  double mean_cer = 0.0;
  double micro_f1 = 0.0;   // percent
  double macro_f1 = 0.0;   // percent
  size_t count = 0;
};

struct EvalReport {
  std::string model;
  std::vector<UtteranceScore> per_utterance;  // ordered by utterance id
  std::vector<EvalRow> rows;                  // groups sorted, "All" last

  // TSV with the columns Model/Group/WER/CER/F1/N.
  std::string ToTsv() const;
};

// Scores a hypothesis corpus against a reference corpus aligned by id.
// Throws ValidationError when ids do not match one-to-one.
EvalReport CorpusReport(const std::vector<Utterance>& reference,
                        const std::vector<Utterance>& hypothesis,
                        const SymbolTable& table,
                        const ScoreOptions& options = {});

}  // namespace slukit

#endif  // SLUKIT_METRICS_H_
