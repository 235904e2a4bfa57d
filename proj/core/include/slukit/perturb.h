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

#ifndef SLUKIT_PERTURB_H_
#define SLUKIT_PERTURB_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slukit/corpus.h"

namespace slukit {

// The pseudo-category used for wake-word substitutions; it matches tokens
// outside any slot rather than a concept label.
inline constexpr const char* kKeywordCategory = "keyword";

// A cumulative out-of-vocabulary substitution plan: step k keeps every
// category of step k-1 active. Replacement words must not occur in the
// declared training vocabulary.
struct SubstitutionPlan {
  int step = 1;  // 1..4
  std::vector<std::string> categories;  // active at this step
  // category -> (original word -> replacement text, possibly multi-word)
  std::map<std::string, std::map<std::string, std::string>> substitutions;
};

// JSON: {"step": 1, "categories": ["action", ...],
//        "substitutions": {"action": {"allume": "enclenche", ...}, ...}}
SubstitutionPlan ReadSubstitutionPlan(const std::filesystem::path& path);

// The four Table-style report columns for one substitution run.
struct SubstitutionStats {
  int step = 0;
  size_t word_types = 0;       // distinct original types replaced
  size_t word_tokens = 0;      // token occurrences replaced
  double pct_types = 0.0;      // of the corpus vocabulary
  double pct_tokens = 0.0;     // of all corpus tokens

  std::string TsvRow() const;
  static std::string TsvHeader();
};

// Replaces in-slot words of the plan's active categories (and out-of-slot
// words for the keyword pseudo-category), re-indexing slot spans. Throws
// ValidationError if any replacement word occurs in train_vocab.
std::pair<std::vector<Utterance>, SubstitutionStats> ApplyOov(
    const std::vector<Utterance>& corpus, const SubstitutionPlan& plan,
    const std::set<std::string>& train_vocab);

// Syntactic variation: step 1 rewrites single-token action slots into a
// longer construction whose head is the infinitive (the slot moves onto the
// infinitive); step 2 additionally injects disfluencies at device slots,
// doubling a leading determiner outside the slot or inserting a filler word.
struct VerbRewrite {
  std::vector<std::string> pre;   // words inserted before the slot
  std::string verb;               // replacement slot word (infinitive)
  std::vector<std::string> post;  // words inserted after the slot
};

struct SyntaxPlan {
  int step = 1;  // 1..2
  std::map<std::string, VerbRewrite> verb_rewrites;
  std::vector<std::string> determiners;  // doubled when leading a device slot
  std::string filler = "euh";            // fallback disfluency token
};

// JSON: {"step": 2,
//        "verb_rewrites": {"allume": {"pre": ["pourrais-tu"],
//                                     "verb": "allumer"}},
//        "disfluency": {"determiners": ["le","la","les","l'"],
//                       "filler": "euh"}}
SyntaxPlan ReadSyntaxPlan(const std::filesystem::path& path);

std::vector<Utterance> ApplySyntax(const std::vector<Utterance>& corpus,
                                   const SyntaxPlan& plan);

// Partition by token count strictly greater than the threshold.
struct LengthSplit {
  std::vector<Utterance> longer;
  std::vector<Utterance> shorter;
};

LengthSplit SplitByLength(const std::vector<Utterance>& corpus,
                          size_t threshold);

}  // namespace slukit

#endif  // SLUKIT_PERTURB_H_
