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

#ifndef SLUKIT_GRAMMAR_H_
#define SLUKIT_GRAMMAR_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slukit/corpus.h"
#include "slukit/semantic_space.h"

namespace slukit {

// One production of the feature-bearing context-free grammar. Multi-word
// terminals are pre-tokenized at load time, so each terminal symbol expands
// to exactly one corpus token.
struct GrammarRule {
  struct Sym {
    bool is_terminal = false;
    std::string name;  // nonterminal name or terminal token
  };

  std::string lhs;
  std::vector<Sym> rhs;     // never empty
  std::string intent;       // intent feature, "" when unset
  std::string concept_label; // concept feature, "" when unset (at most one)
  double weight = 1.0;      // nonnegative, used by sampling only
  int line = 0;             // source line for error messages
};

struct GenerationOptions {
  size_t limit = SIZE_MAX;
  int max_depth = 20;  // derivation tree depth bound
};

struct GenerationStats {
  size_t emitted = 0;
  size_t pruned_branches = 0;    // subtrees cut by the depth bound
  size_t duplicates_skipped = 0; // identical token sequences removed
};

// A validated grammar. Loading checks: every rhs nonterminal defined, all
// intent/concept features exist in the semantic space, and every reachable
// nonterminal can derive a finite terminal string.
class Grammar {
 public:
  // The file format is line oriented, UTF-8, comments start with '#':
  //   %intent watch_tv
  //   %concept gadget parent=device
  //   NT -> rhs symbols ... { intent=set_device concept=action } @2
  // Nonterminals match [A-Z][A-Z0-9_]*; everything else is terminal text.
  // "|" separates alternatives sharing the feature block and weight; quoted
  // strings protect multi-word terminals. The first rule's lhs is the start
  // symbol. Declared intents/concepts extend the default semantic space.
  static Grammar Load(const std::filesystem::path& path);
  static Grammar Parse(const std::string& source, const std::string& name);

  const std::vector<GrammarRule>& rules() const { return rules_; }
  const SemanticSpace& space() const { return space_; }
  const std::string& start_symbol() const { return start_; }

  size_t RuleCount() const { return rules_.size(); }
  const std::set<std::string>& ReachableNonterminals() const {
    return reachable_;
  }
  std::set<std::string> IntentsUsed() const;
  std::set<std::string> ConceptsUsed() const;

  // Deterministic exhaustive derivation: depth-first, rules tried in file
  // order, duplicate token sequences dropped. Ids are gen-000001.., assigned
  // in emission order. Throws ValidationError if the depth bound removed
  // every derivation.
  std::vector<Utterance> Enumerate(const GenerationOptions& options,
                                   GenerationStats* stats = nullptr) const;

  // Weighted top-down sampling; identical (grammar, n, seed) triples give
  // byte-identical corpora. Requires n >= 1. Ids are smp-000001...
  std::vector<Utterance> Sample(size_t n, uint64_t seed,
                                int max_depth = 20) const;

 private:
  Grammar() = default;
  void Validate(const std::string& name);

  std::vector<GrammarRule> rules_;
  std::map<std::string, std::vector<size_t>> by_lhs_;  // file-order indices
  std::string start_;
  std::set<std::string> reachable_;
  SemanticSpace space_;
};

}  // namespace slukit

#endif  // SLUKIT_GRAMMAR_H_
