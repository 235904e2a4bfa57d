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

#ifndef SLUKIT_LM_H_
#define SLUKIT_LM_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace slukit {

inline constexpr const char* kBosToken = "<s>";
inline constexpr const char* kEosToken = "</s>";
inline constexpr const char* kUnkToken = "<unk>";

// Add-k smoothed n-gram model with a closed vocabulary plus a single UNK
// class. For order >= 2 sentences are padded with n-1 <s> symbols and a
// predicted </s>; unigram models score words only.
class NGramModel {
 public:
  // Trains on tokenized sentences. Requires a non-empty corpus, order >= 1
  // and k > 0; throws ValidationError otherwise.
  static NGramModel Train(const std::vector<std::vector<std::string>>& corpus,
                          int order, double k);

  int order() const { return order_; }
  double k() const { return k_; }
  const std::set<std::string>& vocab() const { return vocab_; }

  // Raw count of an n-gram of any length in [1, order], over the padded
  // sentences.
  long Count(const std::vector<std::string>& ngram) const;

  // Smoothed P(word | context); context is the n-1 preceding symbols.
  // Out-of-vocabulary words (in either position) map to UNK.
  double Probability(const std::vector<std::string>& context,
                     const std::string& word) const;

  // exp of the mean negative log-probability per scored token. For
  // order >= 2 the end-of-sentence token is scored too.
  double Perplexity(const std::vector<std::vector<std::string>>& test) const;

  // The number of successor outcomes the smoothing mass spreads over:
  // vocab + UNK, plus </s> for order >= 2.
  size_t SuccessorSpaceSize() const;

 private:
  int order_ = 0;
  double k_ = 1.0;
  std::set<std::string> vocab_;
  // Joined-with-\x1f n-gram -> count, one table per length 1..order.
  std::vector<std::unordered_map<std::string, long>> tables_;
  // Context (length order-1) -> total successor count.
  std::unordered_map<std::string, long> context_totals_;

  std::string MapWord(const std::string& w) const;
};

struct OovCounts {
  size_t types = 0;
  size_t tokens = 0;
};

// Counts test word types and tokens absent from the training vocabulary.
OovCounts OovCount(const std::set<std::string>& train_vocab,
                   const std::vector<std::vector<std::string>>& test);

}  // namespace slukit

#endif  // SLUKIT_LM_H_
