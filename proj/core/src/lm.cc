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

#include "slukit/lm.h"

#include <cmath>

#include "slukit/error.h"

namespace slukit {

namespace {

std::string JoinKey(const std::vector<std::string>& symbols, size_t begin,
                    size_t len) {
  std::string key;
  for (size_t i = 0; i < len; ++i) {
    if (i > 0) key.push_back('\x1f');
    key += symbols[begin + i];
  }
  return key;
}

}  // namespace

std::string NGramModel::MapWord(const std::string& w) const {
  if (w == kBosToken || w == kEosToken) return w;
  return vocab_.count(w) ? w : kUnkToken;
}

size_t NGramModel::SuccessorSpaceSize() const {
  return vocab_.size() + 1 + (order_ >= 2 ? 1 : 0);
}

NGramModel NGramModel::Train(
    const std::vector<std::vector<std::string>>& corpus, int order, double k) {
  if (corpus.empty()) throw ValidationError("lm: empty training corpus");
  if (order < 1) throw ValidationError("lm: order must be >= 1");
  if (!(k > 0.0)) throw ValidationError("lm: smoothing constant must be > 0");

  NGramModel m;
  m.order_ = order;
  m.k_ = k;
  m.tables_.resize(order);
  for (const auto& sentence : corpus) {
    for (const std::string& w : sentence) m.vocab_.insert(w);
  }
  for (const auto& sentence : corpus) {
    std::vector<std::string> padded;
    if (order >= 2) {
      padded.assign(order - 1, kBosToken);
      padded.insert(padded.end(), sentence.begin(), sentence.end());
      padded.push_back(kEosToken);
    } else {
      padded = sentence;
    }
    for (int len = 1; len <= order; ++len) {
      if (padded.size() < static_cast<size_t>(len)) continue;
      for (size_t i = 0; i + len <= padded.size(); ++i) {
        ++m.tables_[len - 1][JoinKey(padded, i, len)];
      }
    }
    // Context totals for the top order: every window of n-1 symbols that has
    // a successor inside the padded sentence.
    size_t ctx_len = order - 1;
    if (padded.size() > ctx_len) {
      for (size_t i = 0; i + ctx_len < padded.size(); ++i) {
        ++m.context_totals_[JoinKey(padded, i, ctx_len)];
      }
    }
  }
  return m;
}

long NGramModel::Count(const std::vector<std::string>& ngram) const {
  if (ngram.empty() || ngram.size() > static_cast<size_t>(order_))
    throw ValidationError("lm: n-gram length out of range");
  const auto& table = tables_[ngram.size() - 1];
  auto it = table.find(JoinKey(ngram, 0, ngram.size()));
  return it == table.end() ? 0 : it->second;
}

double NGramModel::Probability(const std::vector<std::string>& context,
                               const std::string& word) const {
  if (context.size() != static_cast<size_t>(order_ - 1))
    throw ValidationError("lm: context must have order-1 symbols");
  std::vector<std::string> mapped;
  mapped.reserve(context.size() + 1);
  for (const std::string& c : context) mapped.push_back(MapWord(c));
  mapped.push_back(MapWord(word));

  std::string ctx_key = JoinKey(mapped, 0, mapped.size() - 1);
  std::string full_key = JoinKey(mapped, 0, mapped.size());
  auto cit = context_totals_.find(ctx_key);
  long ctx_total = cit == context_totals_.end() ? 0 : cit->second;
  const auto& top = tables_[order_ - 1];
  auto nit = top.find(full_key);
  long ngram_count = nit == top.end() ? 0 : nit->second;
  return (ngram_count + k_) /
         (ctx_total + k_ * static_cast<double>(SuccessorSpaceSize()));
}

double NGramModel::Perplexity(
    const std::vector<std::vector<std::string>>& test) const {
  if (test.empty()) throw ValidationError("lm: empty test corpus");
  double log_sum = 0.0;
  size_t scored = 0;
  for (const auto& sentence : test) {
    std::vector<std::string> padded;
    if (order_ >= 2) {
      padded.assign(order_ - 1, kBosToken);
      padded.insert(padded.end(), sentence.begin(), sentence.end());
      padded.push_back(kEosToken);
    } else {
      padded = sentence;
    }
    size_t first = order_ >= 2 ? static_cast<size_t>(order_ - 1) : 0;
    for (size_t i = first; i < padded.size(); ++i) {
      std::vector<std::string> ctx(padded.begin() + (i - first),
                                   padded.begin() + i);
      log_sum += std::log(Probability(ctx, padded[i]));
      ++scored;
    }
  }
  if (scored == 0) throw ValidationError("lm: nothing to score");
  return std::exp(-log_sum / static_cast<double>(scored));
}

OovCounts OovCount(const std::set<std::string>& train_vocab,
                   const std::vector<std::vector<std::string>>& test) {
  OovCounts out;
  std::set<std::string> seen_types;
  for (const auto& sentence : test) {
    for (const std::string& w : sentence) {
      if (train_vocab.count(w)) continue;
      ++out.tokens;
      seen_types.insert(w);
    }
  }
  out.types = seen_types.size();
  return out;
}

}  // namespace slukit
