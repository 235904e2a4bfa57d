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

#include "slukit/perturb.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "slukit/error.h"
#include "slukit/text.h"

namespace slukit {

using nlohmann::json;

SubstitutionPlan ReadSubstitutionPlan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open substitution plan: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ParseError("invalid JSON in substitution plan: " + path.string());
  SubstitutionPlan plan;
  try {
    plan.step = j.at("step").get<int>();
    plan.categories = j.at("categories").get<std::vector<std::string>>();
    for (const auto& [cat, words] : j.at("substitutions").items()) {
      plan.substitutions[cat] =
          words.get<std::map<std::string, std::string>>();
    }
  } catch (const json::exception& e) {
    throw ValidationError("substitution plan schema violation in " +
                          path.string() + ": " + e.what());
  }
  if (plan.step < 1 || plan.step > 4)
    throw ValidationError("substitution plan: step must be in 1..4");
  return plan;
}

std::string SubstitutionStats::TsvHeader() {
  return "Step\t#WordTypes\t#Words\t%WordType\t%TotalWords";
}

std::string SubstitutionStats::TsvRow() const {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "Step %d\t%zu\t%zu\t%.2f\t%.2f", step,
                word_types, word_tokens, pct_types, pct_tokens);
  return buf;
}

std::pair<std::vector<Utterance>, SubstitutionStats> ApplyOov(
    const std::vector<Utterance>& corpus, const SubstitutionPlan& plan,
    const std::set<std::string>& train_vocab) {
  // A replacement found in the training vocabulary defeats the purpose of
  // the experiment; reject the plan outright.
  for (const auto& [cat, words] : plan.substitutions) {
    for (const auto& [orig, repl] : words) {
      for (const std::string& tok : Tokenize(repl)) {
        if (train_vocab.count(tok))
          throw ValidationError("substitution plan violation: replacement '" +
                                tok + "' (for '" + orig + "' in category '" +
                                cat + "') occurs in the training vocabulary");
      }
    }
  }

  std::set<std::string> active(plan.categories.begin(), plan.categories.end());
  std::set<std::string> corpus_vocab;
  size_t total_tokens = 0;
  for (const Utterance& u : corpus) {
    total_tokens += u.tokens.size();
    corpus_vocab.insert(u.tokens.begin(), u.tokens.end());
  }

  SubstitutionStats stats;
  stats.step = plan.step;
  std::set<std::string> replaced_types;

  auto lookup = [&](const std::string& category,
                    const std::string& word) -> const std::string* {
    if (!active.count(category)) return nullptr;
    auto cit = plan.substitutions.find(category);
    if (cit == plan.substitutions.end()) return nullptr;
    auto wit = cit->second.find(word);
    return wit == cit->second.end() ? nullptr : &wit->second;
  };

  std::vector<Utterance> out;
  out.reserve(corpus.size());
  for (const Utterance& u : corpus) {
    Utterance v = u;
    std::vector<std::string> tokens;
    tokens.reserve(u.tokens.size());
    size_t slot_idx = 0;
    std::vector<SlotSpan> slots = u.slots;
    for (size_t i = 0; i < u.tokens.size(); ++i) {
      while (slot_idx < slots.size() &&
             u.slots[slot_idx].end <= static_cast<int>(i))
        ++slot_idx;
      const SlotSpan* in_slot = nullptr;
      if (slot_idx < slots.size() &&
          u.slots[slot_idx].start <= static_cast<int>(i) &&
          static_cast<int>(i) < u.slots[slot_idx].end) {
        in_slot = &u.slots[slot_idx];
      }
      if (in_slot && in_slot->start == static_cast<int>(i)) {
        slots[slot_idx].start = static_cast<int>(tokens.size());
      }
      const std::string* repl =
          in_slot ? lookup(in_slot->label, u.tokens[i])
                  : lookup(kKeywordCategory, u.tokens[i]);
      if (repl) {
        replaced_types.insert(u.tokens[i]);
        ++stats.word_tokens;
        for (const std::string& tok : Tokenize(*repl)) tokens.push_back(tok);
      } else {
        tokens.push_back(u.tokens[i]);
      }
      if (in_slot && in_slot->end == static_cast<int>(i) + 1) {
        slots[slot_idx].end = static_cast<int>(tokens.size());
      }
    }
    v.tokens = std::move(tokens);
    v.slots = std::move(slots);
    RefreshSlotValues(&v);
    ValidateUtterance(v);
    out.push_back(std::move(v));
  }

  stats.word_types = replaced_types.size();
  stats.pct_types = corpus_vocab.empty()
                        ? 0.0
                        : 100.0 * stats.word_types / corpus_vocab.size();
  stats.pct_tokens =
      total_tokens == 0 ? 0.0 : 100.0 * stats.word_tokens / total_tokens;
  return {std::move(out), stats};
}

SyntaxPlan ReadSyntaxPlan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open syntax plan: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ParseError("invalid JSON in syntax plan: " + path.string());
  SyntaxPlan plan;
  try {
    plan.step = j.at("step").get<int>();
    for (const auto& [verb, spec] : j.at("verb_rewrites").items()) {
      VerbRewrite r;
      if (spec.contains("pre"))
        r.pre = spec.at("pre").get<std::vector<std::string>>();
      r.verb = spec.at("verb").get<std::string>();
      if (spec.contains("post"))
        r.post = spec.at("post").get<std::vector<std::string>>();
      plan.verb_rewrites[verb] = std::move(r);
    }
    if (j.contains("disfluency")) {
      const json& d = j.at("disfluency");
      if (d.contains("determiners"))
        plan.determiners = d.at("determiners").get<std::vector<std::string>>();
      plan.filler = d.value("filler", std::string("euh"));
    }
  } catch (const json::exception& e) {
    throw ValidationError("syntax plan schema violation in " + path.string() +
                          ": " + e.what());
  }
  if (plan.step < 1 || plan.step > 2)
    throw ValidationError("syntax plan: step must be 1 or 2");
  return plan;
}

namespace {

// Replaces tokens [start, end) by `repl`, shifting all slot spans that
// follow. Returns the length delta.
int SpliceTokens(Utterance* u, int start, int end,
                 const std::vector<std::string>& repl) {
  u->tokens.erase(u->tokens.begin() + start, u->tokens.begin() + end);
  u->tokens.insert(u->tokens.begin() + start, repl.begin(), repl.end());
  return static_cast<int>(repl.size()) - (end - start);
}

}  // namespace

std::vector<Utterance> ApplySyntax(const std::vector<Utterance>& corpus,
                                   const SyntaxPlan& plan) {
  std::vector<Utterance> out;
  out.reserve(corpus.size());
  for (const Utterance& orig : corpus) {
    Utterance u = orig;

    // Step 1: single-token action slots become pre + infinitive + post with
    // the concept delimiter moving onto the infinitive.
    for (size_t s = 0; s < u.slots.size(); ++s) {
      SlotSpan& slot = u.slots[s];
      if (slot.label != "action" || slot.end - slot.start != 1) continue;
      auto it = plan.verb_rewrites.find(u.tokens[slot.start]);
      if (it == plan.verb_rewrites.end()) continue;
      const VerbRewrite& rw = it->second;
      std::vector<std::string> repl = rw.pre;
      repl.push_back(rw.verb);
      repl.insert(repl.end(), rw.post.begin(), rw.post.end());
      int delta = SpliceTokens(&u, slot.start, slot.end, repl);
      int new_start = slot.start + static_cast<int>(rw.pre.size());
      slot.start = new_start;
      slot.end = new_start + 1;
      for (size_t t = s + 1; t < u.slots.size(); ++t) {
        u.slots[t].start += delta;
        u.slots[t].end += delta;
      }
    }

    // Step 2: disfluencies around device slots. A leading determiner is
    // moved out of the slot and doubled; slots without one get the filler.
    if (plan.step >= 2) {
      for (size_t s = 0; s < u.slots.size(); ++s) {
        SlotSpan& slot = u.slots[s];
        if (slot.label != "device") continue;
        const std::string first = u.tokens[slot.start];
        bool is_det = std::find(plan.determiners.begin(),
                                plan.determiners.end(),
                                first) != plan.determiners.end();
        int delta = 0;
        if (is_det && slot.end - slot.start >= 2) {
          // [la bouilloire] -> la la [bouilloire]
          u.tokens.insert(u.tokens.begin() + slot.start, first);
          delta = 1;
          slot.start += 2;
          slot.end += 1;
        } else if (!plan.filler.empty()) {
          u.tokens.insert(u.tokens.begin() + slot.start, plan.filler);
          delta = 1;
          slot.start += 1;
          slot.end += 1;
        }
        for (size_t t = s + 1; t < u.slots.size(); ++t) {
          u.slots[t].start += delta;
          u.slots[t].end += delta;
        }
      }
    }

    RefreshSlotValues(&u);
    ValidateUtterance(u);
    out.push_back(std::move(u));
  }
  return out;
}

LengthSplit SplitByLength(const std::vector<Utterance>& corpus,
                          size_t threshold) {
  LengthSplit split;
  for (const Utterance& u : corpus) {
    if (u.tokens.size() > threshold) {
      split.longer.push_back(u);
    } else {
      split.shorter.push_back(u);
    }
  }
  return split;
}

}  // namespace slukit
