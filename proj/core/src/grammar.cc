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

#include "slukit/grammar.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "slukit/error.h"
#include "slukit/text.h"

namespace slukit {

namespace {

bool IsNonterminalName(const std::string& s) {
  if (s.empty() || s[0] < 'A' || s[0] > 'Z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// Splits a line into whitespace-delimited fields, keeping quoted strings
// together (quotes stripped, marked as terminal text).
struct Field {
  std::string text;
  bool quoted = false;
  size_t column = 0;
};

std::vector<Field> SplitFields(const std::string& line, int lineno,
                               const std::string& name) {
  std::vector<Field> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    size_t col = i + 1;
    if (line[i] == '"') {
      size_t end = line.find('"', i + 1);
      if (end == std::string::npos)
        throw ParseError(name + ":" + std::to_string(lineno) + ":" +
                         std::to_string(col) + ": unterminated quote");
      fields.push_back({line.substr(i + 1, end - i - 1), true, col});
      i = end + 1;
    } else {
      size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      fields.push_back({line.substr(start, i - start), false, col});
    }
  }
  return fields;
}

std::string Location(const std::string& name, int lineno, size_t col) {
  return name + ":" + std::to_string(lineno) + ":" + std::to_string(col);
}

std::string FormatId(const char* prefix, size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%06zu", prefix, n);
  return buf;
}

// 53-bit uniform double in [0, 1); fully specified, unlike
// std::uniform_real_distribution.
double NextDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Grammar Grammar::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grammar file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str(), path.filename().string());
}

Grammar Grammar::Parse(const std::string& source, const std::string& name) {
  Grammar g;
  g.space_ = DefaultSemanticSpace();

  std::istringstream in(source);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments; '#' inside quotes stays.
    bool in_quote = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_quote = !in_quote;
      if (line[i] == '#' && !in_quote) {
        line.resize(i);
        break;
      }
    }
    std::vector<Field> fields = SplitFields(line, lineno, name);
    if (fields.empty()) continue;

    if (!fields[0].quoted && fields[0].text == "%intent") {
      if (fields.size() != 2)
        throw ParseError(Location(name, lineno, 1) +
                         ": %intent takes one name");
      g.space_.AddIntent(fields[1].text);
      continue;
    }
    if (!fields[0].quoted && fields[0].text == "%concept") {
      if (fields.size() < 2 || fields.size() > 3)
        throw ParseError(Location(name, lineno, 1) +
                         ": %concept takes a name and an optional parent=");
      std::string parent;
      if (fields.size() == 3) {
        const std::string& f = fields[2].text;
        if (f.rfind("parent=", 0) != 0)
          throw ParseError(Location(name, lineno, fields[2].column) +
                           ": expected parent=<concept>");
        parent = f.substr(7);
      }
      g.space_.AddConcept(fields[1].text, parent);
      continue;
    }

    // Production rule.
    if (fields.size() < 3 || fields[1].quoted || fields[1].text != "->")
      throw ParseError(Location(name, lineno, 1) +
                       ": expected 'NT -> symbols...'");
    if (fields[0].quoted || !IsNonterminalName(fields[0].text))
      throw ParseError(Location(name, lineno, fields[0].column) +
                       ": lhs must be a nonterminal name ([A-Z][A-Z0-9_]*)");
    const std::string lhs = fields[0].text;

    // Scan rhs until the feature block or weight.
    std::vector<std::vector<GrammarRule::Sym>> alternatives(1);
    std::string intent_feature, concept_feature;
    double weight = 1.0;
    size_t i = 2;
    for (; i < fields.size(); ++i) {
      const Field& f = fields[i];
      if (!f.quoted && f.text == "{") break;
      if (!f.quoted && !f.text.empty() && f.text[0] == '@') break;
      if (!f.quoted && f.text == "|") {
        alternatives.emplace_back();
        continue;
      }
      if (!f.quoted && IsNonterminalName(f.text)) {
        alternatives.back().push_back({false, f.text});
      } else {
        for (const std::string& tok : Tokenize(f.text)) {
          alternatives.back().push_back({true, tok});
        }
      }
    }
    // Feature block { key=value ... }.
    if (i < fields.size() && !fields[i].quoted && fields[i].text == "{") {
      ++i;
      bool closed = false;
      for (; i < fields.size(); ++i) {
        const Field& f = fields[i];
        if (!f.quoted && f.text == "}") {
          closed = true;
          ++i;
          break;
        }
        size_t eq = f.text.find('=');
        if (f.quoted || eq == std::string::npos)
          throw ParseError(Location(name, lineno, f.column) +
                           ": expected key=value inside feature block");
        std::string key = f.text.substr(0, eq);
        std::string value = f.text.substr(eq + 1);
        if (key == "intent") {
          if (!intent_feature.empty())
            throw ParseError(Location(name, lineno, f.column) +
                             ": duplicate intent feature");
          intent_feature = value;
        } else if (key == "concept") {
          if (!concept_feature.empty())
            throw ParseError(Location(name, lineno, f.column) +
                             ": at most one concept feature per rule");
          concept_feature = value;
        } else {
          throw ParseError(Location(name, lineno, f.column) +
                           ": unknown feature key '" + key + "'");
        }
      }
      if (!closed)
        throw ParseError(Location(name, lineno, 1) +
                         ": feature block not closed with '}'");
    }
    // Weight @w.
    if (i < fields.size()) {
      const Field& f = fields[i];
      if (f.quoted || f.text.empty() || f.text[0] != '@')
        throw ParseError(Location(name, lineno, f.column) +
                         ": unexpected trailing field '" + f.text + "'");
      try {
        size_t pos = 0;
        weight = std::stod(f.text.substr(1), &pos);
        if (pos != f.text.size() - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(Location(name, lineno, f.column) +
                         ": invalid weight '" + f.text + "'");
      }
      if (weight < 0.0)
        throw ParseError(Location(name, lineno, f.column) +
                         ": weight must be nonnegative");
      if (i + 1 < fields.size())
        throw ParseError(Location(name, lineno, fields[i + 1].column) +
                         ": weight must be the last field");
    }

    for (const auto& rhs : alternatives) {
      if (rhs.empty())
        throw ParseError(Location(name, lineno, 1) + ": empty rhs in rule for " +
                         lhs);
      GrammarRule rule;
      rule.lhs = lhs;
      rule.rhs = rhs;
      rule.intent = intent_feature;
      rule.concept_label = concept_feature;
      rule.weight = weight;
      rule.line = lineno;
      g.by_lhs_[lhs].push_back(g.rules_.size());
      g.rules_.push_back(std::move(rule));
    }
  }

  g.Validate(name);
  return g;
}

void Grammar::Validate(const std::string& name) {
  if (rules_.empty())
    throw ValidationError(name + ": no start symbol (grammar has no rules)");
  start_ = rules_.front().lhs;

  for (const GrammarRule& r : rules_) {
    std::string at = name + ":" + std::to_string(r.line);
    for (const GrammarRule::Sym& s : r.rhs) {
      if (!s.is_terminal && !by_lhs_.count(s.name))
        throw ValidationError(at + ": undefined nonterminal '" + s.name +
                              "' in rule for " + r.lhs);
    }
    if (!r.intent.empty() && !space_.HasIntent(r.intent))
      throw ValidationError(at + ": undefined intent '" + r.intent + "'");
    if (!r.concept_label.empty() && !space_.HasConcept(r.concept_label))
      throw ValidationError(at + ": undefined concept '" + r.concept_label + "'");
  }

  // Reachability from the start symbol.
  std::vector<std::string> frontier{start_};
  reachable_.insert(start_);
  while (!frontier.empty()) {
    std::string nt = frontier.back();
    frontier.pop_back();
    for (size_t idx : by_lhs_.at(nt)) {
      for (const GrammarRule::Sym& s : rules_[idx].rhs) {
        if (!s.is_terminal && reachable_.insert(s.name).second)
          frontier.push_back(s.name);
      }
    }
  }

  // Productivity fixpoint: every reachable nonterminal must derive a finite
  // terminal string, otherwise enumeration would recurse forever.
  std::set<std::string> productive;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GrammarRule& r : rules_) {
      if (productive.count(r.lhs)) continue;
      bool ok = std::all_of(r.rhs.begin(), r.rhs.end(),
                            [&](const GrammarRule::Sym& s) {
                              return s.is_terminal || productive.count(s.name);
                            });
      if (ok) {
        productive.insert(r.lhs);
        changed = true;
      }
    }
  }
  for (const std::string& nt : reachable_) {
    if (!productive.count(nt))
      throw ValidationError(name + ": nonterminal '" + nt +
                            "' cannot derive any finite sentence "
                            "(cycle without terminal escape)");
  }
}

std::set<std::string> Grammar::IntentsUsed() const {
  std::set<std::string> out;
  for (const GrammarRule& r : rules_) {
    if (!r.intent.empty()) out.insert(r.intent);
  }
  return out;
}

std::set<std::string> Grammar::ConceptsUsed() const {
  std::set<std::string> out;
  for (const GrammarRule& r : rules_) {
    if (!r.concept_label.empty()) out.insert(r.concept_label);
  }
  return out;
}

namespace {

// Work items for the leftmost depth-first expansion. A rule with a concept
// feature pushes a close marker after its rhs so the slot span ends exactly
// where the subtree's yield ends.
struct WorkItem {
  enum Kind { kTerminal, kNonterminal, kCloseSlot } kind;
  std::string text;  // terminal token or nonterminal name
  int depth = 0;
};

struct DeriveState {
  std::vector<std::string> tokens;
  std::vector<SlotSpan> slots;
  std::vector<std::pair<std::string, int>> open_slots;  // label, start
  std::string intent;
  int intent_line = 0;
};

}  // namespace

std::vector<Utterance> Grammar::Enumerate(const GenerationOptions& options,
                                          GenerationStats* stats) const {
  if (options.limit < 1) throw ValidationError("enumerate: limit must be >= 1");
  GenerationStats local;
  GenerationStats& st = stats ? *stats : local;
  st = GenerationStats{};

  std::vector<Utterance> out;
  std::unordered_set<std::string> seen;

  DeriveState state;
  // Returns false once the limit is reached.
  std::function<bool(const std::vector<WorkItem>&, size_t)> walk =
      [&](const std::vector<WorkItem>& agenda, size_t pos) -> bool {
    if (pos == agenda.size()) {
      std::string key = JoinTokens(state.tokens);
      if (!seen.insert(key).second) {
        ++st.duplicates_skipped;
        return true;
      }
      Utterance u;
      u.id = FormatId("gen", out.size() + 1);
      u.tokens = state.tokens;
      u.intent = state.intent.empty() ? kNoneIntent : state.intent;
      u.slots = state.slots;
      RefreshSlotValues(&u);
      out.push_back(std::move(u));
      ++st.emitted;
      return out.size() < options.limit;
    }
    const WorkItem& item = agenda[pos];
    switch (item.kind) {
      case WorkItem::kTerminal: {
        state.tokens.push_back(item.text);
        bool cont = walk(agenda, pos + 1);
        state.tokens.pop_back();
        return cont;
      }
      case WorkItem::kCloseSlot: {
        auto [label, start] = state.open_slots.back();
        state.open_slots.pop_back();
        state.slots.push_back(
            {label, start, static_cast<int>(state.tokens.size()), ""});
        bool cont = walk(agenda, pos + 1);
        state.slots.pop_back();
        state.open_slots.emplace_back(label, start);
        return cont;
      }
      case WorkItem::kNonterminal: {
        if (item.depth >= options.max_depth) {
          ++st.pruned_branches;
          return true;
        }
        for (size_t idx : by_lhs_.at(item.text)) {
          const GrammarRule& rule = rules_[idx];
          bool set_intent = !rule.intent.empty();
          if (set_intent && !state.intent.empty())
            throw ValidationError(
                "derivation carries two intent features (rules at lines " +
                std::to_string(state.intent_line) + " and " +
                std::to_string(rule.line) + ")");
          bool opens_slot = !rule.concept_label.empty();
          if (opens_slot && !state.open_slots.empty())
            throw ValidationError(
                "nested concept feature '" + rule.concept_label + "' inside '" +
                state.open_slots.back().first + "' (rule at line " +
                std::to_string(rule.line) + ")");

          std::vector<WorkItem> next;
          next.reserve(rule.rhs.size() + 1 + (agenda.size() - pos - 1));
          for (const GrammarRule::Sym& s : rule.rhs) {
            next.push_back({s.is_terminal ? WorkItem::kTerminal
                                          : WorkItem::kNonterminal,
                            s.name, item.depth + 1});
          }
          if (opens_slot) next.push_back({WorkItem::kCloseSlot, "", 0});
          next.insert(next.end(), agenda.begin() + pos + 1, agenda.end());

          if (set_intent) {
            state.intent = rule.intent;
            state.intent_line = rule.line;
          }
          if (opens_slot)
            state.open_slots.emplace_back(
                rule.concept_label, static_cast<int>(state.tokens.size()));
          bool cont = walk(next, 0);
          if (opens_slot) state.open_slots.pop_back();
          if (set_intent) {
            state.intent.clear();
            state.intent_line = 0;
          }
          if (!cont) return false;
        }
        return true;
      }
    }
    return true;
  };

  walk({{WorkItem::kNonterminal, start_, 0}}, 0);

  if (out.empty() && st.pruned_branches > 0)
    throw ValidationError(
        "derivation depth exceeded before any sentence completed "
        "(unbounded recursion?)");
  return out;
}

std::vector<Utterance> Grammar::Sample(size_t n, uint64_t seed,
                                       int max_depth) const {
  if (n < 1) throw ValidationError("sample: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Utterance> out;
  out.reserve(n);

  for (size_t i = 0; i < n; ++i) {
    DeriveState state;
    std::function<void(const std::string&, int)> derive =
        [&](const std::string& nt, int depth) {
          if (depth >= max_depth)
            throw ValidationError(
                "sample: derivation depth exceeded at nonterminal '" + nt +
                "'");
          const std::vector<size_t>& candidates = by_lhs_.at(nt);
          double total = 0.0;
          for (size_t idx : candidates) total += rules_[idx].weight;
          if (total <= 0.0)
            throw ValidationError("sample: nonterminal '" + nt +
                                  "' has no rule with positive weight");
          double u = NextDouble(rng) * total;
          size_t chosen = candidates.back();
          double acc = 0.0;
          for (size_t idx : candidates) {
            acc += rules_[idx].weight;
            if (u < acc) {
              chosen = idx;
              break;
            }
          }
          const GrammarRule& rule = rules_[chosen];
          if (!rule.intent.empty()) {
            if (!state.intent.empty())
              throw ValidationError(
                  "derivation carries two intent features (rule at line " +
                  std::to_string(rule.line) + ")");
            state.intent = rule.intent;
          }
          bool opens_slot = !rule.concept_label.empty();
          if (opens_slot && !state.open_slots.empty())
            throw ValidationError("nested concept feature '" + rule.concept_label +
                                  "' (rule at line " +
                                  std::to_string(rule.line) + ")");
          if (opens_slot)
            state.open_slots.emplace_back(
                rule.concept_label, static_cast<int>(state.tokens.size()));
          for (const GrammarRule::Sym& s : rule.rhs) {
            if (s.is_terminal) {
              state.tokens.push_back(s.name);
            } else {
              derive(s.name, depth + 1);
            }
          }
          if (opens_slot) {
            auto [label, start] = state.open_slots.back();
            state.open_slots.pop_back();
            state.slots.push_back(
                {label, start, static_cast<int>(state.tokens.size()), ""});
          }
        };
    derive(start_, 0);

    Utterance u;
    u.id = FormatId("smp", i + 1);
    u.tokens = std::move(state.tokens);
    u.intent = state.intent.empty() ? kNoneIntent : state.intent;
    u.slots = std::move(state.slots);
    std::sort(u.slots.begin(), u.slots.end(),
              [](const SlotSpan& a, const SlotSpan& b) {
                return a.start < b.start;
              });
    RefreshSlotValues(&u);
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace slukit
