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

#include "slukit/codec.h"

#include <array>
#include <optional>

#include "slukit/error.h"
#include "slukit/text.h"

namespace slukit {

namespace {

struct ScanEvent {
  enum Kind { kWord, kConceptSym, kIntentGroup } kind;
  std::string word;  // kWord
  char symbol = 0;   // kConceptSym / kIntentGroup
  int run = 0;       // kIntentGroup: number of contiguous repetitions
};

bool IsSpaceByte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

struct CharClasses {
  std::array<bool, 256> is_intent{};
  std::array<bool, 256> is_concept{};

  explicit CharClasses(const SymbolTable& st) {
    for (const auto& [name, c] : st.intent_symbols)
      is_intent[static_cast<unsigned char>(c)] = true;
    for (const auto& [name, c] : st.concept_symbols)
      is_concept[static_cast<unsigned char>(c)] = true;
  }
};

// Splits the raw string into word and delimiter events. Delimiter characters
// never belong to words, whether glued ("^allume^") or spaced ("^ allume ^").
// Contiguous runs of the same intent character form one group.
std::vector<ScanEvent> Scan(const std::string& text, const CharClasses& cc) {
  std::vector<ScanEvent> events;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      events.push_back({ScanEvent::kWord, word, 0, 0});
      word.clear();
    }
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    unsigned char uc = static_cast<unsigned char>(c);
    if (IsSpaceByte(c)) {
      flush();
    } else if (cc.is_intent[uc]) {
      flush();
      int run = 1;
      while (i + 1 < text.size() && text[i + 1] == c) {
        ++run;
        ++i;
      }
      events.push_back({ScanEvent::kIntentGroup, "", c, run});
    } else if (cc.is_concept[uc]) {
      flush();
      events.push_back({ScanEvent::kConceptSym, "", c, 0});
    } else {
      word.push_back(c);
    }
  }
  flush();
  return events;
}

}  // namespace

EnrichedTranscript Encode(const Utterance& u, const SymbolTable& table) {
  table.Validate();
  ValidateUtterance(u);
  if (u.intent != kNoneIntent && !table.intent_symbols.count(u.intent))
    throw ValidationError("encode: unknown intent '" + u.intent + "'");
  for (const SlotSpan& s : u.slots) {
    if (!table.concept_symbols.count(s.label))
      throw ValidationError("encode: unknown concept '" + s.label + "'");
  }
  CharClasses cc(table);
  for (const std::string& t : u.tokens) {
    for (char c : t) {
      if (cc.is_intent[static_cast<unsigned char>(c)] ||
          cc.is_concept[static_cast<unsigned char>(c)])
        throw ValidationError("encode: token '" + t +
                              "' contains a delimiter character");
    }
  }

  std::vector<std::string> parts;
  std::string intent_group;
  if (u.intent != kNoneIntent) {
    intent_group.assign(table.repeat, table.intent_symbols.at(u.intent));
    parts.push_back(intent_group);
  }
  size_t slot_idx = 0;
  for (size_t i = 0; i < u.tokens.size(); ++i) {
    std::string piece = u.tokens[i];
    if (slot_idx < u.slots.size()) {
      const SlotSpan& s = u.slots[slot_idx];
      char sym = table.concept_symbols.at(s.label);
      if (static_cast<int>(i) == s.start) piece.insert(piece.begin(), sym);
      if (static_cast<int>(i) == s.end - 1) {
        piece.push_back(sym);
        ++slot_idx;
      }
    }
    parts.push_back(piece);
  }
  if (!intent_group.empty()) parts.push_back(intent_group);
  return EnrichedTranscript{JoinTokens(parts)};
}

DecodeResult Decode(const EnrichedTranscript& t, const SymbolTable& table) {
  table.Validate();
  DecodeResult result;
  Utterance& u = result.utterance;
  auto diag = [&](const std::string& msg) {
    result.diagnostics.notes.push_back(msg);
  };

  CharClasses cc(table);
  std::vector<ScanEvent> events = Scan(t.text, cc);

  std::vector<std::pair<char, size_t>> intent_groups;  // (char, event index)
  std::optional<std::pair<std::string, int>> open;     // (label, start token)
  for (size_t e = 0; e < events.size(); ++e) {
    const ScanEvent& ev = events[e];
    switch (ev.kind) {
      case ScanEvent::kWord:
        u.tokens.push_back(ev.word);
        break;
      case ScanEvent::kIntentGroup:
        intent_groups.emplace_back(ev.symbol, e);
        break;
      case ScanEvent::kConceptSym: {
        const std::string& label = table.ConceptForChar(ev.symbol);
        if (!open) {
          open = {label, static_cast<int>(u.tokens.size())};
        } else if (open->first == label) {
          int end = static_cast<int>(u.tokens.size());
          if (end > open->second) {
            u.slots.push_back({label, open->second, end, ""});
          } else {
            diag("empty concept region '" + label + "' dropped");
          }
          open.reset();
        } else {
          diag("symbol for '" + label + "' inside open region '" +
               open->first + "' ignored");
        }
        break;
      }
    }
  }
  if (open) {
    int end = static_cast<int>(u.tokens.size());
    if (end > open->second) {
      u.slots.push_back({open->first, open->second, end, ""});
    }
    diag("unpaired symbol for '" + open->first + "' closed at utterance end");
  }

  if (intent_groups.empty()) {
    u.intent = kNoneIntent;
  } else {
    u.intent = table.IntentForChar(intent_groups[0].first);
    bool balanced = intent_groups.size() == 2 &&
                    intent_groups[0].first == intent_groups[1].first &&
                    intent_groups[0].second == 0 &&
                    intent_groups[1].second == events.size() - 1;
    if (!balanced) diag("unbalanced intent symbols");
  }

  RefreshSlotValues(&u);
  return result;
}

EnrichedTranscript MaskOutsideSlots(const EnrichedTranscript& t,
                                    const SymbolTable& table) {
  DecodeResult d = Decode(t, table);
  if (!d.diagnostics.clean()) {
    std::string msg = "mask: malformed transcript:";
    for (const std::string& n : d.diagnostics.notes) msg += " " + n + ";";
    throw ValidationError(msg);
  }
  Utterance u = d.utterance;
  std::vector<bool> in_slot(u.tokens.size(), false);
  for (const SlotSpan& s : u.slots) {
    for (int i = s.start; i < s.end; ++i) in_slot[i] = true;
  }
  // The keyword is the first word after the opening intent group; `none`
  // utterances have no intent group and therefore no keyword.
  int keyword = (u.intent != kNoneIntent && !u.tokens.empty()) ? 0 : -1;
  for (size_t i = 0; i < u.tokens.size(); ++i) {
    if (!in_slot[i] && static_cast<int>(i) != keyword) {
      u.tokens[i] = std::string(1, table.mask_char);
    }
  }
  RefreshSlotValues(&u);
  return Encode(u, table);
}

std::vector<std::string> ExtractSymbolSequence(const EnrichedTranscript& t,
                                               const SymbolTable& table) {
  table.Validate();
  std::vector<std::string> labels;
  CharClasses cc(table);
  std::map<char, bool> open_parity;
  for (const ScanEvent& ev : Scan(t.text, cc)) {
    if (ev.kind != ScanEvent::kConceptSym) continue;
    bool& open = open_parity[ev.symbol];
    if (!open) labels.push_back(table.ConceptForChar(ev.symbol));
    open = !open;
  }
  return labels;
}

}  // namespace slukit
