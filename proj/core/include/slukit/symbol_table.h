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

#ifndef SLUKIT_SYMBOL_TABLE_H_
#define SLUKIT_SYMBOL_TABLE_H_

#include <filesystem>
#include <map>
#include <string>

namespace slukit {

// Bijective mapping between labels and single-character delimiters used by
// the enriched-transcript codec. The `none` intent never has a symbol.
// Intent delimiters are emitted `repeat` times per group; concept delimiters
// always appear once on each side of a slot.
struct SymbolTable {
  std::map<std::string, char> intent_symbols;
  std::map<std::string, char> concept_symbols;
  char mask_char = '*';
  int repeat = 1;  // 1 or 2

  bool IsIntentChar(char c) const;
  bool IsConceptChar(char c) const;
  bool IsDelimiterChar(char c) const { return IsIntentChar(c) || IsConceptChar(c); }

  // Reverse lookups; throw ValidationError on unknown characters.
  const std::string& IntentForChar(char c) const;
  const std::string& ConceptForChar(char c) const;

  // Checks pairwise-distinct delimiters, no whitespace, mask distinct,
  // repeat in {1,2}, and that `none` carries no symbol.
  void Validate() const;
};

// JSON file format:
//   {"intents": {"set_device": "@", ...},
//    "concepts": {"action": "^", ...},
//    "mask": "*", "repeat": 1}
SymbolTable ReadSymbolTable(const std::filesystem::path& path);
void WriteSymbolTable(const std::filesystem::path& path,
                      const SymbolTable& table);

// The shipped assignment covering the default semantic space. Concept
// symbols for labels without an established convention use otherwise unused
// punctuation; see data/symbols.json for the full listing.
SymbolTable DefaultSymbolTable();

}  // namespace slukit

#endif  // SLUKIT_SYMBOL_TABLE_H_
