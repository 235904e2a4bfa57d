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

#include "slukit/symbol_table.h"

#include <cctype>
#include <fstream>
#include <set>

#include "json.hpp"
#include "slukit/corpus.h"
#include "slukit/error.h"

namespace slukit {

using nlohmann::json;

bool SymbolTable::IsIntentChar(char c) const {
  for (const auto& [name, sym] : intent_symbols) {
    if (sym == c) return true;
  }
  return false;
}

bool SymbolTable::IsConceptChar(char c) const {
  for (const auto& [name, sym] : concept_symbols) {
    if (sym == c) return true;
  }
  return false;
}

const std::string& SymbolTable::IntentForChar(char c) const {
  for (const auto& [name, sym] : intent_symbols) {
    if (sym == c) return name;
  }
  throw ValidationError(std::string("no intent for symbol '") + c + "'");
}

const std::string& SymbolTable::ConceptForChar(char c) const {
  for (const auto& [name, sym] : concept_symbols) {
    if (sym == c) return name;
  }
  throw ValidationError(std::string("no concept for symbol '") + c + "'");
}

void SymbolTable::Validate() const {
  if (repeat != 1 && repeat != 2)
    throw ValidationError("symbol table: repeat must be 1 or 2");
  if (intent_symbols.count(kNoneIntent))
    throw ValidationError("symbol table: the 'none' intent must not have a symbol");
  std::set<char> seen;
  auto check = [&](const std::string& name, char c) {
    if (std::isspace(static_cast<unsigned char>(c)))
      throw ValidationError("symbol table: whitespace delimiter for '" + name + "'");
    if (c == mask_char)
      throw ValidationError("symbol table: delimiter for '" + name +
                            "' collides with the mask character");
    if (!seen.insert(c).second)
      throw ValidationError(std::string("symbol table: duplicate delimiter '") +
                            c + "' (at '" + name + "')");
  };
  for (const auto& [name, c] : intent_symbols) check(name, c);
  for (const auto& [name, c] : concept_symbols) check(name, c);
}

namespace {

char SingleChar(const json& j, const std::string& what) {
  std::string s = j.get<std::string>();
  if (s.size() != 1)
    throw ValidationError("symbol table: " + what +
                          " must be a single ASCII character, got '" + s + "'");
  return s[0];
}

}  // namespace

SymbolTable ReadSymbolTable(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open symbol table: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ParseError("invalid JSON in symbol table: " + path.string());
  SymbolTable t;
  try {
    for (const auto& [name, sym] : j.at("intents").items())
      t.intent_symbols[name] = SingleChar(sym, "intent '" + name + "'");
    for (const auto& [name, sym] : j.at("concepts").items())
      t.concept_symbols[name] = SingleChar(sym, "concept '" + name + "'");
    if (j.contains("mask")) t.mask_char = SingleChar(j.at("mask"), "mask");
    t.repeat = j.value("repeat", 1);
  } catch (const json::exception& e) {
    throw ValidationError("symbol table schema violation in " + path.string() +
                          ": " + e.what());
  }
  t.Validate();
  return t;
}

void WriteSymbolTable(const std::filesystem::path& path,
                      const SymbolTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write symbol table: " + path.string());
  json intents = json::object();
  for (const auto& [name, c] : table.intent_symbols)
    intents[name] = std::string(1, c);
  json concepts = json::object();
  for (const auto& [name, c] : table.concept_symbols)
    concepts[name] = std::string(1, c);
  out << json{{"intents", intents},
              {"concepts", concepts},
              {"mask", std::string(1, table.mask_char)},
              {"repeat", table.repeat}}
             .dump(2)
      << '\n';
}

SymbolTable DefaultSymbolTable() {
  SymbolTable t;
  t.intent_symbols = {
      {"check_device", '#'},        {"contact", '['},
      {"get_room_property", '{'},   {"get_world_property", ']'},
      {"set_device", '@'},          {"set_device_property", '_'},
      {"set_room_property", '&'},
  };
  t.concept_symbols = {
      {"action", '^'},          {"device", '}'},
      {"location-room", '>'},   {"device-setting", ','},
      {"device-component", '<'},{"device-state", '='},
      {"location", '('},        {"location-floor", '+'},
      {"person", '!'},          {"person-name", '%'},
      {"organization", '$'},    {"property", ')'},
      {"room-property", ';'},   {"world-property", ':'},
      {"time", '/'},            {"amount", '~'},
  };
  t.mask_char = '*';
  t.repeat = 1;
  t.Validate();
  return t;
}

}  // namespace slukit
