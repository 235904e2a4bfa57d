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

#include "slukit/corpus.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "slukit/error.h"
#include "slukit/text.h"

namespace slukit {

using nlohmann::json;

std::string Utterance::Text() const { return JoinTokens(tokens); }

void RefreshSlotValues(Utterance* u) {
  for (SlotSpan& s : u->slots) {
    std::vector<std::string> covered(u->tokens.begin() + s.start,
                                     u->tokens.begin() + s.end);
    s.value = JoinTokens(covered);
  }
}

void ValidateUtterance(const Utterance& u) {
  auto fail = [&](const std::string& msg) {
    throw ValidationError("utterance '" + u.id + "': " + msg);
  };
  int prev_end = 0;
  for (const SlotSpan& s : u.slots) {
    if (s.start >= s.end) fail("slot '" + s.label + "' has start >= end");
    if (s.start < prev_end)
      fail("slot '" + s.label + "' overlaps or is out of order");
    if (s.end > static_cast<int>(u.tokens.size()))
      fail("slot '" + s.label + "' exceeds token count");
    std::vector<std::string> covered(u.tokens.begin() + s.start,
                                     u.tokens.begin() + s.end);
    if (s.value != JoinTokens(covered))
      fail("slot '" + s.label + "' value does not match covered tokens");
    prev_end = s.end;
  }
  for (const std::string& t : u.tokens) {
    if (t.empty()) fail("empty token");
    if (ContainsWhitespace(t)) fail("token contains whitespace: '" + t + "'");
  }
}

namespace {

json UtteranceToJson(const Utterance& u) {
  json slots = json::array();
  for (const SlotSpan& s : u.slots) {
    slots.push_back({{"label", s.label},
                     {"start", s.start},
                     {"end", s.end},
                     {"value", s.value}});
  }
  return json{{"id", u.id},
              {"tokens", u.tokens},
              {"intent", u.intent},
              {"slots", slots},
              {"meta", u.meta}};
}

Utterance UtteranceFromJson(const json& j, const std::string& where) {
  try {
    Utterance u;
    u.id = j.at("id").get<std::string>();
    u.tokens = j.at("tokens").get<std::vector<std::string>>();
    u.intent = j.value("intent", std::string(kNoneIntent));
    if (j.contains("slots")) {
      for (const json& s : j.at("slots")) {
        SlotSpan span;
        span.label = s.at("label").get<std::string>();
        span.start = s.at("start").get<int>();
        span.end = s.at("end").get<int>();
        if (s.contains("value")) {
          span.value = s.at("value").get<std::string>();
        } else {
          std::vector<std::string> covered(u.tokens.begin() + span.start,
                                           u.tokens.begin() + span.end);
          span.value = JoinTokens(covered);
        }
        u.slots.push_back(span);
      }
    }
    if (j.contains("meta")) {
      u.meta = j.at("meta").get<std::map<std::string, std::string>>();
    }
    ValidateUtterance(u);
    return u;
  } catch (const json::exception& e) {
    throw ValidationError(where + ": utterance schema violation: " + e.what());
  }
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path.string());
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path.string());
  return out;
}

json ParseLine(const std::string& line, const std::string& where) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) throw ParseError(where + ": invalid JSON");
  return j;
}

}  // namespace

std::vector<Utterance> ReadCorpus(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  std::vector<Utterance> corpus;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = path.string() + ":" + std::to_string(lineno);
    corpus.push_back(UtteranceFromJson(ParseLine(line, where), where));
  }
  return corpus;
}

void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<Utterance>& corpus) {
  std::ofstream out = OpenOutput(path);
  for (const Utterance& u : corpus) {
    out << UtteranceToJson(u).dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::string UtteranceToJsonLine(const Utterance& u) {
  return UtteranceToJson(u).dump();
}

Utterance UtteranceFromJsonLine(const std::string& line) {
  return UtteranceFromJson(ParseLine(line, "<line>"), "<line>");
}

std::vector<EnrichedRecord> ReadEnrichedCorpus(
    const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  std::vector<EnrichedRecord> corpus;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = path.string() + ":" + std::to_string(lineno);
    json j = ParseLine(line, where);
    try {
      EnrichedRecord r;
      r.id = j.at("id").get<std::string>();
      r.text = j.at("enriched").get<std::string>();
      if (j.contains("meta")) {
        r.meta = j.at("meta").get<std::map<std::string, std::string>>();
      }
      corpus.push_back(std::move(r));
    } catch (const json::exception& e) {
      throw ValidationError(where +
                            ": enriched record schema violation: " + e.what());
    }
  }
  return corpus;
}

void WriteEnrichedCorpus(const std::filesystem::path& path,
                         const std::vector<EnrichedRecord>& corpus) {
  std::ofstream out = OpenOutput(path);
  for (const EnrichedRecord& r : corpus) {
    out << json{{"id", r.id}, {"enriched", r.text}, {"meta", r.meta}}.dump()
        << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

bool LooksEnriched(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = ParseLine(line, path.string());
    return j.contains("enriched");
  }
  return false;
}

}  // namespace slukit
