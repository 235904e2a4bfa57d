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

#include "slukit/channel.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"
#include "slukit/align.h"
#include "slukit/error.h"
#include "slukit/metrics.h"
#include "slukit/text.h"

namespace slukit {

using nlohmann::json;

void NoiseProfile::Validate(const SymbolTable& table) const {
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_range(p_sub) || !in_range(p_del) || !in_range(p_ins) ||
      !in_range(symbol_del))
    throw ValidationError("noise profile '" + name +
                          "': probabilities must be in [0, 1]");
  if (p_sub + p_del > 1.0)
    throw ValidationError("noise profile '" + name +
                          "': p_sub + p_del must not exceed 1");
  for (const std::string& w : confusion_vocab) {
    if (w.empty() || ContainsWhitespace(w))
      throw ValidationError("noise profile '" + name +
                            "': invalid confusion word '" + w + "'");
    for (char c : w) {
      if (table.IsDelimiterChar(c))
        throw ValidationError("noise profile '" + name +
                              "': confusion word '" + w +
                              "' contains a delimiter character");
    }
  }
}

namespace {

NoiseProfile ProfileFromJson(const json& j, const std::string& where) {
  NoiseProfile p;
  try {
    p.name = j.value("name", std::string("noise"));
    p.p_sub = j.value("p_sub", 0.0);
    p.p_del = j.value("p_del", 0.0);
    p.p_ins = j.value("p_ins", 0.0);
    p.symbol_del = j.value("symbol_del", 0.0);
    p.symbols_immune = j.value("symbols_immune", false);
    if (j.contains("confusion_vocab"))
      p.confusion_vocab =
          j.at("confusion_vocab").get<std::vector<std::string>>();
    p.seed = j.value("seed", 0ULL);
  } catch (const json::exception& e) {
    throw ValidationError("noise profile schema violation in " + where + ": " +
                          e.what());
  }
  return p;
}

json LoadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open noise profile: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ParseError("invalid JSON in noise profile: " + path.string());
  return j;
}

double NextDouble(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

size_t NextIndex(std::mt19937_64& rng, size_t bound) {
  return static_cast<size_t>(NextDouble(rng) * static_cast<double>(bound));
}

bool IsSpaceByte(char c) { return c == ' ' || c == '\t'; }

// A space-separated chunk of an enriched line: leading delimiter characters,
// the word body, trailing delimiter characters.
struct Chunk {
  std::string pre;
  std::string word;
  std::string post;
};

std::vector<Chunk> SplitChunks(const std::string& text,
                               const SymbolTable& table) {
  std::vector<Chunk> chunks;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpaceByte(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsSpaceByte(text[i])) ++i;
    if (i == start) continue;
    std::string raw = text.substr(start, i - start);
    Chunk c;
    size_t a = 0, b = raw.size();
    while (a < b && table.IsDelimiterChar(raw[a])) c.pre.push_back(raw[a++]);
    while (b > a && table.IsDelimiterChar(raw[b - 1])) --b;
    c.word = raw.substr(a, b - a);
    c.post = raw.substr(b);
    chunks.push_back(std::move(c));
  }
  return chunks;
}

std::string DropSymbols(const std::string& symbols, double p_del,
                        std::mt19937_64& rng) {
  if (p_del <= 0.0) return symbols;
  std::string kept;
  for (char c : symbols) {
    if (NextDouble(rng) >= p_del) kept.push_back(c);
  }
  return kept;
}

}  // namespace

NoiseProfile ReadNoiseProfile(const std::filesystem::path& path) {
  return ProfileFromJson(LoadJsonFile(path), path.string());
}

std::vector<NoiseProfile> ReadNoiseProfileSweep(
    const std::filesystem::path& path) {
  json j = LoadJsonFile(path);
  std::vector<NoiseProfile> sweep;
  if (j.is_array()) {
    for (const json& e : j) sweep.push_back(ProfileFromJson(e, path.string()));
  } else {
    sweep.push_back(ProfileFromJson(j, path.string()));
  }
  return sweep;
}

std::vector<EnrichedRecord> Corrupt(const std::vector<EnrichedRecord>& corpus,
                                    const NoiseProfile& profile,
                                    const SymbolTable& table) {
  profile.Validate(table);

  std::vector<std::string> pool = profile.confusion_vocab;
  if (pool.empty()) {
    // Deterministic fallback: the corpus's own sorted word inventory.
    std::set<std::string> words;
    for (const EnrichedRecord& r : corpus) {
      for (const Chunk& c : SplitChunks(r.text, table)) {
        if (!c.word.empty()) words.insert(c.word);
      }
    }
    pool.assign(words.begin(), words.end());
  }

  std::vector<EnrichedRecord> out;
  out.reserve(corpus.size());
  for (const EnrichedRecord& r : corpus) {
    std::mt19937_64 rng(Mix64(profile.seed, Fnv1a64(r.id)));
    std::vector<std::string> pieces;
    for (const Chunk& c : SplitChunks(r.text, table)) {
      std::string pre = c.pre;
      std::string word = c.word;
      std::string post = c.post;
      bool insert_after = false;
      std::string inserted;

      if (!word.empty() && word != std::string(1, table.mask_char)) {
        double u = NextDouble(rng);
        if (u < profile.p_del) {
          if (profile.symbols_immune) {
            word.clear();  // delimiters survive the deleted word
          } else {
            pre.clear();
            word.clear();
            post.clear();
          }
        } else if (u < profile.p_del + profile.p_sub && !pool.empty()) {
          size_t idx = NextIndex(rng, pool.size());
          if (pool[idx] == word) idx = (idx + 1) % pool.size();
          if (pool[idx] != word) word = pool[idx];
        }
        if (NextDouble(rng) < profile.p_ins && !pool.empty()) {
          insert_after = true;
          inserted = pool[NextIndex(rng, pool.size())];
        }
      }
      pre = DropSymbols(pre, profile.symbol_del, rng);
      post = DropSymbols(post, profile.symbol_del, rng);

      std::string rebuilt = pre + word + post;
      if (!rebuilt.empty()) pieces.push_back(rebuilt);
      if (insert_after) pieces.push_back(inserted);
    }
    EnrichedRecord h;
    h.id = r.id;
    h.text = JoinTokens(pieces);
    h.meta = r.meta;
    h.meta["noise"] = profile.name;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<StudyRow> WerCerStudy(const std::vector<Utterance>& reference,
                                  const std::vector<NoiseProfile>& sweep,
                                  const SymbolTable& table) {
  if (reference.size() < 100)
    throw ValidationError("wer/cer study requires at least 100 utterances");
  for (const Utterance& u : reference) {
    if (u.slots.empty())
      throw ValidationError("wer/cer study requires a concept in every "
                            "utterance; '" + u.id + "' has none");
  }

  std::vector<EnrichedRecord> encoded;
  encoded.reserve(reference.size());
  for (const Utterance& u : reference) {
    encoded.push_back({u.id, Encode(u, table).text, u.meta});
  }

  std::vector<StudyRow> rows;
  for (const NoiseProfile& profile : sweep) {
    std::vector<EnrichedRecord> hyp = Corrupt(encoded, profile, table);

    std::vector<double> wer, cer;
    wer.reserve(reference.size());
    cer.reserve(reference.size());
    for (size_t i = 0; i < reference.size(); ++i) {
      const Utterance& ref = reference[i];
      DecodeResult d = Decode(EnrichedTranscript{hyp[i].text}, table);
      AlignmentResult a = Align(ref.tokens, d.utterance.tokens);
      wer.push_back(a.Wer());
      std::vector<std::string> ref_labels;
      for (const SlotSpan& s : ref.slots) ref_labels.push_back(s.label);
      cer.push_back(
          Cer(ref_labels,
              ExtractSymbolSequence(EnrichedTranscript{hyp[i].text}, table))
              .Cer());
    }

    StudyRow row;
    row.profile_name = profile.name;
    row.utterances = reference.size();
    row.mean_wer =
        std::accumulate(wer.begin(), wer.end(), 0.0) / wer.size();
    row.mean_cer =
        std::accumulate(cer.begin(), cer.end(), 0.0) / cer.size();
    try {
      row.correlation = Correlate(wer, cer);
    } catch (const ValidationError& e) {
      throw ValidationError("profile '" + profile.name +
                            "': degenerate score vectors: " + e.what());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slukit
