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

#ifndef SLUKIT_CORPUS_H_
#define SLUKIT_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace slukit {

// The intent assigned to utterances that are not voice commands. It never
// carries a delimiter symbol.
inline constexpr const char* kNoneIntent = "none";

// A labeled span over an utterance's tokens; start inclusive, end exclusive.
struct SlotSpan {
  std::string label;
  int start = 0;
  int end = 0;
  std::string value;  // space-join of tokens[start..end)

  bool operator==(const SlotSpan&) const = default;
};

// One annotated utterance: the unit of every corpus handled by the toolkit.
struct Utterance {
  std::string id;
  std::vector<std::string> tokens;
  std::string intent = kNoneIntent;
  std::vector<SlotSpan> slots;  // ordered by start, non-overlapping
  std::map<std::string, std::string> meta;

  bool operator==(const Utterance&) const = default;

  std::string Text() const;  // space-joined tokens
};

// Rebuilds each slot's value from the token range. Used after any transform
// that edits tokens in place.
void RefreshSlotValues(Utterance* u);

// Checks span ordering, bounds, non-overlap and value consistency.
// Throws ValidationError with the utterance id on the first violation.
void ValidateUtterance(const Utterance& u);

// JSONL corpus I/O. Each line is one utterance object with fields
// id, tokens, intent, slots:[{label,start,end,value}], meta.
std::vector<Utterance> ReadCorpus(const std::filesystem::path& path);
void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<Utterance>& corpus);

// Single-utterance JSON conversions (one JSONL line without the newline).
std::string UtteranceToJsonLine(const Utterance& u);
Utterance UtteranceFromJsonLine(const std::string& line);

// An encoded corpus line: the flat transcript plus bookkeeping.
struct EnrichedRecord {
  std::string id;
  std::string text;
  std::map<std::string, std::string> meta;
};

std::vector<EnrichedRecord> ReadEnrichedCorpus(
    const std::filesystem::path& path);
void WriteEnrichedCorpus(const std::filesystem::path& path,
                         const std::vector<EnrichedRecord>& corpus);

// True if the JSONL file's first record carries an "enriched" field rather
// than a token list.
bool LooksEnriched(const std::filesystem::path& path);

}  // namespace slukit

#endif  // SLUKIT_CORPUS_H_
