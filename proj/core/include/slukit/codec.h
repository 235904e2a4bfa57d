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

#ifndef SLUKIT_CODEC_H_
#define SLUKIT_CODEC_H_

#include <string>
#include <vector>

#include "slukit/corpus.h"
#include "slukit/symbol_table.h"

namespace slukit {

// A flat transcription with intent and concept delimiter characters
// injected, e.g. "@ vocadom ^allume^ }la lumière} @".
struct EnrichedTranscript {
  std::string text;

  bool operator==(const EnrichedTranscript&) const = default;
};

// Repairs the decoder had to make on a malformed string. Empty diagnostics
// means the input was well-formed.
struct DecodeDiagnostics {
  std::vector<std::string> notes;

  bool clean() const { return notes.empty(); }
};

struct DecodeResult {
  Utterance utterance;
  DecodeDiagnostics diagnostics;
};

// Renders the utterance in the enriched format: intent symbol groups at both
// ends (omitted for `none`), each slot wrapped in its concept symbol glued
// to the first and last slot word. Throws ValidationError on labels missing
// from the table or invalid spans.
EnrichedTranscript Encode(const Utterance& u, const SymbolTable& table);

// Best-effort inverse of Encode. Never fails on text: an unpaired concept
// symbol closes at the next same symbol or at the end of the utterance, a
// missing intent group maps to `none`, and every repair is recorded in the
// diagnostics. The returned utterance has no id; callers attach one.
DecodeResult Decode(const EnrichedTranscript& t, const SymbolTable& table);

// Replaces every word outside any concept region by the mask character,
// keeping delimiters, in-slot words and the keyword (the first word after
// the opening intent group) unchanged. `none` utterances have no keyword, so
// all their out-of-slot words are masked. Throws ValidationError if the
// input does not decode cleanly.
EnrichedTranscript MaskOutsideSlots(const EnrichedTranscript& t,
                                    const SymbolTable& table);

// The ordered concept labels whose opening symbol occurs in the string; the
// 2k+1'th occurrence of a delimiter opens a new region, so an unpaired
// trailing symbol still contributes its label. Tolerant of arbitrary input.
std::vector<std::string> ExtractSymbolSequence(const EnrichedTranscript& t,
                                               const SymbolTable& table);

}  // namespace slukit

#endif  // SLUKIT_CODEC_H_
