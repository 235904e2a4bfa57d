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

#ifndef SLUKIT_TEXT_H_
#define SLUKIT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace slukit {

// Splits raw UTF-8 text into word tokens: whitespace splitting after
// apostrophe normalization. The typographic apostrophe U+2019 is folded to
// U+0027, and French elision clitics are split off with their apostrophe
// attached to the left piece: "l'ampoule" -> ["l'", "ampoule"].
std::vector<std::string> Tokenize(std::string_view text);

// Joins tokens with single spaces. Inverse of whitespace splitting, not of
// elision splitting; see Detokenize for display text.
std::string JoinTokens(const std::vector<std::string>& tokens);

// Joins tokens and re-glues elisions ("l' ampoule" -> "l'ampoule") so the
// result reads like ordinary French text.
std::string Detokenize(const std::vector<std::string>& tokens);

// Splits a UTF-8 string into codepoint-sized chunks (each element is the
// byte sequence of one codepoint). Used for character-level alignment.
std::vector<std::string> Utf8Chars(std::string_view text);

// True if the string contains any ASCII whitespace byte.
bool ContainsWhitespace(std::string_view s);

// FNV-1a 64-bit hash; stable across platforms, used for manifests and
// deterministic per-utterance seeding.
unsigned long long Fnv1a64(std::string_view s);

// SplitMix64-style mixer used to combine seeds with utterance hashes.
unsigned long long Mix64(unsigned long long a, unsigned long long b);

}  // namespace slukit

#endif  // SLUKIT_TEXT_H_
