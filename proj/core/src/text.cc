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

#include "slukit/text.h"

#include <cctype>

namespace slukit {

namespace {

bool IsSpaceByte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// U+2019 RIGHT SINGLE QUOTATION MARK in UTF-8.
constexpr const char* kCurlyApostrophe = "\xe2\x80\x99";

std::string NormalizeApostrophes(std::string_view piece) {
  std::string out;
  out.reserve(piece.size());
  for (size_t i = 0; i < piece.size();) {
    if (piece.size() - i >= 3 && piece.compare(i, 3, kCurlyApostrophe) == 0) {
      out.push_back('\'');
      i += 3;
    } else {
      out.push_back(piece[i]);
      ++i;
    }
  }
  return out;
}

// Splits "l'ampoule" into "l'" + "ampoule". An apostrophe only splits when
// there is material on both sides, so "l'" stays whole and a lone "'" is
// left untouched.
void SplitElisions(const std::string& piece, std::vector<std::string>* out) {
  size_t begin = 0;
  for (size_t i = 0; i < piece.size(); ++i) {
    if (piece[i] == '\'' && i + 1 < piece.size() && i >= begin) {
      out->push_back(piece.substr(begin, i - begin + 1));
      begin = i + 1;
    }
  }
  if (begin < piece.size()) out->push_back(piece.substr(begin));
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpaceByte(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsSpaceByte(text[i])) ++i;
    if (i > start) {
      std::string piece = NormalizeApostrophes(text.substr(start, i - start));
      SplitElisions(piece, &tokens);
    }
  }
  return tokens;
}

std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string Detokenize(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && !(out.size() && out.back() == '\'')) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> Utf8Chars(std::string_view text) {
  std::vector<std::string> chars;
  for (size_t i = 0; i < text.size();) {
    unsigned char b = static_cast<unsigned char>(text[i]);
    size_t len = 1;
    if ((b & 0x80) == 0x00) len = 1;
    else if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    if (i + len > text.size()) len = 1;  // tolerate truncated sequences
    chars.emplace_back(text.substr(i, len));
    i += len;
  }
  return chars;
}

bool ContainsWhitespace(std::string_view s) {
  for (char c : s) {
    if (IsSpaceByte(c)) return true;
  }
  return false;
}

unsigned long long Fnv1a64(std::string_view s) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

unsigned long long Mix64(unsigned long long a, unsigned long long b) {
  unsigned long long z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace slukit
