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

#ifndef SLUKIT_ALIGN_H_
#define SLUKIT_ALIGN_H_

#include <string>
#include <vector>

namespace slukit {

enum class EditOp { kMatch, kSub, kDel, kIns };

// Minimal unit-cost Levenshtein alignment between a reference and a
// hypothesis token sequence. Among minimal-cost scripts, the backtrace
// prefers match > substitution > deletion > insertion.
struct AlignmentResult {
  std::vector<EditOp> ops;  // replaying ops transforms ref into hyp
  int insertions = 0;
  int deletions = 0;
  int substitutions = 0;
  int ref_len = 0;
  bool empty_reference = false;  // ref_len == 0; wer reported as 0

  int Cost() const { return insertions + deletions + substitutions; }
  // (I + S + D) / N * 100; 0 when the reference is empty.
  double Wer() const;
};

AlignmentResult Align(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp);

// Applies the edit script to `ref`, consuming hypothesis tokens for
// substitutions and insertions. Returns the reconstructed hypothesis; used
// by tests to check script validity.
std::vector<std::string> ReplayOps(const AlignmentResult& a,
                                   const std::vector<std::string>& ref,
                                   const std::vector<std::string>& hyp);

}  // namespace slukit

#endif  // SLUKIT_ALIGN_H_
