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

#include "slukit/align.h"

#include <algorithm>

namespace slukit {

double AlignmentResult::Wer() const {
  if (ref_len == 0) return 0.0;
  return 100.0 * Cost() / ref_len;
}

AlignmentResult Align(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp) {
  const size_t m = ref.size();
  const size_t n = hyp.size();
  // d[i][j]: cost of aligning ref[0..i) with hyp[0..j).
  std::vector<std::vector<int>> d(m + 1, std::vector<int>(n + 1, 0));
  for (size_t i = 0; i <= m; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= n; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      int sub = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      int del = d[i - 1][j] + 1;
      int ins = d[i][j - 1] + 1;
      d[i][j] = std::min({sub, del, ins});
    }
  }

  AlignmentResult out;
  out.ref_len = static_cast<int>(m);
  out.empty_reference = (m == 0);

  // Backtrace, preferring match > substitution > deletion > insertion.
  std::vector<EditOp> rev;
  size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      bool eq = ref[i - 1] == hyp[j - 1];
      int diag = d[i - 1][j - 1] + (eq ? 0 : 1);
      if (diag == d[i][j]) {
        rev.push_back(eq ? EditOp::kMatch : EditOp::kSub);
        if (!eq) ++out.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[i - 1][j] + 1 == d[i][j]) {
      rev.push_back(EditOp::kDel);
      ++out.deletions;
      --i;
      continue;
    }
    rev.push_back(EditOp::kIns);
    ++out.insertions;
    --j;
  }
  out.ops.assign(rev.rbegin(), rev.rend());
  return out;
}

std::vector<std::string> ReplayOps(const AlignmentResult& a,
                                   const std::vector<std::string>& ref,
                                   const std::vector<std::string>& hyp) {
  std::vector<std::string> out;
  size_t i = 0, j = 0;
  for (EditOp op : a.ops) {
    switch (op) {
      case EditOp::kMatch:
        out.push_back(ref[i]);
        ++i;
        ++j;
        break;
      case EditOp::kSub:
        out.push_back(hyp[j]);
        ++i;
        ++j;
        break;
      case EditOp::kDel:
        ++i;
        break;
      case EditOp::kIns:
        out.push_back(hyp[j]);
        ++j;
        break;
    }
  }
  return out;
}

}  // namespace slukit
