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

#ifndef SLUKIT_STATS_H_
#define SLUKIT_STATS_H_

#include <cstddef>
#include <string>
#include <vector>

namespace slukit {

// Product-moment correlation coefficient. Requires |x| == |y| >= 3 and both
// vectors non-constant; throws ValidationError otherwise.
double Pearson(const std::vector<double>& x, const std::vector<double>& y);

// Rank correlation: Pearson over average ranks, valid under ties.
double Spearman(const std::vector<double>& x, const std::vector<double>& y);

// The 1 - 6*sum(d^2)/(n(n^2-1)) shortcut over rank differences. Only
// correct on tie-free data; kept as an independent verification path.
double SpearmanShortcut(const std::vector<double>& x,
                        const std::vector<double>& y);

// Average ranks (1-based, ties averaged).
std::vector<double> AverageRanks(const std::vector<double>& v);

struct SignificanceResult {
  double t = 0.0;
  double p = 1.0;
  // |coef| == 1: p is 0 by convention rather than via the t distribution.
  bool degenerate = false;
};

// Two-tailed significance of a correlation coefficient against the null
// coef == 0: t = coef * sqrt((n-2)/(1-coef^2)), p = 2*P(T > |t|) with n-2
// degrees of freedom. Requires n >= 3.
SignificanceResult PValue(double coef, size_t n);

// "**" for p < 0.01, "*" for p < 0.05, otherwise "".
std::string Stars(double p);

// Regularized incomplete beta function I_x(a, b); exposed because the t-tail
// computation uses it and tests probe it directly.
double IncompleteBeta(double a, double b, double x);

struct CorrelationReport {
  double r = 0.0;    // Pearson
  double r_s = 0.0;  // Spearman
  double t_r = 0.0, t_rs = 0.0;
  double p_r = 1.0, p_rs = 1.0;
  size_t n = 0;
  std::string stars_r, stars_rs;
};

// Runs both correlations plus significance over a pair of score vectors.
CorrelationReport Correlate(const std::vector<double>& x,
                            const std::vector<double>& y);

}  // namespace slukit

#endif  // SLUKIT_STATS_H_
