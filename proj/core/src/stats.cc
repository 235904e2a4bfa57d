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

#include "slukit/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slukit/error.h"

namespace slukit {

namespace {

void CheckPair(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw ValidationError("correlation requires equal-length vectors");
  if (x.size() < 3)
    throw ValidationError("correlation requires at least 3 samples");
  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(),
                       [&](double e) { return e == v.front(); });
  };
  if (constant(x) || constant(y))
    throw ValidationError("correlation undefined for a constant vector");
}

// Continued-fraction evaluation of the incomplete beta integral
// (modified Lentz's method).
double BetaContinuedFraction(double a, double b, double x) {
  const double kTiny = 1e-300;
  const double kEps = 1e-15;
  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double IncompleteBeta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = a * std::log(x) + b * std::log1p(-x) -
                    (std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double Pearson(const std::vector<double>& x, const std::vector<double>& y) {
  CheckPair(x, y);
  const size_t n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> AverageRanks(const std::vector<double>& v) {
  const size_t n = v.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    // Positions i..j (0-based) share the average of ranks i+1..j+1.
    double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  CheckPair(x, y);
  return Pearson(AverageRanks(x), AverageRanks(y));
}

double SpearmanShortcut(const std::vector<double>& x,
                        const std::vector<double>& y) {
  CheckPair(x, y);
  std::vector<double> rx = AverageRanks(x);
  std::vector<double> ry = AverageRanks(y);
  double sum_d2 = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double d = rx[i] - ry[i];
    sum_d2 += d * d;
  }
  double n = static_cast<double>(x.size());
  return 1.0 - 6.0 * sum_d2 / (n * (n * n - 1.0));
}

SignificanceResult PValue(double coef, size_t n) {
  if (n < 3) throw ValidationError("p-value requires n >= 3");
  SignificanceResult res;
  if (std::fabs(coef) >= 1.0) {
    res.t = std::numeric_limits<double>::infinity() * (coef < 0 ? -1.0 : 1.0);
    res.p = 0.0;
    res.degenerate = true;
    return res;
  }
  double nu = static_cast<double>(n - 2);
  res.t = coef * std::sqrt(nu / (1.0 - coef * coef));
  // Two-tailed Student-t tail probability via the incomplete beta identity
  // 2*P(T > |t|) = I_{nu/(nu+t^2)}(nu/2, 1/2).
  double x = nu / (nu + res.t * res.t);
  res.p = IncompleteBeta(nu / 2.0, 0.5, x);
  return res;
}

std::string Stars(double p) {
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

CorrelationReport Correlate(const std::vector<double>& x,
                            const std::vector<double>& y) {
  CorrelationReport rep;
  rep.n = x.size();
  rep.r = Pearson(x, y);
  rep.r_s = Spearman(x, y);
  SignificanceResult sr = PValue(rep.r, rep.n);
  SignificanceResult ss = PValue(rep.r_s, rep.n);
  rep.t_r = sr.t;
  rep.p_r = sr.p;
  rep.t_rs = ss.t;
  rep.p_rs = ss.p;
  rep.stars_r = Stars(rep.p_r);
  rep.stars_rs = Stars(rep.p_rs);
  return rep;
}

}  // namespace slukit
