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
//
// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slukit/align.h"
#include "slukit/channel.h"
#include "slukit/codec.h"
#include "slukit/corpus.h"
#include "slukit/grammar.h"
#include "slukit/lm.h"
#include "slukit/metrics.h"
#include "slukit/perturb.h"
#include "slukit/stats.h"
#include "slukit/symbol_table.h"
#include "slukit/text.h"

using namespace slukit;

namespace {

const std::string kDataDir = SLUKIT_DATA_DIR;
const std::string kCli = SLUKIT_CLI_BIN;

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, const std::string& title, double time_budget_s)
      : number_(number), title_(title), budget_s_(time_budget_s) {
    start_ = std::chrono::steady_clock::now();
  }

  void Expect(bool ok, const std::string& what) {
    if (!ok) {
      problems_.push_back(what);
    }
  }

  void Finish() {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    if (budget_s_ > 0 && elapsed > budget_s_) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "runtime %.2fs exceeds budget %.0fs",
                    elapsed, budget_s_);
      problems_.push_back(buf);
    }
    bool pass = problems_.empty();
    if (!pass) ++g_failures;
    std::printf("%s  criterion %2d  [%6.2fs]  %s\n", pass ? "PASS" : "FAIL",
                number_, elapsed, title_.c_str());
    for (const std::string& p : problems_) {
      std::printf("      - %s\n", p.c_str());
    }
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string title_;
  double budget_s_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

void RunCriterion(int number, const std::string& title, double budget_s,
                  const std::function<void(Criterion&)>& body) {
  Criterion c(number, title, budget_s);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.Expect(false, std::string("exception: ") + e.what());
  }
  c.Finish();
}

const std::vector<Utterance>& DemoEnumeration() {
  static const std::vector<Utterance>* corpus = [] {
    Grammar g = Grammar::Load(kDataDir + "/demo.grammar");
    return new std::vector<Utterance>(g.Enumerate({}));
  }();
  return *corpus;
}

std::vector<std::string> Labels(const Utterance& u) {
  std::vector<std::string> out;
  for (const SlotSpan& s : u.slots) out.push_back(s.label);
  return out;
}

std::multiset<std::string> LabelBag(const Utterance& u) {
  std::multiset<std::string> bag;
  for (const SlotSpan& s : u.slots) bag.insert(s.label);
  return bag;
}

// Criterion 3 oracle: memoized recursive minimum-edit definition.
int BruteDistance(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int>> memo(a.size() + 1,
                                     std::vector<int>(b.size() + 1, -1));
  std::function<int(size_t, size_t)> rec = [&](size_t i, size_t j) -> int {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    int& slot = memo[i][j];
    if (slot >= 0) return slot;
    int sub = rec(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
    int del = rec(i - 1, j) + 1;
    int ins = rec(i, j - 1) + 1;
    return slot = std::min({sub, del, ins});
  };
  return rec(a.size(), b.size());
}

// Criterion 4 reference implementations (independent numeric routes).
double RefPearson(const std::vector<double>& x, const std::vector<double>& y) {
  long double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  long double n = static_cast<long double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
  }
  return static_cast<double>((n * sxy - sx * sy) /
                             sqrtl((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

std::vector<double> RefRanks(const std::vector<double>& v) {
  std::vector<double> ranks(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    size_t smaller = 0, equal = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++smaller;
      if (v[j] == v[i]) ++equal;
    }
    ranks[i] = 1.0 + smaller + (equal - 1) / 2.0;
  }
  return ranks;
}

double Simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return Simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         Simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double RefTwoTailedP(double t, double nu) {
  double log_c = std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0) -
                 0.5 * std::log(nu * M_PI);
  double c = std::exp(log_c);
  double theta0 = std::atan(std::fabs(t) / std::sqrt(nu));
  auto integrand = [nu](double theta) {
    return std::pow(std::cos(theta), nu - 1.0);
  };
  double fa = integrand(theta0);
  double fb = integrand(M_PI_2);
  double fm = integrand(0.5 * (theta0 + M_PI_2));
  double whole = (M_PI_2 - theta0) / 6.0 * (fa + 4.0 * fm + fb);
  double tail = c * std::sqrt(nu) *
                Simpson(integrand, theta0, M_PI_2, fa, fm, fb, whole, 1e-14, 48);
  return 2.0 * tail;
}

int RunCli(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string FileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path WorkDir() {
  auto dir = std::filesystem::temp_directory_path() / "slukit_acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

int main() {
  const SymbolTable table = DefaultSymbolTable();

  // 1. Deleting a concept symbol pair halves the concept score.
  RunCriterion(1, "deleted device symbol pair scores CER 50.0", 1.0,
               [&](Criterion& c) {
    EnrichedTranscript ref{"@ vocadom ^allume^ }la lumière} @"};
    EnrichedTranscript hyp{"@ vocadom ^allume^ la lumière @"};
    CerResult r = Cer(ExtractSymbolSequence(ref, table),
                      ExtractSymbolSequence(hyp, table));
    c.Expect(r.Cer() == 50.0,
             "expected CER 50.0, got " + std::to_string(r.Cer()));
    c.Expect(r.deleted == 1 && r.matched == 1 && r.inserted == 0 &&
                 r.substituted == 0,
             "expected exactly one deleted concept");
  });

  // 2. Full-enumeration round-trip and self-scoring.
  RunCriterion(2, "demo enumeration round-trips and self-scores perfectly",
               60.0, [&](Criterion& c) {
    const std::vector<Utterance>& corpus = DemoEnumeration();
    c.Expect(corpus.size() >= 50000,
             "expected >= 50000 distinct sentences, got " +
                 std::to_string(corpus.size()));
    std::set<std::string> texts;
    size_t mismatches = 0;
    for (const Utterance& u : corpus) {
      texts.insert(u.Text());
      DecodeResult d = Decode(Encode(u, table), table);
      d.utterance.id = u.id;
      d.utterance.meta = u.meta;
      if (!(d.utterance == u) || !d.diagnostics.clean()) ++mismatches;
    }
    c.Expect(mismatches == 0, std::to_string(mismatches) +
                                  " utterances failed the round trip");
    c.Expect(texts.size() == corpus.size(), "duplicate surface forms");

    EvalReport report = CorpusReport(corpus, corpus, table, {});
    for (const EvalRow& row : report.rows) {
      c.Expect(row.mean_wer == 0.0 && row.mean_cer == 0.0 &&
                   row.micro_f1 == 100.0,
               "self-scoring row '" + row.group + "' is not perfect");
    }
  });

  // 3. Alignment cost against exhaustive brute force.
  RunCriterion(3, "10000 random alignments match brute-force edit distance",
               30.0, [&](Criterion& c) {
    std::mt19937_64 rng(20240601);
    size_t mismatches = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<int> a(rng() % 9), b(rng() % 9);
      std::vector<std::string> as, bs;
      for (int& v : a) {
        v = static_cast<int>(rng() % 3);
        as.push_back(std::string(1, static_cast<char>('a' + v)));
      }
      for (int& v : b) {
        v = static_cast<int>(rng() % 3);
        bs.push_back(std::string(1, static_cast<char>('a' + v)));
      }
      if (Align(as, bs).Cost() != BruteDistance(a, b)) ++mismatches;
    }
    c.Expect(mismatches == 0,
             std::to_string(mismatches) + " cost mismatches");
  });

  // 4. Correlation statistics against independent references.
  RunCriterion(4, "statistics agree with reference computations to 1e-9", 0,
               [&](Criterion& c) {
    std::mt19937_64 rng(424242);
    auto uniform = [&] { return (rng() >> 11) * 0x1.0p-53; };
    for (int dataset = 0; dataset < 100; ++dataset) {
      size_t n = 5 + rng() % 196;
      bool with_ties = dataset % 2 == 0;
      std::vector<double> x, y;
      for (size_t i = 0; i < n; ++i) {
        if (with_ties) {
          x.push_back(static_cast<double>(rng() % 12));
          y.push_back(static_cast<double>(rng() % 12) + 0.5 * (rng() % 3));
        } else {
          x.push_back(uniform());
          y.push_back(uniform() + 0.3 * x.back());
        }
      }
      auto constant = [](const std::vector<double>& v) {
        for (double e : v)
          if (e != v.front()) return false;
        return true;
      };
      if (constant(x) || constant(y)) continue;

      double r = Pearson(x, y);
      double r_ref = RefPearson(x, y);
      if (std::fabs(r - r_ref) > 1e-9)
        c.Expect(false, "pearson off by " + std::to_string(r - r_ref));

      double rs = Spearman(x, y);
      double rs_ref = RefPearson(RefRanks(x), RefRanks(y));
      if (std::fabs(rs - rs_ref) > 1e-9)
        c.Expect(false, "spearman off by " + std::to_string(rs - rs_ref));

      for (double coef : {r, rs}) {
        if (std::fabs(coef) >= 1.0) continue;
        SignificanceResult sig = PValue(coef, n);
        double t_ref =
            coef * std::sqrt((n - 2) / (1.0 - coef * coef));
        if (std::fabs(sig.t - t_ref) > 1e-9)
          c.Expect(false, "t statistic off");
        double p_ref = RefTwoTailedP(sig.t, static_cast<double>(n - 2));
        if (std::fabs(sig.p - p_ref) > 1e-9)
          c.Expect(false, "p value off by " + std::to_string(sig.p - p_ref));
      }

      if (!with_ties) {
        double shortcut = SpearmanShortcut(x, y);
        if (std::fabs(shortcut - rs) > 1e-9)
          c.Expect(false, "shortcut formula disagrees on tie-free data");
      }
    }
  });

  // 5. The correlation-study methodology on simulated hypotheses.
  RunCriterion(5, "mixed noise couples WER and CER; symbol noise decouples",
               0, [&](Criterion& c) {
    Grammar g = Grammar::Load(kDataDir + "/demo.grammar");
    std::vector<Utterance> corpus = g.Sample(1200, 20260810);

    NoiseProfile mixed = ReadNoiseProfile(kDataDir + "/noise_mixed.json");
    std::vector<StudyRow> rows = WerCerStudy(corpus, {mixed}, table);
    c.Expect(rows.size() == 1, "expected one study row");
    const CorrelationReport& rep = rows[0].correlation;
    c.Expect(rep.r > 0.0, "expected positive Pearson correlation");
    c.Expect(rep.p_r < 0.01, "expected p < 0.01");
    c.Expect(rep.stars_r == "**", "expected the ** marker");

    NoiseProfile symbol_only =
        ReadNoiseProfile(kDataDir + "/noise_symbol_only.json");
    std::vector<EnrichedRecord> encoded;
    for (const Utterance& u : corpus)
      encoded.push_back({u.id, Encode(u, table).text, u.meta});
    std::vector<EnrichedRecord> hyp = Corrupt(encoded, symbol_only, table);
    double wer_sum = 0.0, cer_sum = 0.0;
    for (size_t i = 0; i < corpus.size(); ++i) {
      DecodeResult d = Decode(EnrichedTranscript{hyp[i].text}, table);
      wer_sum += Align(corpus[i].tokens, d.utterance.tokens).Wer();
      cer_sum += Cer(Labels(corpus[i]),
                     ExtractSymbolSequence(EnrichedTranscript{hyp[i].text},
                                           table))
                     .Cer();
    }
    c.Expect(wer_sum == 0.0, "symbol-only noise must leave words intact");
    c.Expect(cer_sum / corpus.size() == 100.0,
             "symbol-only noise must delete every concept");
  });

  // 6. Cumulative OOV schedule over the whole demo corpus.
  RunCriterion(6, "OOV steps 1-4 strictly increase the substituted share", 0,
               [&](Criterion& c) {
    const std::vector<Utterance>& corpus = DemoEnumeration();
    std::set<std::string> vocab;
    for (const Utterance& u : corpus)
      vocab.insert(u.tokens.begin(), u.tokens.end());
    std::string report = SubstitutionStats::TsvHeader() + "\n";
    double prev = -1.0;
    for (int step = 1; step <= 4; ++step) {
      SubstitutionPlan plan = ReadSubstitutionPlan(
          kDataDir + "/oov_step" + std::to_string(step) + ".json");
      auto [perturbed, stats] = ApplyOov(corpus, plan, vocab);
      report += stats.TsvRow() + "\n";
      c.Expect(stats.pct_tokens > prev,
               "token share not strictly increasing at step " +
                   std::to_string(step));
      prev = stats.pct_tokens;
      c.Expect(stats.word_types > 0, "no substitutions at step " +
                                         std::to_string(step));
    }
    std::printf("%s", report.c_str());
  });

  // 7. Syntactic variation: exact worked example, labels invariant.
  RunCriterion(7, "syntax rewrite matches the worked example; labels stable",
               0, [&](Criterion& c) {
    DecodeResult d = Decode(
        EnrichedTranscript{"@ vocadom euh ^allume^ }la bouilloire} @"}, table);
    d.utterance.id = "ex";
    SyntaxPlan plan2 = ReadSyntaxPlan(kDataDir + "/syntax_step2.json");
    std::vector<Utterance> out = ApplySyntax({d.utterance}, plan2);
    std::string got = Encode(out[0], table).text;
    c.Expect(got == "@ vocadom euh pourrais-tu ^allumer^ la la }bouilloire} @",
             "got '" + got + "'");

    const std::vector<Utterance>& corpus = DemoEnumeration();
    std::set<std::string> vocab;
    for (const Utterance& u : corpus)
      vocab.insert(u.tokens.begin(), u.tokens.end());
    SubstitutionPlan oov4 =
        ReadSubstitutionPlan(kDataDir + "/oov_step4.json");
    auto [oov_out, stats] = ApplyOov(corpus, oov4, vocab);
    std::vector<Utterance> syn_out = ApplySyntax(corpus, plan2);
    size_t label_breaks = 0, roundtrip_breaks = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
      if (LabelBag(oov_out[i]) != LabelBag(corpus[i]) ||
          oov_out[i].intent != corpus[i].intent)
        ++label_breaks;
      if (LabelBag(syn_out[i]) != LabelBag(corpus[i]) ||
          syn_out[i].intent != corpus[i].intent)
        ++label_breaks;
      DecodeResult rt = Decode(Encode(syn_out[i], table), table);
      rt.utterance.id = syn_out[i].id;
      rt.utterance.meta = syn_out[i].meta;
      if (!(rt.utterance == syn_out[i])) ++roundtrip_breaks;
    }
    c.Expect(label_breaks == 0, std::to_string(label_breaks) +
                                    " utterances changed their label bag");
    c.Expect(roundtrip_breaks == 0,
             std::to_string(roundtrip_breaks) +
                 " perturbed utterances failed the codec round trip");
  });

  // 8. Perplexity sanity.
  RunCriterion(8, "uniform unigram scores V; trigram toy matches by hand", 0,
               [&](Criterion& c) {
    std::vector<std::vector<std::string>> uniform_corpus(1);
    for (int i = 0; i < 20; ++i)
      uniform_corpus[0].push_back("w" + std::to_string(i));
    NGramModel unigram = NGramModel::Train(uniform_corpus, 1, 1e-9);
    double ppl = unigram.Perplexity(uniform_corpus);
    c.Expect(std::fabs(ppl - 20.0) <= 1e-6,
             "uniform unigram perplexity " + std::to_string(ppl));

    // Trigram toy on two sentences: "a b" and "a c" with k = 1.
    std::vector<std::vector<std::string>> toy{{"a", "b"}, {"a", "c"}};
    NGramModel trigram = NGramModel::Train(toy, 3, 1.0);
    // Successor space: {a, b, c, <unk>, </s>} of size 5.
    // P(a | <s> <s>)  = (2 + 1) / (2 + 5)
    // P(b | <s> a)    = (1 + 1) / (2 + 5)
    // P(</s> | a b)   = (1 + 1) / (1 + 5)
    double p1 = 3.0 / 7, p2 = 2.0 / 7, p3 = 2.0 / 6;
    double expected =
        std::exp(-(std::log(p1) + std::log(p2) + std::log(p3)) / 3.0);
    double got = trigram.Perplexity({{"a", "b"}});
    c.Expect(std::fabs(got - expected) <= 1e-6,
             "trigram toy: got " + std::to_string(got) + ", expected " +
                 std::to_string(expected));
  });

  // 9. Determinism of the command-line pipelines.
  RunCriterion(9, "generate, corrupt and perturb are byte-reproducible", 0,
               [&](Criterion& c) {
    namespace fs = std::filesystem;
    fs::path dir = WorkDir();
    std::string symbols = " --symbols " + kDataDir + "/symbols.json --quiet";

    auto repeat = [&](const std::string& args, const fs::path& a,
                      const fs::path& b, const std::string& what) {
      c.Expect(RunCli(args + " --out " + a.string()) == 0,
               what + " run 1 failed");
      c.Expect(RunCli(args + " --out " + b.string()) == 0,
               what + " run 2 failed");
      c.Expect(FileBytes(a) == FileBytes(b), what + " output differs");
    };

    std::string gen = "generate --grammar " + kDataDir +
                      "/demo.grammar --sample 300 --seed 404 --quiet";
    repeat(gen, dir / "g1.jsonl", dir / "g2.jsonl", "generate");

    std::string corrupt = "corrupt --in " + (dir / "g1.jsonl").string() +
                          " --profile " + kDataDir + "/noise_mixed.json" +
                          symbols;
    repeat(corrupt, dir / "c1.jsonl", dir / "c2.jsonl", "corrupt");

    std::string perturb = "perturb --in " + (dir / "g1.jsonl").string() +
                          " --mode oov --plan " + kDataDir +
                          "/oov_step2.json --quiet --stats /dev/null";
    repeat(perturb, dir / "p1.jsonl", dir / "p2.jsonl", "perturb");
  });

  // 10. Published absolute results are out of scope; the report shapes are
  // what the toolkit reproduces.
  RunCriterion(10, "report schemas are pinned", 0,
               [&](Criterion& c) {
    std::vector<Utterance> corpus{DemoEnumeration()[0]};
    EvalReport report = CorpusReport(corpus, corpus, table, {});
    c.Expect(report.ToTsv().rfind("Model\tGroup\tWER\tCER\tF1\tN\n", 0) == 0,
             "score TSV header changed");

    std::vector<double> x{1, 2, 3, 4, 5, 6}, y{2, 1, 4, 3, 6, 5};
    CorrelationReport rep = Correlate(x, y);
    c.Expect(rep.n == 6 && !std::isnan(rep.r) && !std::isnan(rep.r_s),
             "correlation block incomplete");
    c.Expect(Stars(0.001) == "**" && Stars(0.02) == "*",
             "significance markers changed");
    std::printf(
        "      note: absolute results from large trained models on held-out real\n"
        "      speech are out of scope at desk scale; this suite checks the\n"
        "      report shapes and the methodology instead.\n");
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
