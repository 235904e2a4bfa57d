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
// slukit: grammar-based corpus generation, enriched-transcript codec,
// controlled perturbation and scoring for slot-filling voice commands.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slukit/channel.h"
#include "slukit/codec.h"
#include "slukit/corpus.h"
#include "slukit/curriculum.h"
#include "slukit/error.h"
#include "slukit/grammar.h"
#include "slukit/lm.h"
#include "slukit/metrics.h"
#include "slukit/perturb.h"
#include "slukit/stats.h"
#include "slukit/symbol_table.h"
#include "slukit/text.h"
#include "slukit/version.h"

namespace {

using nlohmann::json;
using namespace slukit;

bool g_quiet = false;
std::vector<std::string> g_argv;

void Note(const std::string& msg) {
  if (!g_quiet) std::cerr << "slukit: " << msg << "\n";
}

// Every run that writes files leaves a manifest beside its first output so
// the exact invocation can be replayed.
void WriteManifest(const std::filesystem::path& primary_output, uint64_t seed,
                   const std::vector<std::string>& outputs) {
  std::string joined;
  for (const std::string& a : g_argv) joined += a + '\x1f';
  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx", Fnv1a64(joined));
  json manifest{{"tool", "slukit"},
                {"version", kVersion},
                {"argv", g_argv},
                {"config_hash", hash},
                {"seed", seed},
                {"outputs", outputs}};
  std::filesystem::path path = primary_output;
  path += ".manifest.json";
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest: " + path.string());
  out << manifest.dump(2) << '\n';
}

SymbolTable LoadSymbols(const std::string& path) {
  if (path.empty()) return DefaultSymbolTable();
  return ReadSymbolTable(path);
}

// Accepts a structured corpus or an enriched one (decoded on the fly).
std::vector<Utterance> ReadAnyCorpus(const std::string& path,
                                     const SymbolTable& table,
                                     size_t* dirty_count = nullptr) {
  if (!LooksEnriched(path)) return ReadCorpus(path);
  std::vector<Utterance> corpus;
  size_t dirty = 0;
  for (const EnrichedRecord& r : ReadEnrichedCorpus(path)) {
    DecodeResult d = Decode(EnrichedTranscript{r.text}, table);
    d.utterance.id = r.id;
    d.utterance.meta = r.meta;
    if (!d.diagnostics.clean()) ++dirty;
    corpus.push_back(std::move(d.utterance));
  }
  if (dirty_count) *dirty_count = dirty;
  return corpus;
}

std::string FormatCorrelationBlock(const std::string& title,
                                   const CorrelationReport& rep) {
  char buf[256];
  std::string out = title + "  (n=" + std::to_string(rep.n) + ")\n";
  std::snprintf(buf, sizeof(buf), "Pearson (r)\t%.2f%s\n", rep.r,
                rep.stars_r.c_str());
  out += buf;
  std::snprintf(buf, sizeof(buf), "Spearman (r_s)\t%.2f%s\n", rep.r_s,
                rep.stars_rs.c_str());
  out += buf;
  std::snprintf(buf, sizeof(buf), "t_r=%.4f p_r=%.3g\tt_rs=%.4f p_rs=%.3g\n",
                rep.t_r, rep.p_r, rep.t_rs, rep.p_rs);
  out += buf;
  out += "* p<0.05 ; ** p<0.01\n";
  return out;
}

void EmitText(const std::string& out_path, const std::string& text,
              uint64_t seed) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << text;
  out.close();
  WriteManifest(out_path, seed, {out_path});
}

// ----------------------------------------------------------- generate

struct GenerateArgs {
  std::string grammar_path, out_path;
  size_t limit = 0;
  size_t sample_n = 0;
  uint64_t seed = 0;
  int depth = 20;
};

void RunGenerate(const GenerateArgs& args) {
  Grammar grammar = Grammar::Load(args.grammar_path);
  Note("grammar: " + std::to_string(grammar.RuleCount()) + " rules, " +
       std::to_string(grammar.ReachableNonterminals().size()) +
       " reachable nonterminals, " +
       std::to_string(grammar.IntentsUsed().size()) + " intents, " +
       std::to_string(grammar.ConceptsUsed().size()) + " concepts");

  std::vector<Utterance> corpus;
  if (args.sample_n > 0) {
    corpus = grammar.Sample(args.sample_n, args.seed, args.depth);
    Note("sampled " + std::to_string(corpus.size()) + " utterances (seed " +
         std::to_string(args.seed) + ")");
  } else {
    GenerationOptions options;
    options.limit = args.limit == 0 ? SIZE_MAX : args.limit;
    options.max_depth = args.depth;
    GenerationStats stats;
    corpus = grammar.Enumerate(options, &stats);
    Note("enumerated " + std::to_string(stats.emitted) + " utterances (" +
         std::to_string(stats.duplicates_skipped) + " duplicates, " +
         std::to_string(stats.pruned_branches) + " depth-pruned branches)");
  }
  WriteCorpus(args.out_path, corpus);
  WriteManifest(args.out_path, args.seed, {args.out_path});
}

// ------------------------------------------------- encode / decode / mask

struct CodecArgs {
  std::string in_path, out_path, symbols_path;
};

void RunEncode(const CodecArgs& args) {
  SymbolTable table = LoadSymbols(args.symbols_path);
  std::vector<EnrichedRecord> out;
  for (const Utterance& u : ReadCorpus(args.in_path)) {
    out.push_back({u.id, Encode(u, table).text, u.meta});
  }
  WriteEnrichedCorpus(args.out_path, out);
  WriteManifest(args.out_path, 0, {args.out_path});
  Note("encoded " + std::to_string(out.size()) + " utterances");
}

void RunDecode(const CodecArgs& args) {
  SymbolTable table = LoadSymbols(args.symbols_path);
  std::vector<Utterance> out;
  size_t dirty = 0;
  for (const EnrichedRecord& r : ReadEnrichedCorpus(args.in_path)) {
    DecodeResult d = Decode(EnrichedTranscript{r.text}, table);
    d.utterance.id = r.id;
    d.utterance.meta = r.meta;
    if (!d.diagnostics.clean()) ++dirty;
    out.push_back(std::move(d.utterance));
  }
  WriteCorpus(args.out_path, out);
  WriteManifest(args.out_path, 0, {args.out_path});
  Note("decoded " + std::to_string(out.size()) + " utterances (" +
       std::to_string(dirty) + " with repairs)");
}

void RunMask(const CodecArgs& args) {
  SymbolTable table = LoadSymbols(args.symbols_path);
  std::vector<EnrichedRecord> out;
  for (const EnrichedRecord& r : ReadEnrichedCorpus(args.in_path)) {
    out.push_back(
        {r.id, MaskOutsideSlots(EnrichedTranscript{r.text}, table).text,
         r.meta});
  }
  WriteEnrichedCorpus(args.out_path, out);
  WriteManifest(args.out_path, 0, {args.out_path});
  Note("masked " + std::to_string(out.size()) + " utterances");
}

// --------------------------------------------------------------- score

struct ScoreArgs {
  std::string ref_path, hyp_path, symbols_path, out_path, per_utterance_path;
  std::string group_by, model = "slukit", format = "tsv";
  bool with_values = false;
  bool char_level = false;
};

void RunScore(const ScoreArgs& args) {
  SymbolTable table = LoadSymbols(args.symbols_path);
  std::vector<Utterance> ref = ReadAnyCorpus(args.ref_path, table);
  size_t dirty = 0;
  std::vector<Utterance> hyp = ReadAnyCorpus(args.hyp_path, table, &dirty);
  if (dirty) Note(std::to_string(dirty) + " hypothesis lines needed repair");

  ScoreOptions options;
  options.group_by = args.group_by.rfind("meta.", 0) == 0
                         ? args.group_by.substr(5)
                         : args.group_by;
  options.with_values = args.with_values;
  options.char_level = args.char_level;
  options.model_name = args.model;
  EvalReport report = CorpusReport(ref, hyp, table, options);

  if (!args.per_utterance_path.empty()) {
    std::ofstream per(args.per_utterance_path);
    if (!per)
      throw IoError("cannot open output file: " + args.per_utterance_path);
    for (const UtteranceScore& s : report.per_utterance) {
      per << json{{"id", s.id},
                  {"wer", s.wer},
                  {"wer_valid", s.wer_valid},
                  {"cer", s.cer},
                  {"cer_valid", s.cer_valid},
                  {"ref_words", s.ref_words},
                  {"ref_concepts", s.ref_concepts},
                  {"intent_match", s.intent_match},
                  {"meta", s.meta}}
                  .dump()
          << '\n';
    }
  }

  std::string text;
  if (args.format == "jsonl") {
    for (const EvalRow& row : report.rows) {
      text += json{{"model", report.model},
                   {"group", row.group},
                   {"wer", row.mean_wer},
                   {"cer", row.mean_cer},
                   {"f1", row.micro_f1},
                   {"macro_f1", row.macro_f1},
                   {"n", row.count}}
                  .dump() +
              "\n";
    }
  } else {
    text = report.ToTsv();
  }
  EmitText(args.out_path, text, 0);
}

// ----------------------------------------------------------- correlate

struct CorrelateArgs {
  std::string scores_path, x_field = "wer", y_field = "cer";
  std::string ref_path, sweep_path, symbols_path, out_path;
};

void RunCorrelate(const CorrelateArgs& args) {
  std::string text;
  if (!args.sweep_path.empty()) {
    SymbolTable table = LoadSymbols(args.symbols_path);
    std::vector<Utterance> ref = ReadAnyCorpus(args.ref_path, table);
    std::vector<NoiseProfile> sweep = ReadNoiseProfileSweep(args.sweep_path);
    for (const StudyRow& row : WerCerStudy(ref, sweep, table)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "profile=%s mean_wer=%.2f mean_cer=%.2f",
                    row.profile_name.c_str(), row.mean_wer, row.mean_cer);
      text += FormatCorrelationBlock(buf, row.correlation) + "\n";
    }
  } else {
    if (args.scores_path.empty())
      throw ValidationError("correlate needs --scores or --ref with --sweep");
    std::ifstream in(args.scores_path);
    if (!in) throw IoError("cannot open scores file: " + args.scores_path);
    std::vector<double> x, y;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded())
        throw ParseError(args.scores_path + ":" + std::to_string(lineno) +
                         ": invalid JSON");
      if (!j.contains(args.x_field) || !j.contains(args.y_field))
        throw ValidationError(args.scores_path + ":" + std::to_string(lineno) +
                              ": missing field '" + args.x_field + "' or '" +
                              args.y_field + "'");
      // Sentinel rows (empty reference) are excluded from correlation.
      if (j.value("wer_valid", true) == false ||
          j.value("cer_valid", true) == false)
        continue;
      x.push_back(j.at(args.x_field).get<double>());
      y.push_back(j.at(args.y_field).get<double>());
    }
    CorrelationReport rep = Correlate(x, y);
    text = FormatCorrelationBlock("x=" + args.x_field + " y=" + args.y_field,
                                  rep);
  }
  EmitText(args.out_path, text, 0);
}

// ------------------------------------------------------------- perturb

struct PerturbArgs {
  std::string in_path, out_path, plan_path, mode = "oov";
  std::string train_vocab_path, stats_path;
  std::string out_long, out_short;
  size_t threshold = 7;
};

void RunPerturb(const PerturbArgs& args) {
  std::vector<Utterance> corpus = ReadCorpus(args.in_path);
  if (args.mode == "oov") {
    SubstitutionPlan plan = ReadSubstitutionPlan(args.plan_path);
    std::set<std::string> vocab;
    if (args.train_vocab_path.empty()) {
      for (const Utterance& u : corpus)
        vocab.insert(u.tokens.begin(), u.tokens.end());
    } else {
      std::ifstream in(args.train_vocab_path);
      if (!in)
        throw IoError("cannot open vocabulary file: " + args.train_vocab_path);
      std::string word;
      while (in >> word) vocab.insert(word);
    }
    auto [out, stats] = ApplyOov(corpus, plan, vocab);
    WriteCorpus(args.out_path, out);
    WriteManifest(args.out_path, 0, {args.out_path});
    std::string report =
        SubstitutionStats::TsvHeader() + "\n" + stats.TsvRow() + "\n";
    if (args.stats_path.empty()) {
      std::cerr << report;
    } else {
      std::ofstream sout(args.stats_path);
      if (!sout) throw IoError("cannot open stats file: " + args.stats_path);
      sout << report;
    }
  } else if (args.mode == "syntax") {
    SyntaxPlan plan = ReadSyntaxPlan(args.plan_path);
    WriteCorpus(args.out_path, ApplySyntax(corpus, plan));
    WriteManifest(args.out_path, 0, {args.out_path});
  } else if (args.mode == "split") {
    if (args.out_long.empty() || args.out_short.empty())
      throw ValidationError("split mode needs --out-long and --out-short");
    LengthSplit split = SplitByLength(corpus, args.threshold);
    WriteCorpus(args.out_long, split.longer);
    WriteCorpus(args.out_short, split.shorter);
    WriteManifest(args.out_long, 0, {args.out_long, args.out_short});
    Note("split: " + std::to_string(split.longer.size()) + " long / " +
         std::to_string(split.shorter.size()) + " short (threshold " +
         std::to_string(args.threshold) + ")");
  } else {
    throw ValidationError("unknown perturb mode '" + args.mode + "'");
  }
}

// ------------------------------------------------------------- corrupt

struct CorruptArgs {
  std::string in_path, out_path, profile_path, symbols_path;
  int64_t seed_override = -1;
};

void RunCorrupt(const CorruptArgs& args) {
  SymbolTable table = LoadSymbols(args.symbols_path);
  NoiseProfile profile = ReadNoiseProfile(args.profile_path);
  if (args.seed_override >= 0)
    profile.seed = static_cast<uint64_t>(args.seed_override);

  std::vector<EnrichedRecord> ref;
  if (LooksEnriched(args.in_path)) {
    ref = ReadEnrichedCorpus(args.in_path);
  } else {
    for (const Utterance& u : ReadCorpus(args.in_path))
      ref.push_back({u.id, Encode(u, table).text, u.meta});
  }
  std::vector<EnrichedRecord> hyp = Corrupt(ref, profile, table);
  WriteEnrichedCorpus(args.out_path, hyp);
  WriteManifest(args.out_path, profile.seed, {args.out_path});
  Note("corrupted " + std::to_string(hyp.size()) + " utterances with profile '" +
       profile.name + "'");
}

// ------------------------------------------------------------------ lm

struct LmArgs {
  std::string train_path, test_path;
  int order = 3;
  double k = 1.0;
  std::string out_path;
};

void RunLmStats(const LmArgs& args) {
  std::vector<Utterance> train = ReadCorpus(args.train_path);
  std::vector<Utterance> test = ReadCorpus(args.test_path);
  std::vector<std::vector<std::string>> train_tokens, test_tokens;
  for (const Utterance& u : train) train_tokens.push_back(u.tokens);
  for (const Utterance& u : test) test_tokens.push_back(u.tokens);

  NGramModel model = NGramModel::Train(train_tokens, args.order, args.k);
  double ppl = model.Perplexity(test_tokens);
  OovCounts oov = OovCount(model.vocab(), test_tokens);

  char buf[256];
  std::string text = "corpus\tutterances\twords\tperplexity\toov_types\toov_tokens\n";
  std::snprintf(buf, sizeof(buf), "%s\t%zu\t%zu\t%.2f\t%zu\t%zu\n",
                std::filesystem::path(args.train_path).filename().c_str(),
                train.size(), model.vocab().size(), ppl, oov.types,
                oov.tokens);
  text += buf;
  EmitText(args.out_path, text, 0);
}

// ---------------------------------------------------------- curriculum

struct CurriculumArgs {
  std::string in_path, plan_path, symbols_path, out_dir;
};

void RunCurriculum(const CurriculumArgs& args) {
  SymbolTable table = LoadSymbols(args.symbols_path);
  StagePlan plan = args.plan_path.empty() ? StagePlan{}
                                          : ReadStagePlan(args.plan_path);
  std::vector<Utterance> corpus = ReadCorpus(args.in_path);
  StageSet stages = StageEmit(corpus, plan, table);
  WriteStageSet(args.out_dir, stages);
  for (const StageOutput* s :
       {&stages.data2, &stages.data3, &stages.data4, &stages.data4_star}) {
    if (s->records.empty()) Note("warning: stage " + s->name + " is empty");
  }
  WriteManifest(std::filesystem::path(args.out_dir) / "stages", 0,
                {args.out_dir});
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", stages.threshold_used);
  Note("stages written to " + args.out_dir + " (threshold " + buf +
       ", duplication x" + std::to_string(stages.duplication_factor) + ")");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_argv.emplace_back(argv[i]);

  CLI::App app{"slot-filling corpus generation and evaluation toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_flag("--quiet", g_quiet, "suppress progress notes on stderr");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate",
                                   "derive an annotated corpus from a grammar");
  c_gen->add_option("--grammar", gen.grammar_path, "grammar DSL file")
      ->required();
  c_gen->add_option("--limit", gen.limit, "max utterances (0 = exhaustive)");
  c_gen->add_option("--sample", gen.sample_n,
                    "draw N weighted samples instead of enumerating");
  c_gen->add_option("--seed", gen.seed, "sampling seed");
  c_gen->add_option("--depth", gen.depth, "derivation depth bound");
  c_gen->add_option("--out", gen.out_path, "output corpus (JSONL)")
      ->required();
  c_gen->callback([&] { RunGenerate(gen); });

  CodecArgs enc, dec, msk;
  auto* c_enc = app.add_subcommand("encode",
                                   "render corpus as enriched transcripts");
  c_enc->add_option("--in", enc.in_path, "corpus JSONL")->required();
  c_enc->add_option("--symbols", enc.symbols_path, "symbol table JSON");
  c_enc->add_option("--out", enc.out_path, "enriched JSONL")->required();
  c_enc->callback([&] { RunEncode(enc); });

  auto* c_dec = app.add_subcommand("decode",
                                   "parse enriched transcripts into a corpus");
  c_dec->add_option("--in", dec.in_path, "enriched JSONL")->required();
  c_dec->add_option("--symbols", dec.symbols_path, "symbol table JSON");
  c_dec->add_option("--out", dec.out_path, "corpus JSONL")->required();
  c_dec->callback([&] { RunDecode(dec); });

  auto* c_msk = app.add_subcommand("mask",
                                   "mask words outside concept regions");
  c_msk->add_option("--in", msk.in_path, "enriched JSONL")->required();
  c_msk->add_option("--symbols", msk.symbols_path, "symbol table JSON");
  c_msk->add_option("--out", msk.out_path, "masked enriched JSONL")
      ->required();
  c_msk->callback([&] { RunMask(msk); });

  ScoreArgs score;
  auto* c_score = app.add_subcommand("score",
                                     "WER/CER/intent-F1 corpus evaluation");
  c_score->add_option("--ref", score.ref_path, "reference corpus")->required();
  c_score->add_option("--hyp", score.hyp_path,
                      "hypothesis corpus (structured or enriched)")
      ->required();
  c_score->add_option("--symbols", score.symbols_path, "symbol table JSON");
  c_score->add_option("--group-by", score.group_by,
                      "meta key for grouped rows, e.g. meta.noise");
  c_score->add_option("--model", score.model, "model column label");
  c_score->add_option("--format", score.format, "tsv or jsonl")
      ->check(CLI::IsMember({"tsv", "jsonl"}));
  c_score->add_option("--out", score.out_path, "report file (default stdout)");
  c_score->add_option("--per-utterance", score.per_utterance_path,
                      "write per-utterance scores JSONL");
  c_score->add_flag("--with-values", score.with_values,
                    "CER matches require equal slot values");
  c_score->add_flag("--char", score.char_level,
                    "character-level WER over enriched transcripts");
  c_score->callback([&] { RunScore(score); });

  CorrelateArgs corr;
  auto* c_corr = app.add_subcommand(
      "correlate", "correlation block over per-utterance scores");
  c_corr->add_option("--scores", corr.scores_path,
                     "per-utterance scores JSONL (from score --per-utterance)");
  c_corr->add_option("--x", corr.x_field, "x field name (default wer)");
  c_corr->add_option("--y", corr.y_field, "y field name (default cer)");
  c_corr->add_option("--ref", corr.ref_path,
                     "reference corpus for a noise sweep study");
  c_corr->add_option("--sweep", corr.sweep_path,
                     "noise profile sweep JSON (with --ref)");
  c_corr->add_option("--symbols", corr.symbols_path, "symbol table JSON");
  c_corr->add_option("--out", corr.out_path, "output file (default stdout)");
  c_corr->callback([&] { RunCorrelate(corr); });

  PerturbArgs pert;
  auto* c_pert = app.add_subcommand(
      "perturb", "OOV substitution, syntactic variation, length split");
  c_pert->add_option("--in", pert.in_path, "corpus JSONL")->required();
  c_pert->add_option("--mode", pert.mode, "oov | syntax | split")
      ->check(CLI::IsMember({"oov", "syntax", "split"}));
  c_pert->add_option("--plan", pert.plan_path, "plan JSON (oov/syntax)");
  c_pert->add_option("--train-vocab", pert.train_vocab_path,
                     "vocabulary file, one word per line (default: corpus)");
  c_pert->add_option("--out", pert.out_path, "output corpus");
  c_pert->add_option("--stats", pert.stats_path, "substitution stats TSV");
  c_pert->add_option("--threshold", pert.threshold,
                     "length threshold for split mode");
  c_pert->add_option("--out-long", pert.out_long, "long-split output");
  c_pert->add_option("--out-short", pert.out_short, "short-split output");
  c_pert->callback([&] { RunPerturb(pert); });

  CorruptArgs corrupt;
  auto* c_cor = app.add_subcommand("corrupt",
                                   "noisy-channel hypothesis simulation");
  c_cor->add_option("--in", corrupt.in_path,
                    "reference corpus (structured or enriched)")
      ->required();
  c_cor->add_option("--profile", corrupt.profile_path, "noise profile JSON")
      ->required();
  c_cor->add_option("--symbols", corrupt.symbols_path, "symbol table JSON");
  c_cor->add_option("--seed", corrupt.seed_override,
                    "override the profile seed");
  c_cor->add_option("--out", corrupt.out_path, "hypothesis JSONL")->required();
  c_cor->callback([&] { RunCorrupt(corrupt); });

  LmArgs lm;
  auto* c_lm = app.add_subcommand("lm", "n-gram language model utilities");
  auto* c_lm_stats = c_lm->add_subcommand(
      "stats", "perplexity and OOV of a test corpus under a trained model");
  c_lm_stats->add_option("--train", lm.train_path, "training corpus JSONL")
      ->required();
  c_lm_stats->add_option("--test", lm.test_path, "test corpus JSONL")
      ->required();
  c_lm_stats->add_option("--order", lm.order, "n-gram order (default 3)");
  c_lm_stats->add_option("--k", lm.k, "add-k smoothing constant (default 1)");
  c_lm_stats->add_option("--out", lm.out_path, "output file (default stdout)");
  c_lm_stats->callback([&] { RunLmStats(lm); });
  c_lm->require_subcommand(1);

  CurriculumArgs cur;
  auto* c_cur = app.add_subcommand("curriculum",
                                   "emit staged training sets");
  c_cur->add_option("--in", cur.in_path, "corpus JSONL")->required();
  c_cur->add_option("--plan", cur.plan_path, "stage plan JSON");
  c_cur->add_option("--symbols", cur.symbols_path, "symbol table JSON");
  c_cur->add_option("--out-dir", cur.out_dir, "output directory")->required();
  c_cur->callback([&] { RunCurriculum(cur); });

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  c_lm_stats->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const IoError& e) {
    std::cerr << "slukit: I/O error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "slukit: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "slukit: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
