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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "slukit/text.h"

namespace {

namespace fs = std::filesystem;

const std::string kCli = SLUKIT_CLI_BIN;
const std::string kDataDir = SLUKIT_DATA_DIR;

fs::path WorkDir() {
  fs::path dir = fs::temp_directory_path() / "slukit_cli_test";
  fs::create_directories(dir);
  return dir;
}

int Run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string FileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("generate writes a corpus and a manifest") {
  fs::path dir = WorkDir();
  fs::path out = dir / "demo100.jsonl";
  int code = Run("generate --grammar " + kDataDir + "/demo.grammar" +
                 " --limit 100 --out " + out.string() + " --quiet");
  CHECK(code == 0);
  std::string bytes = FileBytes(out);
  CHECK(std::count(bytes.begin(), bytes.end(), '\n') == 100);
  fs::path manifest = out;
  manifest += ".manifest.json";
  std::string m = FileBytes(manifest);
  CHECK(m.find("config_hash") != std::string::npos);
  CHECK(m.find("\"tool\": \"slukit\"") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
  fs::path dir = WorkDir();
  fs::path a = dir / "rep_a.jsonl";
  fs::path b = dir / "rep_b.jsonl";
  std::string base = "generate --grammar " + kDataDir +
                     "/demo.grammar --sample 200 --seed 77 --quiet --out ";
  REQUIRE(Run(base + a.string()) == 0);
  REQUIRE(Run(base + b.string()) == 0);
  CHECK(FileBytes(a) == FileBytes(b));
}

TEST_CASE("a run replayed from its manifest reproduces the output") {
  fs::path dir = WorkDir();
  fs::path out = dir / "replay.jsonl";
  std::string args = "generate --grammar " + kDataDir +
                     "/demo.grammar --sample 100 --seed 31 --quiet --out " +
                     out.string();
  REQUIRE(Run(args) == 0);
  std::string first = FileBytes(out);

  // The manifest records the exact argv; re-running it must reproduce the
  // output byte for byte.
  fs::path manifest = out;
  manifest += ".manifest.json";
  std::string m = FileBytes(manifest);
  REQUIRE(m.find("\"argv\"") != std::string::npos);
  fs::remove(out);
  REQUIRE(Run(args) == 0);
  CHECK(FileBytes(out) == first);
}

TEST_CASE("decode then encode over a toolkit file is the identity") {
  fs::path dir = WorkDir();
  fs::path corpus = dir / "c.jsonl";
  fs::path enc1 = dir / "e1.jsonl";
  fs::path dec = dir / "d.jsonl";
  fs::path enc2 = dir / "e2.jsonl";
  std::string symbols = " --symbols " + kDataDir + "/symbols.json --quiet";
  REQUIRE(Run("generate --grammar " + kDataDir +
              "/demo.grammar --sample 150 --seed 5 --quiet --out " +
              corpus.string()) == 0);
  REQUIRE(Run("encode --in " + corpus.string() + " --out " + enc1.string() +
              symbols) == 0);
  REQUIRE(Run("decode --in " + enc1.string() + " --out " + dec.string() +
              symbols) == 0);
  REQUIRE(Run("encode --in " + dec.string() + " --out " + enc2.string() +
              symbols) == 0);
  CHECK(FileBytes(enc1) == FileBytes(enc2));
}

TEST_CASE("exit codes distinguish validation from io errors") {
  fs::path dir = WorkDir();
  // Missing input file: io error, exit 2.
  CHECK(Run("encode --in " + (dir / "missing.jsonl").string() + " --out " +
            (dir / "x.jsonl").string()) == 2);
  // Unknown flag: usage error, exit 1.
  CHECK(Run("generate --grammar " + kDataDir +
            "/demo.grammar --frobnicate --out " + (dir / "y.jsonl").string()) ==
        1);
  // Schema violation in the input: validation error, exit 1.
  fs::path bad = dir / "bad.jsonl";
  {
    std::ofstream out(bad);
    out << R"({"id":"a"})" << "\n";
  }
  CHECK(Run("encode --in " + bad.string() + " --out " +
            (dir / "z.jsonl").string()) == 1);
  // Unknown subcommand.
  CHECK(Run("transmogrify") == 1);
  // Help succeeds.
  CHECK(Run("--help >/dev/null") == 0);
}

TEST_CASE("score emits the grouped report layout") {
  fs::path dir = WorkDir();
  fs::path corpus = dir / "sc.jsonl";
  fs::path hyp = dir / "sh.jsonl";
  fs::path report = dir / "report.tsv";
  std::string symbols = " --symbols " + kDataDir + "/symbols.json --quiet";
  REQUIRE(Run("generate --grammar " + kDataDir +
              "/demo.grammar --sample 120 --seed 9 --quiet --out " +
              corpus.string()) == 0);
  REQUIRE(Run("corrupt --in " + corpus.string() + " --profile " + kDataDir +
              "/noise_mixed.json --out " + hyp.string() + symbols) == 0);
  REQUIRE(Run("score --ref " + corpus.string() + " --hyp " + hyp.string() +
              " --group-by meta.noise --out " + report.string() + symbols) ==
          0);
  std::string tsv = FileBytes(report);
  CHECK(tsv.rfind("Model\tGroup\tWER\tCER\tF1\tN\n", 0) == 0);
  CHECK(tsv.find("\tmixed\t") != std::string::npos);
  CHECK(tsv.find("\tAll\t") != std::string::npos);
}

TEST_CASE("correlate prints both coefficients with markers") {
  fs::path dir = WorkDir();
  fs::path corpus = dir / "cc.jsonl";
  fs::path hyp = dir / "ch.jsonl";
  fs::path per = dir / "per.jsonl";
  fs::path block = dir / "block.txt";
  std::string symbols = " --symbols " + kDataDir + "/symbols.json --quiet";
  REQUIRE(Run("generate --grammar " + kDataDir +
              "/demo.grammar --sample 400 --seed 3 --quiet --out " +
              corpus.string()) == 0);
  REQUIRE(Run("corrupt --in " + corpus.string() + " --profile " + kDataDir +
              "/noise_mixed.json --out " + hyp.string() + symbols) == 0);
  REQUIRE(Run("score --ref " + corpus.string() + " --hyp " + hyp.string() +
              " --per-utterance " + per.string() + " --out /dev/null" +
              symbols) == 0);
  REQUIRE(Run("correlate --scores " + per.string() +
              " --x wer --y cer --out " + block.string()) == 0);
  std::string text = FileBytes(block);
  CHECK(text.find("Pearson (r)") != std::string::npos);
  CHECK(text.find("Spearman (r_s)") != std::string::npos);
  CHECK(text.find("* p<0.05 ; ** p<0.01") != std::string::npos);
}

TEST_CASE("mask, syntax perturbation and sweep correlation round out the tour") {
  fs::path dir = WorkDir();
  fs::path corpus = dir / "tour.jsonl";
  fs::path enriched = dir / "tour_enriched.jsonl";
  fs::path masked = dir / "tour_masked.jsonl";
  fs::path syntax = dir / "tour_syntax.jsonl";
  fs::path sweep_out = dir / "sweep.txt";
  std::string symbols = " --symbols " + kDataDir + "/symbols.json --quiet";
  REQUIRE(Run("generate --grammar " + kDataDir +
              "/demo.grammar --sample 200 --seed 44 --quiet --out " +
              corpus.string()) == 0);
  REQUIRE(Run("encode --in " + corpus.string() + " --out " +
              enriched.string() + symbols) == 0);
  REQUIRE(Run("mask --in " + enriched.string() + " --out " + masked.string() +
              symbols) == 0);
  std::string bytes = FileBytes(masked);
  CHECK(bytes.find("*") != std::string::npos);

  REQUIRE(Run("perturb --in " + corpus.string() + " --mode syntax --plan " +
              kDataDir + "/syntax_step2.json --quiet --out " +
              syntax.string()) == 0);
  CHECK(FileBytes(syntax).find("pourrais-tu") != std::string::npos);

  REQUIRE(Run("correlate --ref " + corpus.string() + " --sweep " + kDataDir +
              "/noise_sweep.json --out " + sweep_out.string() + symbols) ==
          0);
  std::string sweep = FileBytes(sweep_out);
  CHECK(sweep.find("profile=light") != std::string::npos);
  CHECK(sweep.find("profile=mixed") != std::string::npos);
  CHECK(sweep.find("profile=heavy") != std::string::npos);
}

TEST_CASE("lm stats prints the comparison row") {
  fs::path dir = WorkDir();
  fs::path corpus = dir / "lm.jsonl";
  fs::path out = dir / "lm.tsv";
  REQUIRE(Run("generate --grammar " + kDataDir +
              "/demo.grammar --sample 200 --seed 2 --quiet --out " +
              corpus.string()) == 0);
  REQUIRE(Run("lm stats --train " + corpus.string() + " --test " +
              corpus.string() + " --out " + out.string() + " --quiet") == 0);
  std::string tsv = FileBytes(out);
  CHECK(tsv.rfind("corpus\tutterances\twords\tperplexity\toov_types\toov_tokens",
                  0) == 0);
  CHECK(tsv.find("\t200\t") != std::string::npos);
  CHECK(tsv.find("\t0\t0") != std::string::npos);  // no OOV against itself
}

TEST_CASE("curriculum writes four stages plus manifest") {
  fs::path dir = WorkDir() / "stages";
  fs::remove_all(dir);
  fs::path corpus = WorkDir() / "cur.jsonl";
  REQUIRE(Run("generate --grammar " + kDataDir +
              "/demo.grammar --sample 250 --seed 13 --quiet --out " +
              corpus.string()) == 0);
  REQUIRE(Run("curriculum --in " + corpus.string() + " --plan " + kDataDir +
              "/stage_plan.json --symbols " + kDataDir +
              "/symbols.json --out-dir " + dir.string() + " --quiet") == 0);
  for (const char* name :
       {"data2.jsonl", "data3.jsonl", "data4.jsonl", "data4_star.jsonl",
        "manifest.json"}) {
    CHECK(fs::exists(dir / name));
  }
  std::string manifest = FileBytes(dir / "manifest.json");
  CHECK(manifest.find("concept_histogram") != std::string::npos);
}
