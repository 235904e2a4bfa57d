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

#include "slukit/perturb.h"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "slukit/codec.h"
#include "slukit/error.h"
#include "slukit/grammar.h"
#include "slukit/text.h"

using namespace slukit;

namespace {

const std::string kDataDir = SLUKIT_DATA_DIR;

Utterance FromEnriched(const std::string& text, const std::string& id) {
  DecodeResult d = Decode(EnrichedTranscript{text}, DefaultSymbolTable());
  REQUIRE(d.diagnostics.clean());
  d.utterance.id = id;
  return d.utterance;
}

std::multiset<std::string> LabelBag(const Utterance& u) {
  std::multiset<std::string> bag;
  for (const SlotSpan& s : u.slots) bag.insert(s.label);
  return bag;
}

std::set<std::string> VocabOf(const std::vector<Utterance>& corpus) {
  std::set<std::string> vocab;
  for (const Utterance& u : corpus)
    vocab.insert(u.tokens.begin(), u.tokens.end());
  return vocab;
}

}  // namespace

TEST_CASE("step-4 substitution rewrites slots and the keyword") {
  Utterance u =
      FromEnriched("@ ah vocadom euh ^allume^ }la bouilloire} @", "x");
  SubstitutionPlan plan;
  plan.step = 4;
  plan.categories = {"action", "device", "keyword"};
  plan.substitutions["action"] = {{"allume", "enclenche"}};
  plan.substitutions["device"] = {{"bouilloire", "bouillotte"}};
  plan.substitutions["keyword"] = {{"vocadom", "ursule"}};
  std::set<std::string> vocab = VocabOf({u});

  auto [out, stats] = ApplyOov({u}, plan, vocab);
  REQUIRE(out.size() == 1);
  CHECK(Encode(out[0], DefaultSymbolTable()).text ==
        "@ ah ursule euh ^enclenche^ }la bouillotte} @");
  CHECK(stats.word_tokens == 3);
  CHECK(stats.word_types == 3);
  CHECK(LabelBag(out[0]) == LabelBag(u));
}

TEST_CASE("substitutions only fire inside their category") {
  // "la" appears in both slots but only the device map mentions it.
  Utterance u = FromEnriched("@ kw ^la^ }la lampe} @", "x");
  SubstitutionPlan plan;
  plan.step = 1;
  plan.categories = {"device"};
  plan.substitutions["device"] = {{"la", "une"}};
  auto [out, stats] = ApplyOov({u}, plan, {});
  CHECK(out[0].slots[0].value == "la");        // action slot untouched
  CHECK(out[0].slots[1].value == "une lampe");  // device slot rewritten
  CHECK(stats.word_tokens == 1);
}

TEST_CASE("an empty plan changes nothing") {
  Utterance u = FromEnriched("@ kw ^allume^ }la lampe} @", "x");
  SubstitutionPlan plan;
  plan.step = 1;
  plan.categories = {"action"};
  auto [out, stats] = ApplyOov({u}, plan, VocabOf({u}));
  CHECK(out[0] == u);
  CHECK(stats.word_tokens == 0);
  CHECK(stats.word_types == 0);
  CHECK(stats.pct_tokens == 0.0);
}

TEST_CASE("replacements inside the training vocabulary are rejected") {
  Utterance u = FromEnriched("@ kw ^allume^ }la lampe} @", "x");
  SubstitutionPlan plan;
  plan.step = 1;
  plan.categories = {"action"};
  plan.substitutions["action"] = {{"allume", "lampe"}};
  CHECK_THROWS_WITH_AS(ApplyOov({u}, plan, VocabOf({u})),
                       doctest::Contains("training vocabulary"),
                       ValidationError);
}

TEST_CASE("multi-word replacements re-index following slots") {
  Utterance u = FromEnriched("@ kw ^allume^ }la lampe} >du salon> @", "x");
  SubstitutionPlan plan;
  plan.step = 1;
  plan.categories = {"action"};
  plan.substitutions["action"] = {{"allume", "mets en marche"}};
  auto [out, stats] = ApplyOov({u}, plan, {});
  CHECK(out[0].slots[0].value == "mets en marche");
  CHECK(out[0].slots[1].value == "la lampe");
  CHECK(out[0].slots[2].value == "du salon");
  CHECK(Encode(out[0], DefaultSymbolTable()).text ==
        "@ kw ^mets en marche^ }la lampe} >du salon> @");
}

TEST_CASE("shipped plans are cumulative and increasingly aggressive") {
  Grammar g = Grammar::Load(kDataDir + "/demo.grammar");
  std::vector<Utterance> corpus = g.Sample(400, 9);
  std::set<std::string> vocab = VocabOf(corpus);
  double prev = -1.0;
  std::vector<std::string> prev_cats;
  for (int step = 1; step <= 4; ++step) {
    SubstitutionPlan plan = ReadSubstitutionPlan(
        kDataDir + "/oov_step" + std::to_string(step) + ".json");
    CHECK(plan.step == step);
    for (const std::string& cat : prev_cats) {
      CHECK(std::find(plan.categories.begin(), plan.categories.end(), cat) !=
            plan.categories.end());
    }
    prev_cats = plan.categories;
    auto [out, stats] = ApplyOov(corpus, plan, vocab);
    CHECK(stats.pct_tokens > prev);
    prev = stats.pct_tokens;
    for (size_t i = 0; i < corpus.size(); ++i) {
      CHECK(LabelBag(out[i]) == LabelBag(corpus[i]));
      CHECK(out[i].intent == corpus[i].intent);
    }
  }
}

TEST_CASE("the inverse map restores the original corpus") {
  Grammar g = Grammar::Load(kDataDir + "/demo.grammar");
  std::vector<Utterance> corpus = g.Sample(200, 21);
  std::set<std::string> vocab = VocabOf(corpus);
  SubstitutionPlan plan =
      ReadSubstitutionPlan(kDataDir + "/oov_step4.json");
  auto [forward, stats] = ApplyOov(corpus, plan, vocab);

  SubstitutionPlan inverse;
  inverse.step = plan.step;
  inverse.categories = plan.categories;
  for (const auto& [cat, words] : plan.substitutions) {
    for (const auto& [orig, repl] : words)
      inverse.substitutions[cat][repl] = orig;
  }
  // Undoing is not an OOV experiment, so no vocabulary constraint applies.
  auto [back, stats2] = ApplyOov(forward, inverse, {});
  CHECK(back == corpus);
  CHECK(stats2.word_tokens == stats.word_tokens);
}

TEST_CASE("the worked syntactic variation example transforms exactly") {
  Utterance u = FromEnriched("@ vocadom euh ^allume^ }la bouilloire} @", "x");
  SyntaxPlan plan = ReadSyntaxPlan(kDataDir + "/syntax_step2.json");
  std::vector<Utterance> out = ApplySyntax({u}, plan);
  REQUIRE(out.size() == 1);
  CHECK(Encode(out[0], DefaultSymbolTable()).text ==
        "@ vocadom euh pourrais-tu ^allumer^ la la }bouilloire} @");
  CHECK(LabelBag(out[0]) == LabelBag(u));
}

TEST_CASE("utterances without an action slot pass through step 1") {
  Utterance u = FromEnriched("# kw est-ce que }la porte} est =ouverte= #", "x");
  SyntaxPlan plan = ReadSyntaxPlan(kDataDir + "/syntax_step1.json");
  std::vector<Utterance> out = ApplySyntax({u}, plan);
  CHECK(out[0] == u);
}

TEST_CASE("step 2 output is longer than step 1 output on average") {
  Grammar g = Grammar::Load(kDataDir + "/demo.grammar");
  std::vector<Utterance> corpus = g.Sample(300, 4);
  SyntaxPlan p1 = ReadSyntaxPlan(kDataDir + "/syntax_step1.json");
  SyntaxPlan p2 = ReadSyntaxPlan(kDataDir + "/syntax_step2.json");
  auto mean_len = [](const std::vector<Utterance>& c) {
    size_t total = 0;
    for (const Utterance& u : c) total += u.tokens.size();
    return static_cast<double>(total) / c.size();
  };
  std::vector<Utterance> s1 = ApplySyntax(corpus, p1);
  std::vector<Utterance> s2 = ApplySyntax(corpus, p2);
  CHECK(mean_len(s2) > mean_len(s1));
  CHECK(mean_len(s1) > mean_len(corpus));
  for (size_t i = 0; i < corpus.size(); ++i) {
    CHECK(LabelBag(s1[i]) == LabelBag(corpus[i]));
    CHECK(LabelBag(s2[i]) == LabelBag(corpus[i]));
  }
}

TEST_CASE("devices without a determiner receive the filler disfluency") {
  Utterance u = FromEnriched("@ kw ^allume^ }bouilloire} @", "x");
  SyntaxPlan plan;
  plan.step = 2;
  plan.determiners = {"le", "la"};
  plan.filler = "euh";
  std::vector<Utterance> out = ApplySyntax({u}, plan);
  CHECK(Encode(out[0], DefaultSymbolTable()).text ==
        "@ kw ^allume^ euh }bouilloire} @");
}

TEST_CASE("length split partitions strictly above the threshold") {
  Grammar g = Grammar::Load(kDataDir + "/demo.grammar");
  std::vector<Utterance> corpus = g.Sample(300, 12);
  LengthSplit split = SplitByLength(corpus, 7);
  CHECK(split.longer.size() + split.shorter.size() == corpus.size());
  CHECK(!split.longer.empty());
  CHECK(split.longer.size() < corpus.size());
  for (const Utterance& u : split.longer) CHECK(u.tokens.size() > 7);
  for (const Utterance& u : split.shorter) CHECK(u.tokens.size() <= 7);

  CHECK(SplitByLength(corpus, 0).longer.size() == corpus.size());
  CHECK(SplitByLength(corpus, 1000).longer.empty());
}
