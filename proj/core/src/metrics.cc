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

#include "slukit/metrics.h"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "slukit/codec.h"
#include "slukit/error.h"
#include "slukit/text.h"

namespace slukit {

double CerResult::Cer() const {
  if (ref_count == 0) return 100.0 * inserted;
  return 100.0 * (substituted + deleted + inserted) / ref_count;
}

CerResult Cer(const std::vector<std::string>& ref_labels,
              const std::vector<std::string>& hyp_labels) {
  std::map<std::string, int> ref_counts;
  for (const std::string& l : ref_labels) ++ref_counts[l];
  std::map<std::string, int> hyp_counts;
  for (const std::string& l : hyp_labels) ++hyp_counts[l];

  CerResult r;
  r.ref_count = static_cast<int>(ref_labels.size());
  r.empty_reference = ref_labels.empty();
  for (const auto& [label, rc] : ref_counts) {
    auto it = hyp_counts.find(label);
    if (it != hyp_counts.end()) r.matched += std::min(rc, it->second);
  }
  int ref_leftover = static_cast<int>(ref_labels.size()) - r.matched;
  int hyp_leftover = static_cast<int>(hyp_labels.size()) - r.matched;
  r.substituted = std::min(ref_leftover, hyp_leftover);
  r.deleted = ref_leftover - r.substituted;
  r.inserted = hyp_leftover - r.substituted;
  return r;
}

IntentConfusion IntentScores(
    const std::vector<std::pair<std::string, std::string>>& ref_hyp_pairs) {
  if (ref_hyp_pairs.empty())
    throw ValidationError("intent scoring requires a non-empty pair list");

  IntentConfusion out;
  for (const auto& [ref, hyp] : ref_hyp_pairs) {
    if (ref == hyp) {
      ++out.per_class[ref].tp;
    } else {
      ++out.per_class[ref].fn;
      ++out.per_class[hyp].fp;
    }
  }

  long tp_sum = 0, fp_sum = 0, fn_sum = 0;
  int macro_classes = 0;
  double macro_p = 0.0, macro_r = 0.0, macro_f = 0.0;
  for (auto& [name, c] : out.per_class) {
    c.precision = (c.tp + c.fp) ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
    c.recall = (c.tp + c.fn) ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
    c.f1 = (c.precision + c.recall > 0.0)
               ? 2.0 * c.precision * c.recall / (c.precision + c.recall)
               : 0.0;
    tp_sum += c.tp;
    fp_sum += c.fp;
    fn_sum += c.fn;
    // Classes never referenced and never predicted carry no signal.
    if (c.tp + c.fp + c.fn > 0) {
      ++macro_classes;
      macro_p += c.precision;
      macro_r += c.recall;
      macro_f += c.f1;
    }
  }
  out.micro_precision =
      (tp_sum + fp_sum) ? static_cast<double>(tp_sum) / (tp_sum + fp_sum) : 0.0;
  out.micro_recall =
      (tp_sum + fn_sum) ? static_cast<double>(tp_sum) / (tp_sum + fn_sum) : 0.0;
  out.micro_f1 = (out.micro_precision + out.micro_recall > 0.0)
                     ? 2.0 * out.micro_precision * out.micro_recall /
                           (out.micro_precision + out.micro_recall)
                     : 0.0;
  if (macro_classes > 0) {
    out.macro_precision = macro_p / macro_classes;
    out.macro_recall = macro_r / macro_classes;
    out.macro_f1 = macro_f / macro_classes;
  }
  return out;
}

namespace {

std::vector<std::string> SlotLabels(const Utterance& u, bool with_values) {
  std::vector<std::string> labels;
  labels.reserve(u.slots.size());
  for (const SlotSpan& s : u.slots) {
    labels.push_back(with_values ? s.label + "\x1f" + s.value : s.label);
  }
  return labels;
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

EvalRow MakeRow(const std::string& name,
                const std::vector<const UtteranceScore*>& members) {
  EvalRow row;
  row.group = name;
  row.count = members.size();
  double wer_sum = 0.0, cer_sum = 0.0;
  size_t wer_n = 0, cer_n = 0;
  std::vector<std::pair<std::string, std::string>> intent_pairs;
  for (const UtteranceScore* s : members) {
    if (s->wer_valid) {
      wer_sum += s->wer;
      ++wer_n;
    }
    if (s->cer_valid) {
      cer_sum += s->cer;
      ++cer_n;
    }
    intent_pairs.emplace_back(s->ref_intent, s->hyp_intent);
  }
  row.mean_wer = wer_n ? wer_sum / wer_n : 0.0;
  row.mean_cer = cer_n ? cer_sum / cer_n : 0.0;
  if (!intent_pairs.empty()) {
    IntentConfusion ic = IntentScores(intent_pairs);
    row.micro_f1 = 100.0 * ic.micro_f1;
    row.macro_f1 = 100.0 * ic.macro_f1;
  }
  return row;
}

}  // namespace

std::string EvalReport::ToTsv() const {
  std::string out = "Model\tGroup\tWER\tCER\tF1\tN\n";
  for (const EvalRow& row : rows) {
    out += model + "\t" + row.group + "\t" + Fmt(row.mean_wer) + "\t" +
           Fmt(row.mean_cer) + "\t" + Fmt(row.micro_f1) + "\t" +
           std::to_string(row.count) + "\n";
  }
  return out;
}

EvalReport CorpusReport(const std::vector<Utterance>& reference,
                        const std::vector<Utterance>& hypothesis,
                        const SymbolTable& table, const ScoreOptions& options) {
  std::unordered_map<std::string, const Utterance*> hyp_by_id;
  for (const Utterance& h : hypothesis) {
    if (!hyp_by_id.emplace(h.id, &h).second)
      throw ValidationError("duplicate hypothesis id '" + h.id + "'");
  }
  if (hypothesis.size() != reference.size())
    throw ValidationError("corpora differ in size: " +
                          std::to_string(reference.size()) + " reference vs " +
                          std::to_string(hypothesis.size()) + " hypothesis");

  EvalReport report;
  report.model = options.model_name;
  for (const Utterance& ref : reference) {
    auto it = hyp_by_id.find(ref.id);
    if (it == hyp_by_id.end())
      throw ValidationError("id '" + ref.id + "' missing from hypothesis corpus");
    const Utterance& hyp = *it->second;

    UtteranceScore s;
    s.id = ref.id;
    s.meta = ref.meta;
    for (const auto& [k, v] : hyp.meta) s.meta.emplace(k, v);

    AlignmentResult a;
    if (options.char_level) {
      a = Align(Utf8Chars(Encode(ref, table).text),
                Utf8Chars(Encode(hyp, table).text));
    } else {
      a = Align(ref.tokens, hyp.tokens);
    }
    s.wer = a.Wer();
    s.wer_valid = !a.empty_reference;
    s.ref_words = a.ref_len;

    CerResult c = Cer(SlotLabels(ref, options.with_values),
                      SlotLabels(hyp, options.with_values));
    s.cer = c.Cer();
    s.cer_valid = !c.empty_reference;
    s.ref_concepts = c.ref_count;

    s.ref_intent = ref.intent;
    s.hyp_intent = hyp.intent;
    s.intent_match = ref.intent == hyp.intent;
    report.per_utterance.push_back(std::move(s));
  }
  std::sort(report.per_utterance.begin(), report.per_utterance.end(),
            [](const UtteranceScore& a, const UtteranceScore& b) {
              return a.id < b.id;
            });

  // Group rows: one per meta value plus the "All" row.
  std::map<std::string, std::vector<const UtteranceScore*>> groups;
  for (const UtteranceScore& s : report.per_utterance) {
    groups["All"].push_back(&s);
    if (!options.group_by.empty()) {
      auto mit = s.meta.find(options.group_by);
      std::string key = mit != s.meta.end() ? mit->second : "(missing)";
      groups[key].push_back(&s);
    }
  }
  for (const auto& [name, members] : groups) {
    if (name == "All") continue;
    report.rows.push_back(MakeRow(name, members));
  }
  report.rows.push_back(MakeRow("All", groups["All"]));
  return report;
}

}  // namespace slukit
