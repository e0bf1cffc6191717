// Copyright 2026 The bitalign Authors.
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

#include "bitalign/eval.h"

#include <algorithm>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace bitalign {

namespace {

using IndexSet = std::vector<std::size_t>;

IndexSet Sorted(IndexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool Overlaps(const IndexSet& a, const IndexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

struct Bead {
  IndexSet src;
  IndexSet tgt;
};

void Finish(Scores& s, std::size_t hyp_pairs, std::size_t gold_pairs) {
  s.fp = hyp_pairs - s.tp;
  s.fn = gold_pairs - s.recalled;
  s.precision = hyp_pairs == 0 ? 0.0 : static_cast<double>(s.tp) / hyp_pairs;
  s.recall =
      gold_pairs == 0 ? 0.0 : static_cast<double>(s.recalled) / gold_pairs;
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
}

}  // namespace

EvalReport Evaluate(const std::vector<AlignmentEntry>& hyp, const GoldSet& gold,
                    std::optional<DocumentBounds> bounds) {
  if (bounds) {
    for (const auto& g : gold.alignments) {
      for (std::size_t i : g.src) {
        if (i >= bounds->src) {
          throw FormatError("gold line " + std::to_string(g.line) +
                            ": source index " + std::to_string(i) +
                            " out of range");
        }
      }
      for (std::size_t j : g.tgt) {
        if (j >= bounds->tgt) {
          throw FormatError("gold line " + std::to_string(g.line) +
                            ": target index " + std::to_string(j) +
                            " out of range");
        }
      }
    }
  }

  std::vector<Bead> hyp_beads, gold_beads;
  for (const auto& h : hyp) {
    if (!h.is_null()) hyp_beads.push_back({Sorted(h.src), Sorted(h.tgt)});
  }
  for (const auto& g : gold.alignments) {
    if (!g.is_null()) gold_beads.push_back({Sorted(g.src), Sorted(g.tgt)});
  }
  // Exact-match lookups for the strict condition.
  std::set<std::pair<IndexSet, IndexSet>> gold_exact, hyp_exact;
  for (const auto& g : gold_beads) gold_exact.insert({g.src, g.tgt});
  for (const auto& h : hyp_beads) hyp_exact.insert({h.src, h.tgt});

  EvalReport report;
  report.hyp_pairs = hyp_beads.size();
  report.gold_pairs = gold_beads.size();

  std::vector<bool> gold_lax(gold_beads.size(), false);
  for (const auto& h : hyp_beads) {
    if (gold_exact.count({h.src, h.tgt})) ++report.strict.tp;
    bool hit = false;
    for (std::size_t g = 0; g < gold_beads.size(); ++g) {
      if (Overlaps(h.src, gold_beads[g].src) &&
          Overlaps(h.tgt, gold_beads[g].tgt)) {
        hit = true;
        gold_lax[g] = true;
      }
    }
    if (hit) ++report.lax.tp;
  }
  for (std::size_t g = 0; g < gold_beads.size(); ++g) {
    if (hyp_exact.count({gold_beads[g].src, gold_beads[g].tgt})) {
      ++report.strict.recalled;
    }
    if (gold_lax[g]) ++report.lax.recalled;
  }
  Finish(report.strict, report.hyp_pairs, report.gold_pairs);
  Finish(report.lax, report.hyp_pairs, report.gold_pairs);

  if (report.hyp_pairs == 0) {
    report.notes.push_back(
        "hypothesis has no non-null pairs; precision reported as 0");
  }
  if (report.gold_pairs == 0) {
    report.notes.push_back("gold set has no non-null pairs; recall reported as 0");
  }
  report.notes.push_back(
      "lax recall: a gold pair counts once if any hypothesis pair overlaps "
      "both of its sides");
  return report;
}

EvalReport Evaluate(const AlignmentPath& hyp, const GoldSet& gold,
                    std::optional<DocumentBounds> bounds) {
  return Evaluate(ToEntries(hyp), gold, bounds);
}

std::string FormatReportTable(const EvalReport& report) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-8s %8s %8s %8s %6s %6s %6s\n",
                "", "P", "R", "F1", "TP", "FP", "FN");
  out += buf;
  for (const auto& [name, s] :
       {std::pair{"strict", &report.strict}, std::pair{"lax", &report.lax}}) {
    std::snprintf(buf, sizeof(buf), "%-8s %8.3f %8.3f %8.3f %6zu %6zu %6zu\n",
                  name, s->precision, s->recall, s->f1, s->tp, s->fp, s->fn);
    out += buf;
  }
  std::snprintf(buf, sizeof(buf), "hypothesis pairs: %zu, gold pairs: %zu\n",
                report.hyp_pairs, report.gold_pairs);
  out += buf;
  for (const auto& note : report.notes) out += "note: " + note + "\n";
  return out;
}

std::string FormatReportJson(const EvalReport& report) {
  auto scores = [](const Scores& s) {
    return nlohmann::json{{"precision", s.precision}, {"recall", s.recall},
                          {"f1", s.f1},               {"tp", s.tp},
                          {"fp", s.fp},               {"fn", s.fn}};
  };
  const nlohmann::json j = {{"strict", scores(report.strict)},
                            {"lax", scores(report.lax)},
                            {"hyp_pairs", report.hyp_pairs},
                            {"gold_pairs", report.gold_pairs},
                            {"notes", report.notes}};
  return j.dump(2) + "\n";
}

}  // namespace bitalign
