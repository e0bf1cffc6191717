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

// bitalign: sentence alignment of parallel documents.
//
//   bitalign align    --src a.txt --tgt b.txt [--src-emb a.saev --tgt-emb b.saev]
//   bitalign gc-align --src a.txt --tgt b.txt
//   bitalign eval     --hyp hyp.align --gold gold.align [--json]
//   bitalign embed    --in a.txt --out a.saev [--dim 256]
//
// Exit codes: 0 ok, 1 usage, 2 I/O or format error, 3 internal invariant
// violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bitalign/alignment_io.h"
#include "bitalign/anchor.h"
#include "bitalign/core.h"
#include "bitalign/embed.h"
#include "bitalign/eval.h"
#include "bitalign/galechurch.h"
#include "bitalign/path.h"
#include "bitalign/readjust.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitInvariant = 3;

struct AlignOptions {
  std::string src, tgt, src_emb, tgt_emb;
  std::string out = "stdout";
  std::size_t hash_dim = 256;
  bitalign::AlignConfig cfg;
  bool no_readjust = false;
  bool scores = false;
  bool stats = false;
  std::optional<std::size_t> threads;
};

struct GcOptions {
  std::string src, tgt;
  std::string out = "stdout";
  bitalign::GCParams params;
};

struct EvalOptions {
  std::string hyp, gold;
  bool json = false;
  std::optional<std::size_t> src_count, tgt_count;
};

struct EmbedOptions {
  std::string in, out;
  std::size_t dim = 256;
};

void WriteOutput(const std::string& target, const std::string& text) {
  if (target == "stdout" || target == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw bitalign::IoError("cannot open " + target + " for writing");
  out << text;
  if (!out) throw bitalign::IoError("write failed: " + target);
}

std::size_t ThreadCount(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BITALIGN_THREADS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw bitalign::ContractError("BITALIGN_THREADS is not a number");
    }
  }
  return 0;
}

void CheckPath(const bitalign::AlignmentPath& path, std::size_t n,
               std::size_t m) {
  if (auto v = bitalign::ValidatePath(path, n, m)) {
    throw bitalign::InvariantError("emitted path is invalid at pair " +
                                   std::to_string(v->pair_index) + ": " +
                                   v->message);
  }
}

int RunAlign(AlignOptions& opt) {
  using namespace bitalign;
  if (opt.src_emb.empty() != opt.tgt_emb.empty()) {
    throw ContractError("--src-emb and --tgt-emb must be given together");
  }
  opt.cfg.threads = ThreadCount(opt.threads);
  opt.cfg.Validate();
  const Document src = LoadDocument(opt.src);
  const Document tgt = LoadDocument(opt.tgt);
  EmbeddingMatrix src_emb, tgt_emb;
  if (opt.src_emb.empty()) {
    src_emb = HashNgramEmbed(src, opt.hash_dim);
    tgt_emb = HashNgramEmbed(tgt, opt.hash_dim);
  } else {
    src_emb = LoadEmbeddings(opt.src_emb, src.size());
    tgt_emb = LoadEmbeddings(opt.tgt_emb, tgt.size());
  }
  const Bitext bitext(src, tgt, src_emb, tgt_emb);
  AlignStats stats;
  AlignmentPath path = AlignLarge(bitext, opt.cfg, &stats);
  if (!opt.no_readjust) path = Readjust(path, bitext, opt.cfg);
  CheckPath(path, src.size(), tgt.size());
  if (opt.stats) {
    std::cerr << "dp_calls " << stats.dp_calls << "\n"
              << "total_nodes " << stats.total_nodes << "\n"
              << "max_table_nodes " << stats.max_table_nodes << "\n"
              << "max_depth " << stats.max_depth << "\n"
              << "delimiters " << stats.delimiters << "\n"
              << "gc_delimiter_searches " << stats.gc_delimiter_searches << "\n"
              << "greedy_delimiter_searches " << stats.greedy_delimiter_searches
              << "\n";
  }
  WriteOutput(opt.out, FormatAlignments(path, opt.scores));
  return 0;
}

int RunGcAlign(const GcOptions& opt) {
  using namespace bitalign;
  const Document src = LoadDocument(opt.src);
  const Document tgt = LoadDocument(opt.tgt);
  const GcResult r = GcAlign(src, tgt, opt.params);
  CheckPath(r.path, src.size(), tgt.size());
  WriteOutput(opt.out, FormatAlignments(r.path, false));
  return 0;
}

int RunEval(const EvalOptions& opt) {
  using namespace bitalign;
  const auto hyp = LoadAlignments(opt.hyp);
  const GoldSet gold{LoadAlignments(opt.gold)};
  std::optional<DocumentBounds> bounds;
  if (opt.src_count || opt.tgt_count) {
    if (!opt.src_count || !opt.tgt_count) {
      throw ContractError("--src-count and --tgt-count must be given together");
    }
    bounds = DocumentBounds{*opt.src_count, *opt.tgt_count};
  }
  const EvalReport report = Evaluate(hyp, gold, bounds);
  std::cout << (opt.json ? FormatReportJson(report) : FormatReportTable(report));
  return 0;
}

int RunEmbed(const EmbedOptions& opt) {
  using namespace bitalign;
  const Document doc = LoadDocument(opt.in);
  SaveEmbeddings(HashNgramEmbed(doc, opt.dim), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bitalign: sentence alignment with embedding similarity"};
  app.require_subcommand(1);

  AlignOptions align;
  auto* align_cmd = app.add_subcommand("align", "align two sentence files");
  align_cmd->add_option("--src", align.src, "source sentences, one per line")
      ->required();
  align_cmd->add_option("--tgt", align.tgt, "target sentences, one per line")
      ->required();
  align_cmd->add_option("--src-emb", align.src_emb, "source SAEV embeddings");
  align_cmd->add_option("--tgt-emb", align.tgt_emb, "target SAEV embeddings");
  align_cmd->add_option("--hash-dim", align.hash_dim,
                        "dimension of the built-in hash embedder")
      ->capture_default_str();
  align_cmd->add_option("--min-score", align.cfg.min_score,
                        "similarity threshold; also the value of null moves")
      ->capture_default_str();
  align_cmd->add_option("--max-merge", align.cfg.max_merge,
                        "max sentences merged per side")
      ->capture_default_str();
  align_cmd->add_option("--max-words", align.cfg.max_words,
                        "words per side before the length penalty")
      ->capture_default_str();
  align_cmd->add_option("--word-penalty", align.cfg.word_penalty,
                        "penalty per excess word")
      ->capture_default_str();
  align_cmd->add_option("--merge-free", align.cfg.merge_penalty_free,
                        "merged sentences allowed before the merge penalty")
      ->capture_default_str();
  align_cmd->add_option("--merge-penalty", align.cfg.merge_penalty,
                        "penalty per excess merged sentence")
      ->capture_default_str();
  align_cmd->add_option("--max-nodes", align.cfg.max_nodes,
                        "largest graph searched exhaustively")
      ->capture_default_str();
  align_cmd->add_option("--gc-max-nodes", align.cfg.gc_max_nodes,
                        "largest chunk given to Gale-Church for delimiters")
      ->capture_default_str();
  align_cmd->add_option("--band", align.cfg.greedy_band,
                        "diagonal band of the greedy delimiter search")
      ->capture_default_str();
  align_cmd->add_option("--out", align.out, "output file or stdout")
      ->capture_default_str();
  align_cmd->add_flag("--no-readjust", align.no_readjust,
                      "skip the readjustment pass");
  align_cmd->add_flag("--scores", align.scores,
                      "append a tab and the pair similarity");
  align_cmd->add_flag("--stats", align.stats, "print search counters to stderr");
  align_cmd->add_option("--threads", align.threads,
                        "scoring threads (default: $BITALIGN_THREADS or all "
                        "cores)");

  GcOptions gc;
  auto* gc_cmd =
      app.add_subcommand("gc-align", "length-based Gale-Church alignment");
  gc_cmd->add_option("--src", gc.src, "source sentences")->required();
  gc_cmd->add_option("--tgt", gc.tgt, "target sentences")->required();
  gc_cmd->add_option("--out", gc.out, "output file or stdout")
      ->capture_default_str();
  gc_cmd->add_option("--mean-ratio", gc.params.mean_ratio,
                     "target chars per source char")
      ->capture_default_str();
  gc_cmd->add_option("--variance", gc.params.variance, "length variance")
      ->capture_default_str();

  EvalOptions ev;
  auto* eval_cmd =
      app.add_subcommand("eval", "score a hypothesis against a gold set");
  eval_cmd->add_option("--hyp", ev.hyp, "hypothesis alignment file")
      ->required();
  eval_cmd->add_option("--gold", ev.gold, "gold alignment file")->required();
  eval_cmd->add_flag("--json", ev.json, "print JSON instead of a table");
  eval_cmd->add_option("--src-count", ev.src_count,
                       "source sentences, for range checks");
  eval_cmd->add_option("--tgt-count", ev.tgt_count,
                       "target sentences, for range checks");

  EmbedOptions emb;
  auto* embed_cmd = app.add_subcommand(
      "embed", "write hash-embedder vectors of a sentence file (SAEV)");
  embed_cmd->add_option("--in", emb.in, "sentence file")->required();
  embed_cmd->add_option("--out", emb.out, "output SAEV file")->required();
  embed_cmd->add_option("--dim", emb.dim, "vector dimension")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    const auto used = app.get_subcommands();
    std::cerr << (used.empty() ? app.help() : used.front()->help());
    return kExitUsage;
  }

  try {
    if (*align_cmd) return RunAlign(align);
    if (*gc_cmd) return RunGcAlign(gc);
    if (*eval_cmd) return RunEval(ev);
    if (*embed_cmd) return RunEmbed(emb);
  } catch (const bitalign::ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bitalign::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const bitalign::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
