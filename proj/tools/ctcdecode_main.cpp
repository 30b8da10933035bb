// Copyright 2026 The ctcdecode Authors. All Rights Reserved.
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

// ctcdecode: CTC posterior decoding, WER evaluation, decoder tuning and
// corpus splitting.

#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "ctcdecode/parallel.hpp"

int main(int argc, char** argv) {
  using namespace ctcdecode::cli;

  CLI::App app{"CTC decoding and ASR evaluation toolkit"};
  app.require_subcommand(1);

  DecodeOptions decode;
  auto* dec = app.add_subcommand("decode", "Decode posterior files to a TSV");
  dec->add_option("--posteriors", decode.posteriors,
                  "Posterior JSON file or directory")
      ->required();
  dec->add_option("--lm", decode.lm, "ARPA language model");
  auto* alpha = dec->add_option("--alpha", decode.alpha, "LM weight");
  auto* beta = dec->add_option("--beta", decode.beta, "Word insertion weight");
  auto* width = dec->add_option("--beam-width", decode.beam_width, "Beam width");
  auto* penalty = dec->add_option("--partial-penalty", decode.partial_penalty,
                                  "Partial-word penalty (natural log)");
  auto* best = dec->add_flag("--best-path", decode.best_path,
                             "Greedy best-path decoding, no beam");
  best->excludes(alpha)->excludes(beta)->excludes(width)->excludes(penalty);
  dec->add_option("--out", decode.out, "Output TSV (default stdout)");

  EvalOptions eval;
  auto* ev = app.add_subcommand("eval", "Score a hypothesis TSV");
  ev->add_option("--hyp", eval.hyp, "Hypothesis TSV")->required();
  ev->add_option("--ref", eval.ref, "Reference TSV")->required();
  ev->add_option("--baseline-hyp", eval.baseline_hyp,
                 "Baseline hypothesis TSV for delta reporting");
  ev->add_option("--out", eval.out, "Report JSON");

  TuneOptions tune;
  auto* tu = app.add_subcommand("tune", "Grid-search decoder parameters");
  tu->add_option("--dev-posteriors", tune.dev_posteriors,
                 "Dev posterior file or directory")
      ->required();
  tu->add_option("--dev-refs", tune.dev_refs, "Dev reference TSV")->required();
  tu->add_option("--lm", tune.lm, "ARPA language model")->required();
  tu->add_option("--grid", tune.grid, "Grid JSON {alphas, betas, beam_widths}");
  tu->add_option("--partial-penalty", tune.partial_penalty,
                 "Partial-word penalty (natural log)");
  tu->add_option("--out", tune.out, "Report JSON (default stdout)");

  SplitOptions split;
  auto* sp = app.add_subcommand("split", "Partition a manifest");
  sp->add_option("--manifest", split.manifest, "Manifest CSV")->required();
  sp->add_option("--strategy", split.strategy, "Split strategy 1..5")
      ->required()
      ->check(CLI::Range(1, 5));
  sp->add_option("--seed", split.seed, "Shuffle seed");
  sp->add_option("--held-out", split.held_out,
                 "Held-out speaker (2, 5) or accent (3, 4)");
  sp->add_flag("--all-folds", split.all_folds, "Emit every fold");
  sp->add_option("--ratios", split.ratios, "train,dev,test ratios");
  sp->add_option("--out-dir", split.out_dir, "Output directory")->required();

  OracleOptions oracle;
  auto* orc = app.add_subcommand("oracle",
                                 "Exact labeling distribution (small inputs)");
  orc->add_option("--posteriors", oracle.posteriors, "Posterior JSON file")
      ->required();
  orc->add_option("--lm", oracle.lm, "ARPA language model");
  orc->add_option("--alpha", oracle.alpha, "LM weight");
  orc->add_option("--beta", oracle.beta, "Word insertion weight");
  orc->add_option("--out", oracle.out, "Output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  decode.threads = ctcdecode::default_thread_count();
  tune.threads = decode.threads;

  if (*dec) return run_decode(decode, std::cout, std::cerr);
  if (*ev) return run_eval(eval, std::cout, std::cerr);
  if (*tu) return run_tune(tune, std::cout, std::cerr);
  if (*sp) return run_split(split, std::cout, std::cerr);
  if (*orc) return run_oracle(oracle, std::cout, std::cerr);
  return kExitUsage;
}
