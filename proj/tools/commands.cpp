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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "ctcdecode/beam.hpp"
#include "ctcdecode/ctc_core.hpp"
#include "ctcdecode/error.hpp"
#include "ctcdecode/io.hpp"
#include "ctcdecode/metrics.hpp"
#include "ctcdecode/oracle.hpp"
#include "ctcdecode/parallel.hpp"
#include "ctcdecode/splits.hpp"
#include "ctcdecode/tuning.hpp"

namespace ctcdecode::cli {

namespace {

std::string two_decimals(double value) {
  if (!std::isfinite(value)) {
    return "inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

// Writes to `path` when set, else to `out`.
void emit(const std::optional<std::string>& path, const std::string& text,
          std::ostream& out) {
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

std::unique_ptr<LanguageModel> load_lm(const std::string& path) {
  return std::make_unique<LanguageModel>(load_arpa(path));
}

}  // namespace

int run_decode(const DecodeOptions& opts, std::ostream& out,
               std::ostream& err) {
  if (opts.best_path && (opts.alpha || opts.beta || opts.beam_width ||
                         opts.partial_penalty || opts.lm)) {
    err << "usage error: --best-path cannot be combined with --lm, --alpha, "
           "--beta, --beam-width or --partial-penalty\n";
    return kExitUsage;
  }

  DecodeParams params = default_params(CorpusProfile::kAccentedDev);
  if (opts.alpha) params.alpha = *opts.alpha;
  if (opts.beta) params.beta = *opts.beta;
  if (opts.beam_width) params.beam_width = *opts.beam_width;
  if (opts.partial_penalty) params.partial_word_penalty = *opts.partial_penalty;
  if (!opts.best_path) {
    try {
      params.validate();
    } catch (const Error& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  std::unique_ptr<LanguageModel> lm;
  if (opts.lm) {
    try {
      lm = load_lm(*opts.lm);
    } catch (const Error& e) {
      err << "error: " << *opts.lm << ": " << e.what() << '\n';
      return kExitFailure;
    }
  }

  std::string header = "# ctcdecode decode";
  if (opts.best_path) {
    header += " mode=best_path";
  } else {
    header += " mode=beam alpha=" + format_real(params.alpha) +
              " beta=" + format_real(params.beta) +
              " beam_width=" + std::to_string(params.beam_width) +
              " partial_penalty=" + format_real(params.partial_word_penalty) +
              " lm=" + (opts.lm ? *opts.lm : std::string("none"));
  }
  err << header << '\n';

  const auto files = list_posterior_files(opts.posteriors);
  std::vector<std::optional<TranscriptRow>> rows(files.size());
  std::vector<std::string> errors(files.size());
  parallel_for(files.size(), opts.threads, [&](std::size_t i) {
    try {
      const auto table = load_posterior_file(files[i]);
      if (opts.best_path) {
        const auto best = best_path_decode(table);
        rows[i] = TranscriptRow{table.utterance_id(), best.labeling.text,
                                std::log(best.path_probability)};
      } else {
        const auto results = beam_decode(table, lm.get(), params);
        rows[i] = TranscriptRow{table.utterance_id(),
                                results.front().labeling.text,
                                results.front().score};
      }
    } catch (const Error& e) {
      errors[i] = e.what();
    }
  });

  std::string text = header + '\n';
  bool failed = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) {
      err << "error: " << errors[i] << '\n';
      failed = true;
      continue;
    }
    text += format_transcript_row(*rows[i]) + '\n';
  }
  try {
    emit(opts.out, text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return failed ? kExitFailure : kExitOk;
}

namespace {

// Pairs hypotheses with references in reference order. Returns the ids that do
// not match up.
std::vector<std::string> pair_up(const std::vector<TranscriptRow>& ref,
                                 const std::vector<TranscriptRow>& hyp,
                                 std::vector<ScoringPair>& pairs) {
  std::map<std::string, std::string> by_id;
  std::vector<std::string> mismatched;
  for (const auto& h : hyp) {
    if (!by_id.emplace(h.id, h.text).second) {
      mismatched.push_back(h.id + " (duplicate in hypothesis)");
    }
  }
  std::set<std::string> seen;
  for (const auto& r : ref) {
    auto it = by_id.find(r.id);
    if (it == by_id.end()) {
      mismatched.push_back(r.id + " (missing from hypothesis)");
      continue;
    }
    seen.insert(r.id);
    pairs.push_back(ScoringPair{r.id, r.text, it->second});
  }
  for (const auto& [id, text] : by_id) {
    if (!seen.count(id)) {
      mismatched.push_back(id + " (missing from reference)");
    }
  }
  return mismatched;
}

}  // namespace

int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto ref = read_transcripts(opts.ref);
    std::vector<ScoringPair> pairs;
    auto bad = pair_up(ref, read_transcripts(opts.hyp), pairs);
    std::vector<ScoringPair> base_pairs;
    if (opts.baseline_hyp) {
      for (auto& id : pair_up(ref, read_transcripts(*opts.baseline_hyp),
                              base_pairs)) {
        bad.push_back("baseline: " + id);
      }
    }
    if (!bad.empty()) {
      err << "error: utterance ids do not match:";
      for (const auto& id : bad) {
        err << ' ' << id;
      }
      err << '\n';
      return kExitFailure;
    }

    const auto report = build_report(pairs);
    Json doc = wer_report_to_json(report);
    out << "WER: " << two_decimals(report.wer * 100.0) << '\n';
    if (opts.baseline_hyp) {
      const auto baseline = build_report(base_pairs);
      Json delta = delta_wer_to_json(baseline.wer, report.wer);
      delta["ops"] = ops_delta_to_json(ops_delta_report(baseline, report));
      doc["baseline"] = wer_report_to_json(baseline)["aggregate"];
      out << "Baseline WER: " << two_decimals(baseline.wer * 100.0) << '\n';
      if (delta["relative_percent"].is_number()) {
        out << "Delta WER: "
            << two_decimals(delta["relative_percent"].get<double>()) << "%\n";
      }
      doc["delta"] = std::move(delta);
    }
    if (opts.out) {
      write_file(*opts.out, doc.dump(2) + "\n");
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_tune(const TuneOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    Grid grid = Grid::standard();
    if (opts.grid) {
      grid = grid_from_json(Json::parse(read_file(*opts.grid)));
    }
    const LanguageModel lm(load_arpa(opts.lm));

    std::map<std::string, std::string> refs;
    for (auto& r : read_transcripts(opts.dev_refs)) {
      refs.emplace(r.id, r.text);
    }
    std::vector<DevUtterance> dev;
    for (const auto& file : list_posterior_files(opts.dev_posteriors)) {
      auto table = load_posterior_file(file);
      auto it = refs.find(table.utterance_id());
      if (it == refs.end()) {
        err << "error: no reference for utterance '" << table.utterance_id()
            << "'\n";
        return kExitFailure;
      }
      dev.push_back(DevUtterance{std::move(table), it->second});
    }

    DecodeParams base;
    if (opts.partial_penalty) {
      base.partial_word_penalty = *opts.partial_penalty;
    }
    const auto report = grid_search(dev, &lm, grid, base, opts.threads);
    err << "best: alpha=" << format_real(report.best.alpha)
        << " beta=" << format_real(report.best.beta)
        << " beam_width=" << report.best.beam_width
        << " WER=" << two_decimals(report.best.wer * 100.0) << '\n';
    emit(opts.out, tuning_report_to_json(report).dump(2) + "\n", out);
    return kExitOk;
  } catch (const InvalidParams& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

namespace {

std::optional<SplitRatios> parse_ratios(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) {
        return std::nullopt;
      }
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  if (values.size() != 3) {
    return std::nullopt;
  }
  return SplitRatios{values[0], values[1], values[2]};
}

}  // namespace

int run_split(const SplitOptions& opts, std::ostream& out, std::ostream& err) {
  const auto ratios = parse_ratios(opts.ratios);
  if (!ratios) {
    err << "usage error: --ratios expects three comma-separated numbers\n";
    return kExitUsage;
  }
  SplitConfig config{opts.strategy, *ratios, opts.seed, opts.held_out,
                     opts.all_folds};
  try {
    const auto manifest = load_manifest(opts.manifest);
    const auto assignments = make_split(manifest, config);
    std::filesystem::create_directories(opts.out_dir);
    for (const auto& a : assignments) {
      const auto path =
          (std::filesystem::path(opts.out_dir) / (a.name() + ".json"))
              .string();
      write_file(path, split_to_json(a).dump(2) + "\n");
      out << path << '\t' << "train=" << a.count(Partition::kTrain)
          << " dev=" << a.count(Partition::kDev)
          << " test=" << a.count(Partition::kTest)
          << " test_zeroshot=" << a.test_zeroshot.size() << '\n';
    }
    return kExitOk;
  } catch (const InvalidParams& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_oracle(const OracleOptions& opts, std::ostream& out,
               std::ostream& err) {
  try {
    const auto table = load_posterior_file(opts.posteriors);
    std::unique_ptr<LanguageModel> lm;
    if (opts.lm) {
      lm = load_lm(*opts.lm);
    }
    DecodeParams params;
    params.alpha = opts.alpha;
    params.beta = opts.beta;
    params.partial_word_penalty = 0.0;
    params.beam_width = 1;

    const auto distribution = enumerate_labelings(table);
    const auto best = oracle_best(table, lm.get(), params);
    Json dist = Json::object();
    for (const auto& [text, p] : distribution) {
      dist[text] = p;
    }
    Json doc{{"utterance_id", table.utterance_id()},
             {"alpha", opts.alpha},
             {"beta", opts.beta},
             {"distribution", std::move(dist)},
             {"best",
              {{"labeling", best.labeling.text},
               {"fused_score", best.fused_score},
               {"probability", best.probability}}}};
    emit(opts.out, doc.dump(2) + "\n", out);
    return kExitOk;
  } catch (const InvalidParams& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ctcdecode::cli
