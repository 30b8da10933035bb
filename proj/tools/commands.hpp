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

#ifndef CTCDECODE_TOOLS_COMMANDS_HPP_
#define CTCDECODE_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ctcdecode::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct DecodeOptions {
  std::string posteriors;
  std::optional<std::string> lm;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<int> beam_width;
  std::optional<double> partial_penalty;
  bool best_path = false;
  std::optional<std::string> out;  // stdout when unset
  unsigned threads = 1;
};

struct EvalOptions {
  std::string hyp;
  std::string ref;
  std::optional<std::string> baseline_hyp;
  std::optional<std::string> out;
};

struct TuneOptions {
  std::string dev_posteriors;
  std::string dev_refs;
  std::string lm;
  std::optional<std::string> grid;
  std::optional<double> partial_penalty;
  std::optional<std::string> out;
  unsigned threads = 1;
};

struct SplitOptions {
  std::string manifest;
  int strategy = 1;
  std::uint64_t seed = 0;
  std::optional<std::string> held_out;
  bool all_folds = false;
  std::string ratios = "0.8,0.1,0.1";
  std::string out_dir = ".";
};

struct OracleOptions {
  std::string posteriors;
  std::optional<std::string> lm;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<std::string> out;
};

// Each command writes results to its output file (or `out`), progress and
// errors to `err`, and returns a process exit code.
int run_decode(const DecodeOptions& opts, std::ostream& out, std::ostream& err);
int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int run_tune(const TuneOptions& opts, std::ostream& out, std::ostream& err);
int run_split(const SplitOptions& opts, std::ostream& out, std::ostream& err);
int run_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace ctcdecode::cli

#endif  // CTCDECODE_TOOLS_COMMANDS_HPP_
