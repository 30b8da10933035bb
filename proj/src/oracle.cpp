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

#include "ctcdecode/oracle.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "ctcdecode/error.hpp"

namespace ctcdecode {

template <typename Scalar>
std::map<std::string, double> enumerate_labelings(
    const BasicPosteriorTable<Scalar>& table) {
  if (table.num_frames() > kOracleMaxFrames ||
      table.num_symbols() > kOracleMaxSymbols) {
    throw ResourceLimit(
        "oracle enumeration is capped at T <= " +
        std::to_string(kOracleMaxFrames) + " and V <= " +
        std::to_string(kOracleMaxSymbols) + "; got T = " +
        std::to_string(table.num_frames()) +
        ", V = " + std::to_string(table.num_symbols()));
  }
  const Alphabet& alphabet = table.alphabet();
  const int blank = alphabet.blank();

  // Paths sharing (collapsed text, last emitted symbol) have identical
  // futures, so their mass is pooled frame by frame.
  using State = std::pair<std::string, int>;
  std::map<State, double> states{{{std::string(), blank}, 1.0}};
  for (Eigen::Index t = 0; t < table.num_frames(); ++t) {
    std::map<State, double> next;
    for (const auto& [state, mass] : states) {
      const auto& [text, last] = state;
      for (int v = 0; v < alphabet.size(); ++v) {
        const double p = static_cast<double>(table.frames()(t, v));
        if (p == 0.0) {
          continue;
        }
        if (v == blank || v == last) {
          next[{text, v}] += mass * p;
        } else {
          next[{text + alphabet.symbol(v), v}] += mass * p;
        }
      }
    }
    if (next.size() > kOracleMaxStates) {
      throw ResourceLimit("oracle enumeration exceeded " +
                          std::to_string(kOracleMaxStates) +
                          " prefix states at frame " + std::to_string(t + 1));
    }
    states = std::move(next);
  }

  std::map<std::string, double> out;
  for (const auto& [state, mass] : states) {
    out[state.first] += mass;
  }
  return out;
}

double fused_objective(const std::string& text, double probability,
                       const LanguageModel* lm, const DecodeParams& params) {
  std::vector<std::string> words;
  std::istringstream in(text);
  for (std::string w; in >> w;) {
    words.push_back(std::move(w));
  }
  double lm_score = 0.0;
  if (lm != nullptr && params.alpha != 0.0) {
    std::vector<std::string> history;
    for (const auto& w : words) {
      lm_score += params.alpha * lm_word_log_prob(lm->model(), history, w,
                                                  params.oov_log10_penalty);
      history.push_back(w);
    }
  }
  return std::log(probability) + lm_score +
         params.beta * std::log(static_cast<double>(words.size()) + 1.0);
}

template <typename Scalar>
OracleResult oracle_best(const BasicPosteriorTable<Scalar>& table,
                         const LanguageModel* lm, const DecodeParams& params) {
  params.validate();
  const auto distribution = enumerate_labelings(table);
  OracleResult best;
  bool first = true;
  // std::map iterates in ascending text order, so strict > keeps the
  // lexicographically smallest among equal scores.
  for (const auto& [text, p] : distribution) {
    const double score = fused_objective(text, p, lm, params);
    if (first || score > best.fused_score) {
      best = OracleResult{Labeling{text}, score, p};
      first = false;
    }
  }
  return best;
}

template std::map<std::string, double> enumerate_labelings(
    const BasicPosteriorTable<double>&);
template std::map<std::string, double> enumerate_labelings(
    const BasicPosteriorTable<float>&);
template OracleResult oracle_best(const BasicPosteriorTable<double>&,
                                  const LanguageModel*, const DecodeParams&);
template OracleResult oracle_best(const BasicPosteriorTable<float>&,
                                  const LanguageModel*, const DecodeParams&);

}  // namespace ctcdecode
