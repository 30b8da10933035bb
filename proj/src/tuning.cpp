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

#include "ctcdecode/tuning.hpp"

#include <tuple>

#include "ctcdecode/error.hpp"
#include "ctcdecode/metrics.hpp"
#include "ctcdecode/parallel.hpp"

namespace ctcdecode {

Grid Grid::standard() {
  return Grid{{0.5, 1.0, 1.5}, {0.5, 1.0, 1.5}, {50, 100, 150, 200}};
}

void Grid::validate() const {
  if (alphas.empty() || betas.empty() || beam_widths.empty()) {
    throw InvalidParams("every grid axis needs at least one value");
  }
  for (int k : beam_widths) {
    if (k < 1) {
      throw InvalidParams("grid beam widths must be >= 1");
    }
  }
  for (double a : alphas) {
    if (!(a >= 0.0)) {
      throw InvalidParams("grid alphas must be >= 0");
    }
  }
}

TuningReport grid_search(std::span<const DevUtterance> dev,
                         const LanguageModel* lm, const Grid& grid,
                         const DecodeParams& base, unsigned threads) {
  grid.validate();
  if (dev.empty()) {
    throw InvalidInput("grid search needs a non-empty dev set");
  }

  TuningReport report;
  report.grid = grid;
  std::vector<ScoringPair> pairs(dev.size());
  for (double alpha : grid.alphas) {
    for (double beta : grid.betas) {
      for (int width : grid.beam_widths) {
        DecodeParams params = base;
        params.alpha = alpha;
        params.beta = beta;
        params.beam_width = width;
        params.validate();
        parallel_for(dev.size(), threads, [&](std::size_t i) {
          const auto results = beam_decode(dev[i].table, lm, params);
          pairs[i] = ScoringPair{dev[i].table.utterance_id(), dev[i].gold,
                                 results.empty() ? std::string()
                                                 : results.front().labeling.text};
        });
        report.rows.push_back(
            GridRow{alpha, beta, width, build_report(pairs).wer});
      }
    }
  }

  auto key = [](const GridRow& r) {
    return std::make_tuple(r.wer, r.beam_width, r.alpha, r.beta);
  };
  report.best = report.rows.front();
  for (const auto& row : report.rows) {
    if (key(row) < key(report.best)) {
      report.best = row;
    }
  }
  report.best_params = base;
  report.best_params.alpha = report.best.alpha;
  report.best_params.beta = report.best.beta;
  report.best_params.beam_width = report.best.beam_width;
  return report;
}

}  // namespace ctcdecode
