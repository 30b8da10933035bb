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

#ifndef CTCDECODE_TUNING_HPP_
#define CTCDECODE_TUNING_HPP_

#include <span>
#include <string>
#include <vector>

#include "ctcdecode/beam.hpp"
#include "ctcdecode/posterior_table.hpp"

namespace ctcdecode {

struct Grid {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<int> beam_widths;

  // alpha, beta in {0.5, 1, 1.5}; beam width in {50, 100, 150, 200}.
  static Grid standard();
  std::size_t size() const {
    return alphas.size() * betas.size() * beam_widths.size();
  }
  // Throws InvalidParams on an empty axis or a beam width < 1.
  void validate() const;
};

struct DevUtterance {
  PosteriorTable table;
  std::string gold;
};

struct GridRow {
  double alpha = 0.0;
  double beta = 0.0;
  int beam_width = 0;
  double wer = 0.0;
};

struct TuningReport {
  Grid grid;
  std::vector<GridRow> rows;  // alpha-major, then beta, then beam width
  GridRow best;
  DecodeParams best_params;
};

// Decodes every dev utterance at every grid point and picks the lowest
// aggregate WER. Ties prefer the smaller beam width, then smaller alpha, then
// smaller beta. `base` supplies the settings the grid does not cover.
TuningReport grid_search(std::span<const DevUtterance> dev,
                         const LanguageModel* lm, const Grid& grid,
                         const DecodeParams& base = {}, unsigned threads = 1);

}  // namespace ctcdecode

#endif  // CTCDECODE_TUNING_HPP_
