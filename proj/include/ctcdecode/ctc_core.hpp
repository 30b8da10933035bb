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

#ifndef CTCDECODE_CTC_CORE_HPP_
#define CTCDECODE_CTC_CORE_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "ctcdecode/alphabet.hpp"
#include "ctcdecode/posterior_table.hpp"

namespace ctcdecode {

inline constexpr Eigen::Index kDefaultEnumerationCap = 12;

// Merges adjacent duplicates, then drops blanks.
Labeling collapse(std::span<const int> path, const Alphabet& alphabet);

// Per-row argmax; ties go to the lowest column index.
template <typename Derived>
std::vector<int> argmax_path(const Eigen::MatrixBase<Derived>& frames) {
  std::vector<int> path(static_cast<std::size_t>(frames.rows()));
  for (Eigen::Index t = 0; t < frames.rows(); ++t) {
    Eigen::Index best = 0;
    for (Eigen::Index v = 1; v < frames.cols(); ++v) {
      if (frames(t, v) > frames(t, best)) {
        best = v;
      }
    }
    path[static_cast<std::size_t>(t)] = static_cast<int>(best);
  }
  return path;
}

struct BestPath {
  Labeling labeling;
  double path_probability = 0.0;
  std::vector<int> path;
};

template <typename Scalar>
BestPath best_path_decode(const BasicPosteriorTable<Scalar>& table);

// Exact p(labeling | table) by enumerating every frame path that collapses to
// `labeling`. Refuses tables longer than `max_frames` with ResourceLimit.
template <typename Scalar>
double labeling_probability(const BasicPosteriorTable<Scalar>& table,
                            const Labeling& labeling,
                            Eigen::Index max_frames = kDefaultEnumerationCap);

extern template BestPath best_path_decode(const BasicPosteriorTable<double>&);
extern template BestPath best_path_decode(const BasicPosteriorTable<float>&);
extern template double labeling_probability(const BasicPosteriorTable<double>&,
                                            const Labeling&, Eigen::Index);
extern template double labeling_probability(const BasicPosteriorTable<float>&,
                                            const Labeling&, Eigen::Index);

}  // namespace ctcdecode

#endif  // CTCDECODE_CTC_CORE_HPP_
