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

#include "ctcdecode/ctc_core.hpp"

#include <string>

#include "ctcdecode/error.hpp"

namespace ctcdecode {

Labeling collapse(std::span<const int> path, const Alphabet& alphabet) {
  Labeling out;
  int prev = -1;
  for (int s : path) {
    if (!alphabet.valid(s)) {
      throw InvalidInput("path symbol " + std::to_string(s) +
                         " out of range");
    }
    if (s != prev && s != alphabet.blank()) {
      out.text += alphabet.symbol(s);
    }
    prev = s;
  }
  return out;
}

template <typename Scalar>
BestPath best_path_decode(const BasicPosteriorTable<Scalar>& table) {
  BestPath result;
  result.path = argmax_path(table.frames());
  result.labeling = collapse(result.path, table.alphabet());
  result.path_probability = 1.0;
  for (std::size_t t = 0; t < result.path.size(); ++t) {
    result.path_probability *= static_cast<double>(
        table.frames()(static_cast<Eigen::Index>(t), result.path[t]));
  }
  return result;
}

namespace {

// Depth-first walk over frame paths, pruned to those whose running collapse
// is still a prefix of the target.
template <typename Matrix>
double sum_paths(const Matrix& frames, std::span<const int> target, int blank,
                 Eigen::Index t, std::size_t emitted, int last) {
  if (t == frames.rows()) {
    return emitted == target.size() ? 1.0 : 0.0;
  }
  double total = 0.0;
  for (Eigen::Index v = 0; v < frames.cols(); ++v) {
    const double p = static_cast<double>(frames(t, v));
    if (p == 0.0) {
      continue;
    }
    const int s = static_cast<int>(v);
    if (s == blank) {
      total += p * sum_paths(frames, target, blank, t + 1, emitted, blank);
    } else if (s == last) {
      total += p * sum_paths(frames, target, blank, t + 1, emitted, s);
    } else if (emitted < target.size() && target[emitted] == s) {
      total += p * sum_paths(frames, target, blank, t + 1, emitted + 1, s);
    }
  }
  return total;
}

}  // namespace

template <typename Scalar>
double labeling_probability(const BasicPosteriorTable<Scalar>& table,
                            const Labeling& labeling,
                            Eigen::Index max_frames) {
  if (table.num_frames() > max_frames) {
    throw ResourceLimit("exhaustive labeling probability is capped at " +
                        std::to_string(max_frames) + " frames, table has " +
                        std::to_string(table.num_frames()) +
                        "; use beam_decode for long inputs");
  }
  const auto target = table.alphabet().encode(labeling.text);
  return sum_paths(table.frames(), std::span<const int>(target),
                   table.alphabet().blank(), 0, 0, table.alphabet().blank());
}

template BestPath best_path_decode(const BasicPosteriorTable<double>&);
template BestPath best_path_decode(const BasicPosteriorTable<float>&);
template double labeling_probability(const BasicPosteriorTable<double>&,
                                     const Labeling&, Eigen::Index);
template double labeling_probability(const BasicPosteriorTable<float>&,
                                     const Labeling&, Eigen::Index);

}  // namespace ctcdecode
