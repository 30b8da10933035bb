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

#ifndef CTCDECODE_POSTERIOR_TABLE_HPP_
#define CTCDECODE_POSTERIOR_TABLE_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "ctcdecode/alphabet.hpp"
#include "ctcdecode/error.hpp"

namespace ctcdecode {

inline constexpr double kRowSumTolerance = 1e-6;

// T x V table of per-frame symbol probabilities, one row per frame.
template <typename Scalar>
class BasicPosteriorTable {
 public:
  using Matrix =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  // Validates that every row is a probability distribution over `alphabet`.
  BasicPosteriorTable(std::string utterance_id, Matrix frames,
                      std::shared_ptr<const Alphabet> alphabet)
      : id_(std::move(utterance_id)),
        frames_(std::move(frames)),
        alphabet_(std::move(alphabet)) {
    validate();
  }

  // Builds a table from unnormalized scores with a per-frame softmax.
  static BasicPosteriorTable from_logits(
      std::string utterance_id, const Matrix& logits,
      std::shared_ptr<const Alphabet> alphabet) {
    Matrix probs = logits;
    for (Eigen::Index t = 0; t < probs.rows(); ++t) {
      auto row = probs.row(t);
      if (!row.allFinite()) {
        throw InvalidInput("non-finite logit in frame " + std::to_string(t));
      }
      row.array() = (row.array() - row.maxCoeff()).exp();
      row /= row.sum();
    }
    return BasicPosteriorTable(std::move(utterance_id), std::move(probs),
                               std::move(alphabet));
  }

  const std::string& utterance_id() const noexcept { return id_; }
  const Matrix& frames() const noexcept { return frames_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const noexcept {
    return alphabet_;
  }
  Eigen::Index num_frames() const noexcept { return frames_.rows(); }
  Eigen::Index num_symbols() const noexcept { return frames_.cols(); }

 private:
  void validate() const {
    if (!alphabet_) {
      throw InvalidInput("posterior table without alphabet");
    }
    if (frames_.rows() < 1) {
      throw InvalidInput("posterior table '" + id_ + "' has no frames");
    }
    if (frames_.cols() != alphabet_->size()) {
      throw InvalidInput("posterior table '" + id_ + "' has width " +
                         std::to_string(frames_.cols()) +
                         ", alphabet has " +
                         std::to_string(alphabet_->size()) + " symbols");
    }
    for (Eigen::Index t = 0; t < frames_.rows(); ++t) {
      double sum = 0.0;
      for (Eigen::Index v = 0; v < frames_.cols(); ++v) {
        const double p = static_cast<double>(frames_(t, v));
        if (!(p >= 0.0 && p <= 1.0)) {
          throw InvalidInput("posterior table '" + id_ + "' frame " +
                             std::to_string(t) +
                             " has a value outside [0,1]");
        }
        sum += p;
      }
      if (std::abs(sum - 1.0) > kRowSumTolerance) {
        throw InvalidInput("posterior table '" + id_ + "' frame " +
                           std::to_string(t) + " sums to " +
                           std::to_string(sum));
      }
    }
  }

  std::string id_;
  Matrix frames_;
  std::shared_ptr<const Alphabet> alphabet_;
};

using PosteriorTable = BasicPosteriorTable<double>;
using PosteriorTableF = BasicPosteriorTable<float>;

}  // namespace ctcdecode

#endif  // CTCDECODE_POSTERIOR_TABLE_HPP_
