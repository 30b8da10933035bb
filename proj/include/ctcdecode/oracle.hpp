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

#ifndef CTCDECODE_ORACLE_HPP_
#define CTCDECODE_ORACLE_HPP_

#include <map>
#include <string>

#include "ctcdecode/beam.hpp"
#include "ctcdecode/ctc_core.hpp"

namespace ctcdecode {

inline constexpr Eigen::Index kOracleMaxFrames = 12;
inline constexpr Eigen::Index kOracleMaxSymbols = 6;
// Dense tables near the frame/symbol cap can have tens of millions of
// labelings; enumeration stops with ResourceLimit past this many states.
inline constexpr std::size_t kOracleMaxStates = std::size_t{1} << 22;

// Exact p(labeling | table) for every labeling with non-zero mass, keyed by
// labeling text. Throws ResourceLimit beyond 12 frames or 6 symbols, or when
// the frontier outgrows kOracleMaxStates.
template <typename Scalar>
std::map<std::string, double> enumerate_labelings(
    const BasicPosteriorTable<Scalar>& table);

struct OracleResult {
  Labeling labeling;
  double fused_score = 0.0;
  double probability = 0.0;  // p_ctc(labeling)
};

// Exact maximizer of ln p_ctc + alpha * ln p_lm + beta * ln(words + 1) over
// all labelings; ties go to the lexicographically smallest text.
template <typename Scalar>
OracleResult oracle_best(const BasicPosteriorTable<Scalar>& table,
                         const LanguageModel* lm, const DecodeParams& params);

// The fused objective for one complete labeling.
double fused_objective(const std::string& text, double probability,
                       const LanguageModel* lm, const DecodeParams& params);

extern template std::map<std::string, double> enumerate_labelings(
    const BasicPosteriorTable<double>&);
extern template std::map<std::string, double> enumerate_labelings(
    const BasicPosteriorTable<float>&);
extern template OracleResult oracle_best(const BasicPosteriorTable<double>&,
                                         const LanguageModel*,
                                         const DecodeParams&);
extern template OracleResult oracle_best(const BasicPosteriorTable<float>&,
                                         const LanguageModel*,
                                         const DecodeParams&);

}  // namespace ctcdecode

#endif  // CTCDECODE_ORACLE_HPP_
