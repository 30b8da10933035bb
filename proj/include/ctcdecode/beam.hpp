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

#ifndef CTCDECODE_BEAM_HPP_
#define CTCDECODE_BEAM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctcdecode/alphabet.hpp"
#include "ctcdecode/ngram.hpp"
#include "ctcdecode/posterior_table.hpp"

namespace ctcdecode {

struct DecodeParams {
  double alpha = 1.0;  // LM weight
  double beta = 1.5;   // word-insertion weight
  int beam_width = 200;
  // Natural-log penalty for hypotheses whose trailing fragment is not a prefix
  // of any vocabulary word. 0 disables.
  double partial_word_penalty = -1.0;
  // log10 score for out-of-vocabulary words when the model has no <unk>.
  // Unset means the model's own penalty.
  std::optional<double> oov_log10_penalty;
  // Memoize LM queries within one decode call. No effect on results.
  bool use_cache = true;

  // Throws InvalidParams unless beam_width >= 1 and alpha >= 0.
  void validate() const;
};

enum class CorpusProfile { kAccentedDev, kCleanRead };

// Tuned (alpha, beta, beam_width) per corpus: accented L2 speech uses
// (1.0, 1.5, 200); clean read L1 speech uses (0.5, 0.5, 100).
DecodeParams default_params(CorpusProfile profile);

// An immutable n-gram model together with its vocabulary trie. Safe to share
// across concurrent decodes.
class LanguageModel {
 public:
  explicit LanguageModel(NgramModel model)
      : model_(std::move(model)), trie_(model_) {}

  const NgramModel& model() const noexcept { return model_; }
  const VocabularyTrie& trie() const noexcept { return trie_; }

 private:
  NgramModel model_;
  VocabularyTrie trie_;
};

struct PrefixHypothesis {
  std::string prefix;
  double log_p_blank = 0.0;
  double log_p_nonblank = 0.0;
  // alpha-weighted natural-log LM score over completed words.
  double lm_log_score = 0.0;
  int word_count = 0;

  int last_symbol = -1;            // -1 for the empty prefix
  std::string fragment;            // trailing unfinished word
  std::vector<std::string> words;  // completed words, oldest first
  bool fragment_in_vocabulary = true;

  double acoustic_log_prob() const;
};

// Ranking score of a hypothesis mid-search:
//   (p_b (+) p_nb) + lm + beta * ln(word_count + 1) [+ partial-word penalty]
double fused_score(const PrefixHypothesis& hyp, const DecodeParams& params);

struct DecodeResult {
  Labeling labeling;
  double score = 0.0;             // fused natural-log score
  double acoustic_log_prob = 0.0;  // ln p_ctc(labeling) over surviving paths
  double lm_log_score = 0.0;       // alpha-weighted
  int word_count = 0;
};

// Prefix beam search with shallow LM fusion. Returns up to beam_width
// hypotheses ranked by fused score, ties broken by ascending prefix text.
// Without a language model alpha and the partial-word penalty are inert.
template <typename Scalar>
std::vector<DecodeResult> beam_decode(const BasicPosteriorTable<Scalar>& table,
                                      const LanguageModel* lm,
                                      const DecodeParams& params);

template <typename Scalar>
std::vector<DecodeResult> beam_decode(const BasicPosteriorTable<Scalar>& table,
                                      const DecodeParams& params) {
  return beam_decode(table, nullptr, params);
}

// Natural-log LM contribution of appending `word` after `history` (completed
// words, oldest first), before the alpha weight. <s> is prepended when the
// model has it. Shared by the beam decoder and the exhaustive oracle.
double lm_word_log_prob(const NgramModel& model,
                        const std::vector<std::string>& history,
                        const std::string& word,
                        std::optional<double> oov_log10_penalty);

extern template std::vector<DecodeResult> beam_decode(
    const BasicPosteriorTable<double>&, const LanguageModel*,
    const DecodeParams&);
extern template std::vector<DecodeResult> beam_decode(
    const BasicPosteriorTable<float>&, const LanguageModel*,
    const DecodeParams&);

}  // namespace ctcdecode

#endif  // CTCDECODE_BEAM_HPP_
