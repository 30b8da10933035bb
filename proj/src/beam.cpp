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

#include "ctcdecode/beam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "ctcdecode/error.hpp"

namespace ctcdecode {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) {
    return b;
  }
  if (b == kNegInf) {
    return a;
  }
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// Memoizes natural-log LM word scores for one decode call.
class LmScorer {
 public:
  LmScorer(const LanguageModel* lm, const DecodeParams& params)
      : lm_(lm), params_(params) {}

  bool active() const { return lm_ != nullptr && params_.alpha != 0.0; }

  double weighted(const std::vector<std::string>& history,
                  const std::string& word) {
    if (!params_.use_cache) {
      return params_.alpha * lm_word_log_prob(lm_->model(), history, word,
                                              params_.oov_log10_penalty);
    }
    key_.clear();
    const auto keep = static_cast<std::size_t>(lm_->model().order() - 1);
    const std::size_t first = history.size() > keep ? history.size() - keep : 0;
    for (std::size_t i = first; i < history.size(); ++i) {
      key_ += history[i];
      key_ += '\x1f';
    }
    key_ += '\x1e';
    key_ += word;
    auto it = cache_.find(key_);
    if (it == cache_.end()) {
      it = cache_
               .emplace(key_, params_.alpha *
                                  lm_word_log_prob(lm_->model(), history, word,
                                                   params_.oov_log10_penalty))
               .first;
    }
    return it->second;
  }

 private:
  const LanguageModel* lm_;
  const DecodeParams& params_;
  std::string key_;
  std::unordered_map<std::string, double> cache_;
};

struct Ranked {
  double score;
  PrefixHypothesis* hyp;
};

bool better(const Ranked& a, const Ranked& b) {
  if (a.score != b.score) {
    return a.score > b.score;
  }
  return a.hyp->prefix < b.hyp->prefix;
}

}  // namespace

void DecodeParams::validate() const {
  if (beam_width < 1) {
    throw InvalidParams("beam_width must be >= 1");
  }
  if (!(alpha >= 0.0)) {
    throw InvalidParams("alpha must be >= 0");
  }
  if (!std::isfinite(beta) || !std::isfinite(partial_word_penalty)) {
    throw InvalidParams("beta and partial_word_penalty must be finite");
  }
}

DecodeParams default_params(CorpusProfile profile) {
  DecodeParams p;
  switch (profile) {
    case CorpusProfile::kAccentedDev:
      p.alpha = 1.0;
      p.beta = 1.5;
      p.beam_width = 200;
      break;
    case CorpusProfile::kCleanRead:
      p.alpha = 0.5;
      p.beta = 0.5;
      p.beam_width = 100;
      break;
  }
  return p;
}

double PrefixHypothesis::acoustic_log_prob() const {
  return log_add(log_p_blank, log_p_nonblank);
}

double fused_score(const PrefixHypothesis& hyp, const DecodeParams& params) {
  double score = hyp.acoustic_log_prob() + hyp.lm_log_score +
                 params.beta * std::log(hyp.word_count + 1.0);
  if (!hyp.fragment_in_vocabulary) {
    score += params.partial_word_penalty;
  }
  return score;
}

double lm_word_log_prob(const NgramModel& model,
                        const std::vector<std::string>& history,
                        const std::string& word,
                        std::optional<double> oov_log10_penalty) {
  double log10_p;
  if (oov_log10_penalty && !model.in_vocabulary(word) && !model.unk_id()) {
    log10_p = *oov_log10_penalty;
  } else {
    const auto keep = static_cast<std::size_t>(model.order() - 1);
    std::vector<std::string> context;
    const bool with_start = model.in_vocabulary(kSentenceStart);
    if (with_start && history.size() < keep) {
      context.emplace_back(kSentenceStart);
    }
    const std::size_t first = history.size() > keep ? history.size() - keep : 0;
    context.insert(context.end(),
                   history.begin() + static_cast<std::ptrdiff_t>(first),
                   history.end());
    log10_p = score_word(model, context, word);
  }
  return log10_p * std::numbers::ln10;
}

template <typename Scalar>
std::vector<DecodeResult> beam_decode(const BasicPosteriorTable<Scalar>& table,
                                      const LanguageModel* lm,
                                      const DecodeParams& params) {
  params.validate();
  const Alphabet& alphabet = table.alphabet();
  const int blank = alphabet.blank();
  const int space = alphabet.space();
  const auto width = static_cast<std::size_t>(params.beam_width);
  const bool use_trie = lm != nullptr && params.partial_word_penalty != 0.0;
  LmScorer scorer(lm, params);

  std::vector<PrefixHypothesis> beam(1);
  beam[0].log_p_blank = 0.0;
  beam[0].log_p_nonblank = kNegInf;

  std::unordered_map<std::string, PrefixHypothesis> next;
  std::vector<double> log_probs(static_cast<std::size_t>(alphabet.size()));

  // Looks up or creates the candidate `parent.prefix + symbol`.
  auto extend = [&](const PrefixHypothesis& parent,
                    int symbol) -> PrefixHypothesis& {
    std::string prefix = parent.prefix + alphabet.symbol(symbol);
    auto it = next.find(prefix);
    if (it != next.end()) {
      return it->second;
    }
    PrefixHypothesis child;
    child.prefix = std::move(prefix);
    child.log_p_blank = kNegInf;
    child.log_p_nonblank = kNegInf;
    child.lm_log_score = parent.lm_log_score;
    child.word_count = parent.word_count;
    child.last_symbol = symbol;
    child.words = parent.words;
    if (symbol == space) {
      if (!parent.fragment.empty()) {
        if (scorer.active()) {
          child.lm_log_score += scorer.weighted(parent.words, parent.fragment);
        }
        child.words.push_back(parent.fragment);
        ++child.word_count;
      }
    } else {
      child.fragment = parent.fragment + alphabet.symbol(symbol);
      if (use_trie) {
        child.fragment_in_vocabulary = lm->trie().is_prefix(child.fragment);
      }
    }
    auto key = child.prefix;
    return next.emplace(std::move(key), std::move(child)).first->second;
  };

  // Looks up or copies `hyp` unchanged into the next frame.
  auto stay = [&](const PrefixHypothesis& hyp) -> PrefixHypothesis& {
    auto it = next.find(hyp.prefix);
    if (it != next.end()) {
      return it->second;
    }
    PrefixHypothesis copy = hyp;
    copy.log_p_blank = kNegInf;
    copy.log_p_nonblank = kNegInf;
    return next.emplace(hyp.prefix, std::move(copy)).first->second;
  };

  std::vector<Ranked> ranked;
  for (Eigen::Index t = 0; t < table.num_frames(); ++t) {
    for (int v = 0; v < alphabet.size(); ++v) {
      log_probs[static_cast<std::size_t>(v)] =
          std::log(static_cast<double>(table.frames()(t, v)));
    }
    next.clear();
    for (const auto& hyp : beam) {
      const double total = hyp.acoustic_log_prob();
      for (int v = 0; v < alphabet.size(); ++v) {
        const double y = log_probs[static_cast<std::size_t>(v)];
        if (y == kNegInf) {
          continue;
        }
        if (v == blank) {
          auto& h = stay(hyp);
          h.log_p_blank = log_add(h.log_p_blank, total + y);
        } else if (v == hyp.last_symbol) {
          // A repeat collapses into the same prefix unless a blank separated
          // the two emissions.
          auto& same = stay(hyp);
          same.log_p_nonblank =
              log_add(same.log_p_nonblank, hyp.log_p_nonblank + y);
          if (hyp.log_p_blank != kNegInf) {
            auto& longer = extend(hyp, v);
            longer.log_p_nonblank =
                log_add(longer.log_p_nonblank, hyp.log_p_blank + y);
          }
        } else {
          auto& longer = extend(hyp, v);
          longer.log_p_nonblank = log_add(longer.log_p_nonblank, total + y);
        }
      }
    }

    ranked.clear();
    ranked.reserve(next.size());
    for (auto& [prefix, hyp] : next) {
      ranked.push_back({fused_score(hyp, params), &hyp});
    }
    const std::size_t keep = std::min(width, ranked.size());
    std::partial_sort(ranked.begin(),
                      ranked.begin() + static_cast<std::ptrdiff_t>(keep),
                      ranked.end(), better);
    std::vector<PrefixHypothesis> pruned;
    pruned.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
      pruned.push_back(std::move(*ranked[i].hyp));
    }
    beam = std::move(pruned);
  }

  // The trailing fragment is scored as a complete word.
  for (auto& hyp : beam) {
    if (!hyp.fragment.empty()) {
      if (scorer.active()) {
        hyp.lm_log_score += scorer.weighted(hyp.words, hyp.fragment);
      }
      hyp.words.push_back(hyp.fragment);
      hyp.fragment.clear();
      ++hyp.word_count;
    }
    hyp.fragment_in_vocabulary = true;
  }

  std::vector<DecodeResult> results;
  results.reserve(beam.size());
  for (const auto& hyp : beam) {
    results.push_back(DecodeResult{Labeling{hyp.prefix},
                                   fused_score(hyp, params),
                                   hyp.acoustic_log_prob(), hyp.lm_log_score,
                                   hyp.word_count});
  }
  std::sort(results.begin(), results.end(),
            [](const DecodeResult& a, const DecodeResult& b) {
              if (a.score != b.score) {
                return a.score > b.score;
              }
              return a.labeling.text < b.labeling.text;
            });
  return results;
}

template std::vector<DecodeResult> beam_decode(
    const BasicPosteriorTable<double>&, const LanguageModel*,
    const DecodeParams&);
template std::vector<DecodeResult> beam_decode(
    const BasicPosteriorTable<float>&, const LanguageModel*,
    const DecodeParams&);

}  // namespace ctcdecode
