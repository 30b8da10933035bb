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

#ifndef CTCDECODE_METRICS_HPP_
#define CTCDECODE_METRICS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctcdecode {

enum class Granularity { kCharacter, kWord };

// Levenshtein operations turning gold into the hypothesis.
struct EditOps {
  long insertions = 0;
  long deletions = 0;
  long substitutions = 0;

  long total() const noexcept { return insertions + deletions + substitutions; }
  EditOps& operator+=(const EditOps& o) noexcept {
    insertions += o.insertions;
    deletions += o.deletions;
    substitutions += o.substitutions;
    return *this;
  }
  friend bool operator==(const EditOps&, const EditOps&) = default;
};

// Counts from a minimal unit-cost alignment. Among minimal alignments the one
// found by preferring substitution (or match), then deletion, then insertion
// at each step back from the end is reported.
template <typename T>
EditOps align(std::span<const T> gold, std::span<const T> hyp);

extern template EditOps align(std::span<const std::string>,
                              std::span<const std::string>);
extern template EditOps align(std::span<const std::string_view>,
                              std::span<const std::string_view>);

// Character granularity works on UTF-8 code points; word granularity splits on
// whitespace. Text is scored as given: no case or punctuation folding.
EditOps edit_ops(std::string_view gold, std::string_view hypothesis,
                 Granularity granularity);

std::vector<std::string> split_words(std::string_view text);

// (ins + del + sub) / |gold|. Empty gold gives 0 for an empty hypothesis and
// +infinity otherwise.
double wer(std::span<const std::string> gold,
           std::span<const std::string> hypothesis);

struct DeltaWer {
  double absolute = 0.0;
  double relative_percent = 0.0;
};

// new - baseline, absolute and as a percentage of the baseline. Throws
// InvalidInput when baseline_wer is not positive.
DeltaWer delta_wer(double baseline_wer, double new_wer);

struct UtteranceScore {
  std::string id;
  std::string gold;
  std::string hypothesis;
  long gold_words = 0;
  EditOps word_ops;
  EditOps char_ops;
  double wer = 0.0;
  bool empty_reference = false;  // gold empty but hypothesis is not
};

struct WerReport {
  std::vector<UtteranceScore> utterances;
  long gold_words = 0;
  EditOps word_ops;
  EditOps char_ops;
  double wer = 0.0;

  // Utterances exactly one character edit away from gold, for manual
  // error-category review.
  std::vector<std::string> single_edit_ids() const;
};

struct ScoringPair {
  std::string id;
  std::string gold;
  std::string hypothesis;
};

WerReport build_report(std::span<const ScoringPair> pairs);

struct OpChange {
  long baseline = 0;
  long treatment = 0;
  long absolute = 0;
  std::optional<double> percent;  // unset when the baseline count is 0
};

struct OpsDelta {
  OpChange insertions;
  OpChange deletions;
  OpChange substitutions;
};

OpChange op_change(long baseline, long treatment);

// Character-level operation changes from baseline to treatment. Both reports
// must cover the same utterance ids; otherwise InvalidInput lists the
// difference.
OpsDelta ops_delta_report(const WerReport& baseline,
                          const WerReport& treatment);

}  // namespace ctcdecode

#endif  // CTCDECODE_METRICS_HPP_
