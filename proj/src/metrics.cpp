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

#include "ctcdecode/metrics.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ctcdecode/alphabet.hpp"
#include "ctcdecode/error.hpp"

namespace ctcdecode {

namespace {

struct Cell {
  long cost = 0;
  EditOps ops;
};

}  // namespace

// Two-row forward pass. Each cell keeps the counts of the path through its
// preferred predecessor, which is exactly the path a full-matrix traceback
// with the same preference would walk.
template <typename T>
EditOps align(std::span<const T> gold, std::span<const T> hyp) {
  std::vector<Cell> prev(hyp.size() + 1);
  std::vector<Cell> cur(hyp.size() + 1);
  for (std::size_t j = 1; j <= hyp.size(); ++j) {
    prev[j].cost = static_cast<long>(j);
    prev[j].ops.insertions = static_cast<long>(j);
  }
  for (std::size_t i = 1; i <= gold.size(); ++i) {
    cur[0].cost = static_cast<long>(i);
    cur[0].ops = EditOps{0, static_cast<long>(i), 0};
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      const bool same = gold[i - 1] == hyp[j - 1];
      const long diag = prev[j - 1].cost + (same ? 0 : 1);
      const long del = prev[j].cost + 1;
      const long ins = cur[j - 1].cost + 1;
      if (diag <= del && diag <= ins) {
        cur[j].cost = diag;
        cur[j].ops = prev[j - 1].ops;
        if (!same) {
          ++cur[j].ops.substitutions;
        }
      } else if (del <= ins) {
        cur[j].cost = del;
        cur[j].ops = prev[j].ops;
        ++cur[j].ops.deletions;
      } else {
        cur[j].cost = ins;
        cur[j].ops = cur[j - 1].ops;
        ++cur[j].ops.insertions;
      }
    }
    std::swap(prev, cur);
  }
  return prev[hyp.size()].ops;
}

template EditOps align(std::span<const std::string>,
                       std::span<const std::string>);
template EditOps align(std::span<const std::string_view>,
                       std::span<const std::string_view>);

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) {
      ++j;
    }
    if (j > i) {
      words.emplace_back(text.substr(i, j - i));
    }
    i = j;
  }
  return words;
}

EditOps edit_ops(std::string_view gold, std::string_view hypothesis,
                 Granularity granularity) {
  if (granularity == Granularity::kWord) {
    const auto g = split_words(gold);
    const auto h = split_words(hypothesis);
    return align(std::span<const std::string>(g),
                 std::span<const std::string>(h));
  }
  const auto g = utf8_split(gold);
  const auto h = utf8_split(hypothesis);
  return align(std::span<const std::string_view>(g),
               std::span<const std::string_view>(h));
}

double wer(std::span<const std::string> gold,
           std::span<const std::string> hypothesis) {
  if (gold.empty()) {
    return hypothesis.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return static_cast<double>(align(gold, hypothesis).total()) /
         static_cast<double>(gold.size());
}

DeltaWer delta_wer(double baseline_wer, double new_wer) {
  if (!(baseline_wer > 0.0)) {
    throw InvalidInput("relative WER change is undefined for baseline " +
                       std::to_string(baseline_wer));
  }
  const double diff = new_wer - baseline_wer;
  return DeltaWer{diff, 100.0 * diff / baseline_wer};
}

std::vector<std::string> WerReport::single_edit_ids() const {
  std::vector<std::string> ids;
  for (const auto& u : utterances) {
    if (u.char_ops.total() == 1) {
      ids.push_back(u.id);
    }
  }
  return ids;
}

WerReport build_report(std::span<const ScoringPair> pairs) {
  WerReport report;
  report.utterances.reserve(pairs.size());
  for (const auto& pair : pairs) {
    UtteranceScore row;
    row.id = pair.id;
    row.gold = pair.gold;
    row.hypothesis = pair.hypothesis;
    const auto g = split_words(pair.gold);
    const auto h = split_words(pair.hypothesis);
    row.gold_words = static_cast<long>(g.size());
    row.word_ops =
        align(std::span<const std::string>(g), std::span<const std::string>(h));
    row.char_ops = edit_ops(pair.gold, pair.hypothesis, Granularity::kCharacter);
    row.wer = wer(g, h);
    row.empty_reference = g.empty() && !h.empty();

    report.gold_words += row.gold_words;
    report.word_ops += row.word_ops;
    report.char_ops += row.char_ops;
    report.utterances.push_back(std::move(row));
  }
  if (report.gold_words > 0) {
    report.wer = static_cast<double>(report.word_ops.total()) /
                 static_cast<double>(report.gold_words);
  } else {
    report.wer = report.word_ops.total() == 0
                     ? 0.0
                     : std::numeric_limits<double>::infinity();
  }
  return report;
}

OpChange op_change(long baseline, long treatment) {
  OpChange c{baseline, treatment, treatment - baseline, std::nullopt};
  if (baseline != 0) {
    c.percent = 100.0 * static_cast<double>(c.absolute) /
                static_cast<double>(baseline);
  }
  return c;
}

OpsDelta ops_delta_report(const WerReport& baseline,
                          const WerReport& treatment) {
  std::set<std::string> a;
  std::set<std::string> b;
  for (const auto& u : baseline.utterances) {
    a.insert(u.id);
  }
  for (const auto& u : treatment.utterances) {
    b.insert(u.id);
  }
  if (a != b) {
    std::string msg = "utterance ids differ between reports:";
    for (const auto& id : a) {
      if (!b.count(id)) {
        msg += " " + id + " (missing from treatment)";
      }
    }
    for (const auto& id : b) {
      if (!a.count(id)) {
        msg += " " + id + " (missing from baseline)";
      }
    }
    throw InvalidInput(msg);
  }
  return OpsDelta{
      op_change(baseline.char_ops.insertions, treatment.char_ops.insertions),
      op_change(baseline.char_ops.deletions, treatment.char_ops.deletions),
      op_change(baseline.char_ops.substitutions,
                treatment.char_ops.substitutions)};
}

}  // namespace ctcdecode
