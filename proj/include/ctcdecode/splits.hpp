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

#ifndef CTCDECODE_SPLITS_HPP_
#define CTCDECODE_SPLITS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ctcdecode {

struct ManifestRow {
  std::string utterance_id;
  std::string speaker_id;
  std::string accent;
  std::string transcript_path;
  std::string posterior_path;
  // Normalized prompt text. When empty, the stem of transcript_path stands in
  // (ARCTIC prompt files share names across speakers).
  std::string prompt;
};

class Manifest {
 public:
  Manifest() = default;
  // Throws InvalidInput on duplicate ids or empty speaker/accent fields.
  explicit Manifest(std::vector<ManifestRow> rows);

  const std::vector<ManifestRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const ManifestRow* find(std::string_view utterance_id) const;

  std::vector<std::string> accents() const;  // sorted
  std::vector<std::string> speakers() const;  // sorted
  std::vector<std::string> speakers_of(std::string_view accent) const;
  std::optional<std::string> accent_of_speaker(std::string_view speaker) const;

 private:
  std::vector<ManifestRow> rows_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

// Key under which utterances count as "the same utterance" across partitions.
std::string prompt_key(const ManifestRow& row);

// Lowercases ASCII and collapses runs of whitespace.
std::string normalize_prompt(std::string_view text);

enum class Partition { kTrain, kDev, kTest };
std::string_view to_string(Partition p);
std::optional<Partition> partition_from_string(std::string_view s);

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct SplitConfig {
  int strategy = 1;  // 1..5
  SplitRatios ratios;
  std::uint64_t seed = 0;
  // Speaker id for strategies 2 and 5, accent for 3 and 4.
  std::optional<std::string> held_out;
  bool all_folds = false;
};

struct SplitAssignment {
  int strategy = 1;
  int fold = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> held_out_speakers;  // strategies 2, 5
  std::optional<std::string> held_out_accent;  // strategy 3
  std::optional<std::string> accent;           // subset accent, strategies 4, 5
  std::map<std::string, Partition> assignments;
  // Test utterances of held-out speakers (Test-zeroshot); Test itself is
  // Test-all.
  std::set<std::string> test_zeroshot;

  std::size_t count(Partition p) const;
  // "split3-HI", "split2-fold1", ...
  std::string name() const;
};

// Produces one assignment, or one per fold when config.all_folds is set (and
// one per accent for strategy 4 without a held-out accent).
//   1  speaker-dependent, every accent: prompts partitioned by ratio.
//   2  one speaker per accent held out of Train/Dev, tested on Test prompts.
//   3  one accent held out of Train/Dev entirely.
//   4  single accent, split as 1.
//   5  single accent, one of its speakers held out of Train/Dev.
// Prompts are shuffled with Lcg64 seeded by config.seed; Test and Dev get
// floor(ratio * prompts), Train takes the remainder.
std::vector<SplitAssignment> make_split(const Manifest& manifest,
                                        const SplitConfig& config);

struct Violation {
  std::string rule;
  std::vector<std::string> ids;
};

std::vector<Violation> validate_split(const Manifest& manifest,
                                      const SplitAssignment& assignment);

// Portable shuffle generator: 64-bit LCG (Knuth MMIX constants). Fisher-Yates
// draws j = (next() >> 33) % (i + 1) for i = n-1 .. 1.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>((next() >> 33) % i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace ctcdecode

#endif  // CTCDECODE_SPLITS_HPP_
