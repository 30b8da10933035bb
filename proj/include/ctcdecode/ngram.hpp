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

#ifndef CTCDECODE_NGRAM_HPP_
#define CTCDECODE_NGRAM_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctcdecode {

inline constexpr double kDefaultOovLog10Penalty = -10.0;
inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";
inline constexpr std::string_view kUnknownWord = "<unk>";

struct NgramEntry {
  double log10_prob = 0.0;
  double log10_backoff = 0.0;

  friend bool operator==(const NgramEntry&, const NgramEntry&) = default;
};

// Backoff n-gram model in ARPA terms. Probabilities stay in log10, exactly as
// read from the file.
class NgramModel {
 public:
  using WordId = std::uint32_t;
  static constexpr WordId kNoWord = ~WordId{0};

  struct Record {
    std::vector<WordId> words;
    NgramEntry entry;
  };

  explicit NgramModel(int order);

  int order() const noexcept { return order_; }

  // Appends an n-gram of length words.size(). Throws InvalidInput when the
  // length exceeds the order, the n-gram is already present, or
  // log10_prob > 0.
  void add(std::span<const std::string> words, NgramEntry entry);

  // Checks that every k-gram's (k-1)-word context is present at order k-1.
  // Returns a description of the first offending n-gram, if any.
  std::optional<std::string> find_broken_backoff_chain() const;

  WordId word_id(std::string_view word) const;
  const std::string& word(WordId id) const { return words_[id]; }
  bool in_vocabulary(std::string_view word) const {
    return word_id(word) != kNoWord;
  }
  // Unigram words in file order, sentinels included.
  const std::vector<std::string>& vocabulary() const noexcept {
    return words_;
  }

  std::optional<NgramEntry> find(std::span<const WordId> ngram) const;
  std::optional<NgramEntry> find(std::span<const std::string> ngram) const;

  // Records of order k (1-based) in insertion order.
  const std::vector<Record>& records(int k) const;
  std::size_t count(int k) const { return records(k).size(); }

  std::optional<WordId> unk_id() const;
  double oov_log10_penalty() const noexcept { return oov_penalty_; }
  void set_oov_log10_penalty(double penalty) noexcept {
    oov_penalty_ = penalty;
  }

  friend bool operator==(const NgramModel& a, const NgramModel& b);

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<WordId>& key) const noexcept;
  };
  WordId intern(const std::string& word);

  int order_;
  double oov_penalty_ = kDefaultOovLog10Penalty;
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> word_ids_;
  std::vector<std::vector<Record>> records_;
  std::unordered_map<std::vector<WordId>, std::size_t, KeyHash> index_;
};

// Reads ARPA text. Throws ParseError carrying the 1-based line number.
NgramModel parse_arpa(std::istream& in);
NgramModel parse_arpa_string(std::string_view text);
NgramModel load_arpa(const std::string& path);

// Writes ARPA text; parse_arpa(serialize_arpa(m)) == m.
void serialize_arpa(const NgramModel& model, std::ostream& out);
std::string serialize_arpa_string(const NgramModel& model);

// log10 p(word | history) with standard backoff. Only the last order-1 words
// of history are consulted. Out-of-vocabulary words score as <unk> when the
// model has it, else as the model's OOV penalty.
double score_word(const NgramModel& model,
                  std::span<const std::string> history, std::string_view word);

// Chain-rule sum of score_word, framed by <s> ... </s> when the model has
// those sentinels.
double score_sentence(const NgramModel& model,
                      std::span<const std::string> words);

// Character trie over the unigram vocabulary, sentinels excluded.
class VocabularyTrie {
 public:
  VocabularyTrie() = default;
  explicit VocabularyTrie(const NgramModel& model);

  void insert(std::string_view word);
  bool is_prefix(std::string_view fragment) const;
  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return num_words_; }

 private:
  struct Node {
    std::vector<std::pair<char, std::uint32_t>> children;  // sorted by char
    bool terminal = false;
  };
  std::optional<std::uint32_t> walk(std::string_view s) const;

  std::vector<Node> nodes_{Node{}};
  std::size_t num_words_ = 0;
};

bool is_sentinel(std::string_view word);

}  // namespace ctcdecode

#endif  // CTCDECODE_NGRAM_HPP_
