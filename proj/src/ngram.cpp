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

#include "ctcdecode/ngram.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ctcdecode/error.hpp"

namespace ctcdecode {

bool is_sentinel(std::string_view word) {
  return word == kSentenceStart || word == kSentenceEnd || word == kUnknownWord;
}

NgramModel::NgramModel(int order) : order_(order) {
  if (order < 1) {
    throw InvalidInput("n-gram order must be >= 1");
  }
  records_.resize(static_cast<std::size_t>(order));
}

std::size_t NgramModel::KeyHash::operator()(
    const std::vector<WordId>& key) const noexcept {
  // FNV-1a over the ids.
  std::size_t h = 1469598103934665603ULL;
  for (WordId w : key) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return h;
}

NgramModel::WordId NgramModel::intern(const std::string& word) {
  auto [it, inserted] =
      word_ids_.emplace(word, static_cast<WordId>(words_.size()));
  if (inserted) {
    words_.push_back(word);
  }
  return it->second;
}

NgramModel::WordId NgramModel::word_id(std::string_view word) const {
  auto it = word_ids_.find(std::string(word));
  return it == word_ids_.end() ? kNoWord : it->second;
}

void NgramModel::add(std::span<const std::string> words, NgramEntry entry) {
  if (words.empty() || words.size() > static_cast<std::size_t>(order_)) {
    throw InvalidInput("n-gram length " + std::to_string(words.size()) +
                       " does not fit order " + std::to_string(order_));
  }
  if (!(entry.log10_prob <= 0.0)) {
    throw InvalidInput("log10 probability must be <= 0");
  }
  if (words.size() == 1 && word_ids_.count(words[0]) != 0) {
    throw InvalidInput("duplicate unigram '" + words[0] + "'");
  }
  std::vector<WordId> key;
  key.reserve(words.size());
  for (const auto& w : words) {
    if (words.size() == 1) {
      key.push_back(intern(w));
    } else {
      const WordId id = word_id(w);
      if (id == kNoWord) {
        throw InvalidInput("word '" + w + "' is not a unigram");
      }
      key.push_back(id);
    }
  }
  auto& bucket = records_[words.size() - 1];
  if (!index_.emplace(key, bucket.size()).second) {
    throw InvalidInput("duplicate n-gram");
  }
  bucket.push_back(Record{std::move(key), entry});
}

std::optional<std::string> NgramModel::find_broken_backoff_chain() const {
  for (int k = 2; k <= order_; ++k) {
    for (const auto& rec : records(k)) {
      std::span<const WordId> context(rec.words.data(), rec.words.size() - 1);
      if (!find(context)) {
        std::string text;
        for (WordId w : rec.words) {
          text += (text.empty() ? "" : " ") + words_[w];
        }
        return "n-gram '" + text + "' has no lower-order context entry";
      }
    }
  }
  return std::nullopt;
}

std::optional<NgramEntry> NgramModel::find(
    std::span<const WordId> ngram) const {
  if (ngram.empty() || ngram.size() > static_cast<std::size_t>(order_)) {
    return std::nullopt;
  }
  auto it = index_.find(std::vector<WordId>(ngram.begin(), ngram.end()));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return records_[ngram.size() - 1][it->second].entry;
}

std::optional<NgramEntry> NgramModel::find(
    std::span<const std::string> ngram) const {
  std::vector<WordId> key;
  for (const auto& w : ngram) {
    const WordId id = word_id(w);
    if (id == kNoWord) {
      return std::nullopt;
    }
    key.push_back(id);
  }
  return find(std::span<const WordId>(key));
}

const std::vector<NgramModel::Record>& NgramModel::records(int k) const {
  if (k < 1 || k > order_) {
    throw InvalidInput("order " + std::to_string(k) + " out of range");
  }
  return records_[static_cast<std::size_t>(k - 1)];
}

std::optional<NgramModel::WordId> NgramModel::unk_id() const {
  const WordId id = word_id(kUnknownWord);
  if (id == kNoWord) {
    return std::nullopt;
  }
  return id;
}

bool operator==(const NgramModel& a, const NgramModel& b) {
  if (a.order_ != b.order_) {
    return false;
  }
  for (int k = 1; k <= a.order_; ++k) {
    if (a.count(k) != b.count(k)) {
      return false;
    }
    for (const auto& rec : a.records(k)) {
      std::vector<std::string> words;
      for (auto w : rec.words) {
        words.push_back(a.word(w));
      }
      auto other = b.find(std::span<const std::string>(words));
      if (!other || !(*other == rec.entry)) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ARPA reading

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<long> parse_long(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

// "\3-grams:" -> 3
std::optional<int> section_order(std::string_view line) {
  if (line.size() < 9 || line.front() != '\\' ||
      !line.ends_with("-grams:")) {
    return std::nullopt;
  }
  auto n = parse_long(line.substr(1, line.size() - 8));
  if (!n || *n < 1) {
    return std::nullopt;
  }
  return static_cast<int>(*n);
}

}  // namespace

NgramModel parse_arpa(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;

  auto next_line = [&]() -> std::optional<std::string_view> {
    while (std::getline(in, raw)) {
      ++lineno;
      auto line = trim(raw);
      if (!line.empty()) {
        return line;
      }
    }
    return std::nullopt;
  };

  auto line = next_line();
  if (!line || *line != "\\data\\") {
    throw ParseError(lineno, "expected \\data\\ header");
  }

  std::vector<long> counts;
  for (line = next_line(); line && line->starts_with("ngram");
       line = next_line()) {
    const auto eq = line->find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(lineno, "malformed ngram count line");
    }
    auto k = parse_long(trim(line->substr(5, eq - 5)));
    auto c = parse_long(trim(line->substr(eq + 1)));
    if (!k || !c || *c < 0 ||
        *k != static_cast<long>(counts.size()) + 1) {
      throw ParseError(lineno, "malformed ngram count line");
    }
    counts.push_back(*c);
  }
  if (counts.empty()) {
    throw ParseError(lineno, "\\data\\ section declares no n-gram orders");
  }

  NgramModel model(static_cast<int>(counts.size()));
  int expected_section = 1;
  while (line && *line != "\\end\\") {
    const auto k = section_order(*line);
    if (!k) {
      throw ParseError(lineno, "expected \\" +
                                   std::to_string(expected_section) +
                                   "-grams: section");
    }
    if (*k != expected_section || *k > model.order()) {
      throw ParseError(lineno, "unexpected section \\" + std::to_string(*k) +
                                   "-grams:");
    }
    const std::size_t section_line = lineno;
    const auto n = static_cast<std::size_t>(*k);
    long seen = 0;
    std::vector<std::string> words(n);
    for (line = next_line(); line && !line->starts_with("\\");
         line = next_line()) {
      const auto f = fields(*line);
      const bool has_backoff = f.size() == n + 2;
      if (f.size() != n + 1 && !has_backoff) {
        throw ParseError(lineno, "malformed " + std::to_string(n) +
                                     "-gram line");
      }
      if (has_backoff && *k == model.order()) {
        throw ParseError(lineno, "backoff weight on highest-order n-gram");
      }
      auto prob = parse_double(f[0]);
      std::optional<double> backoff = 0.0;
      if (has_backoff) {
        backoff = parse_double(f[n + 1]);
      }
      if (!prob || !backoff) {
        throw ParseError(lineno, "malformed number in " + std::to_string(n) +
                                     "-gram line");
      }
      for (std::size_t i = 0; i < n; ++i) {
        words[i] = std::string(f[i + 1]);
      }
      try {
        model.add(words, NgramEntry{*prob, *backoff});
      } catch (const InvalidInput& e) {
        throw ParseError(lineno, e.what());
      }
      ++seen;
    }
    if (seen != counts[n - 1]) {
      throw ParseError(section_line,
                       "section \\" + std::to_string(n) + "-grams: has " +
                           std::to_string(seen) + " entries, header says " +
                           std::to_string(counts[n - 1]));
    }
    ++expected_section;
  }
  if (!line) {
    throw ParseError(lineno, "missing \\end\\");
  }
  if (expected_section <= model.order()) {
    throw ParseError(lineno, "missing \\" + std::to_string(expected_section) +
                                 "-grams: section");
  }
  if (auto broken = model.find_broken_backoff_chain()) {
    throw ParseError(lineno, *broken);
  }
  return model;
}

NgramModel parse_arpa_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_arpa(in);
}

NgramModel load_arpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open ARPA file '" + path + "'");
  }
  return parse_arpa(in);
}

// ---------------------------------------------------------------------------
// ARPA writing

namespace {

void write_number(std::ostream& out, double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.write(buf, ptr - buf);
}

}  // namespace

void serialize_arpa(const NgramModel& model, std::ostream& out) {
  out << "\\data\\\n";
  for (int k = 1; k <= model.order(); ++k) {
    out << "ngram " << k << '=' << model.count(k) << '\n';
  }
  for (int k = 1; k <= model.order(); ++k) {
    out << "\n\\" << k << "-grams:\n";
    for (const auto& rec : model.records(k)) {
      write_number(out, rec.entry.log10_prob);
      for (auto w : rec.words) {
        out << '\t' << model.word(w);
      }
      if (k < model.order()) {
        out << '\t';
        write_number(out, rec.entry.log10_backoff);
      }
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

std::string serialize_arpa_string(const NgramModel& model) {
  std::ostringstream out;
  serialize_arpa(model, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// Scoring

double score_word(const NgramModel& model,
                  std::span<const std::string> history,
                  std::string_view word) {
  using WordId = NgramModel::WordId;
  WordId w = model.word_id(word);
  if (w == NgramModel::kNoWord) {
    auto unk = model.unk_id();
    if (!unk) {
      return model.oov_log10_penalty();
    }
    w = *unk;
  }
  const std::size_t ctx_len = std::min<std::size_t>(
      history.size(), static_cast<std::size_t>(model.order() - 1));
  std::vector<WordId> key;
  key.reserve(ctx_len + 1);
  for (std::size_t i = history.size() - ctx_len; i < history.size(); ++i) {
    key.push_back(model.word_id(history[i]));
  }
  key.push_back(w);

  double backoff = 0.0;
  for (std::size_t start = 0; start <= ctx_len; ++start) {
    std::span<const WordId> ngram(key.data() + start, key.size() - start);
    if (auto e = model.find(ngram)) {
      return backoff + e->log10_prob;
    }
    if (auto ctx = model.find(ngram.first(ngram.size() - 1))) {
      backoff += ctx->log10_backoff;
    }
  }
  // Unreachable for in-vocabulary words: the unigram always exists.
  return backoff + model.oov_log10_penalty();
}

double score_sentence(const NgramModel& model,
                      std::span<const std::string> words) {
  std::vector<std::string> history;
  if (model.in_vocabulary(kSentenceStart)) {
    history.emplace_back(kSentenceStart);
  }
  double total = 0.0;
  for (const auto& w : words) {
    total += score_word(model, history, w);
    history.push_back(w);
  }
  if (model.in_vocabulary(kSentenceEnd)) {
    total += score_word(model, history, kSentenceEnd);
  }
  return total;
}

}  // namespace ctcdecode
