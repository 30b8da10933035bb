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

// Synthetic corpora: an accented-speaker manifest and a dev set on which the
// language model is needed to recover the right spelling.

#ifndef CTCDECODE_TESTS_SYNTHETIC_HPP_
#define CTCDECODE_TESTS_SYNTHETIC_HPP_

#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ctcdecode/alphabet.hpp"
#include "ctcdecode/ngram.hpp"
#include "ctcdecode/posterior_table.hpp"
#include "ctcdecode/splits.hpp"

namespace ctcdecode::testing {

struct AccentGroup {
  const char* accent;
  std::vector<const char*> speakers;
};

// Six accents, four speakers each.
inline const std::vector<AccentGroup>& accent_groups() {
  static const std::vector<AccentGroup> groups = {
      {"AR", {"ABA", "SKA", "YBAA", "ZHAA"}},
      {"ES", {"EBVS", "ERMS", "MBMPS", "NJS"}},
      {"HI", {"ASI", "RRBI", "SVBI", "TNI"}},
      {"KO", {"HJK", "HKK", "YDCK", "YKWK"}},
      {"VI", {"HQTV", "PNV", "THV", "TLV"}},
      {"ZH", {"BWC", "LXC", "NCC", "TXHC"}},
  };
  return groups;
}

// Every speaker reads every prompt. Prompts are keyed by file stem.
inline Manifest accent_manifest(int prompts = 1132) {
  std::vector<ManifestRow> rows;
  rows.reserve(accent_groups().size() * 4 * static_cast<std::size_t>(prompts));
  char stem[32];
  for (const auto& g : accent_groups()) {
    for (const char* spk : g.speakers) {
      for (int p = 1; p <= prompts; ++p) {
        std::snprintf(stem, sizeof stem, "arctic_a%04d", p);
        const std::string s = spk;
        rows.push_back(ManifestRow{s + "_" + stem, s, g.accent,
                                   s + "/transcript/" + stem + ".txt",
                                   s + "/post/" + stem + ".json", ""});
      }
    }
  }
  return Manifest(std::move(rows));
}

inline const std::vector<std::string>& favoring_vocabulary() {
  static const std::vector<std::string> words = {
      "the",   "cat",  "sat",   "on",    "mat",  "dog",   "ran", "far",
      "house", "tree", "green", "river", "stone", "bird", "sang", "loud"};
  return words;
}

// Uniform unigram over the vocabulary, no <unk>.
inline std::string favoring_arpa() {
  const auto& words = favoring_vocabulary();
  std::string arpa = "\\data\\\nngram 1=" + std::to_string(words.size()) +
                     "\n\n\\1-grams:\n";
  for (const auto& w : words) {
    arpa += "-1.2041199826559248\t" + w + "\n";
  }
  arpa += "\n\\end\\\n";
  return arpa;
}

struct FavoringUtterance {
  std::string id;
  std::string gold;
  std::string acoustic_best;  // what the acoustics alone prefer
  PosteriorTable table;
};

// Each utterance holds one misspelled position where the wrong letter beats
// the right one 0.55 to 0.40, and the misspelling is out of vocabulary.
// Letters are separated by pure-blank frames so the acoustics are otherwise
// unambiguous. Frames are sparse, which keeps decoding cheap.
inline std::vector<FavoringUtterance> lm_favoring_set(int count,
                                                      std::uint64_t seed) {
  auto alphabet = std::make_shared<const Alphabet>(Alphabet::english());
  const auto& vocab = favoring_vocabulary();
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t n) {
    return static_cast<std::size_t>(
        std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  };
  auto in_vocab = [&vocab](const std::string& w) {
    for (const auto& v : vocab) {
      if (v == w) return true;
    }
    return false;
  };

  std::vector<FavoringUtterance> out;
  for (int u = 0; u < count; ++u) {
    const std::size_t n_words = 2 + pick(3);
    std::vector<std::string> words;
    for (std::size_t i = 0; i < n_words; ++i) {
      words.push_back(vocab[pick(vocab.size())]);
    }
    const std::size_t bad_word = pick(n_words);
    const std::size_t bad_pos = pick(words[bad_word].size());
    char wrong;
    std::string misspelled;
    do {
      wrong = static_cast<char>('a' + pick(26));
      misspelled = words[bad_word];
      misspelled[bad_pos] = wrong;
    } while (wrong == words[bad_word][bad_pos] || in_vocab(misspelled));

    std::vector<std::vector<std::pair<int, double>>> frames;
    const int blank = alphabet->blank();
    auto sym = [&alphabet](char c) {
      return alphabet->index_of(std::string(1, c)).value();
    };
    std::string gold;
    std::string acoustic;
    for (std::size_t w = 0; w < n_words; ++w) {
      if (w > 0) {
        frames.push_back({{alphabet->space(), 0.9}, {blank, 0.1}});
        frames.push_back({{blank, 1.0}});
        gold += ' ';
        acoustic += ' ';
      }
      gold += words[w];
      acoustic += w == bad_word ? misspelled : words[w];
      for (std::size_t i = 0; i < words[w].size(); ++i) {
        const char c = words[w][i];
        if (w == bad_word && i == bad_pos) {
          frames.push_back({{sym(wrong), 0.55}, {sym(c), 0.40}, {blank, 0.05}});
        } else {
          frames.push_back({{sym(c), 0.9}, {blank, 0.1}});
        }
        frames.push_back({{blank, 1.0}});
      }
    }
    PosteriorTable::Matrix m =
        PosteriorTable::Matrix::Zero(static_cast<Eigen::Index>(frames.size()),
                                     alphabet->size());
    for (std::size_t t = 0; t < frames.size(); ++t) {
      for (const auto& [v, p] : frames[t]) {
        m(static_cast<Eigen::Index>(t), v) = p;
      }
    }
    char id[16];
    std::snprintf(id, sizeof id, "syn%03d", u);
    out.push_back(FavoringUtterance{id, gold, acoustic,
                                    PosteriorTable(id, std::move(m), alphabet)});
  }
  return out;
}

}  // namespace ctcdecode::testing

#endif  // CTCDECODE_TESTS_SYNTHETIC_HPP_
