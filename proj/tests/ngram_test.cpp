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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ctcdecode/error.hpp"
#include "test_util.hpp"

namespace ctcdecode {
namespace {

using Words = std::vector<std::string>;

TEST(ParseArpaTest, UnigramReadBack) {
  const auto m = parse_arpa_string(
      "\\data\\\nngram 1=3\n\n\\1-grams:\n-1.0\tcat\n-0.5\tdog\n-0.6\tmat\n"
      "\n\\end\\\n");
  EXPECT_EQ(m.order(), 1);
  EXPECT_EQ(m.count(1), 3u);
  EXPECT_DOUBLE_EQ(m.find(Words{"cat"})->log10_prob, -1.0);
  EXPECT_DOUBLE_EQ(m.find(Words{"cat"})->log10_backoff, 0.0);
}

TEST(ParseArpaTest, HeaderCountMismatchNamesSection) {
  try {
    parse_arpa_string(
        "\\data\\\nngram 1=3\n\n\\1-grams:\n-1\ta\n-1\tb\n-1\tc\n-1\td\n"
        "\\end\\\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("\\1-grams:"), std::string::npos)
        << e.what();
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(ParseArpaTest, MalformedInputs) {
  // Missing \end\.
  EXPECT_THROW(parse_arpa_string("\\data\\\nngram 1=1\n\\1-grams:\n-1\ta\n"),
               ParseError);
  // Malformed number, with its line.
  try {
    parse_arpa_string("\\data\\\nngram 1=1\n\\1-grams:\nx\ta\n\\end\\\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  // Wrong field count.
  EXPECT_THROW(parse_arpa_string(
                   "\\data\\\nngram 1=1\n\\1-grams:\n-1\n\\end\\\n"),
               ParseError);
  // Positive log probability.
  EXPECT_THROW(parse_arpa_string(
                   "\\data\\\nngram 1=1\n\\1-grams:\n0.5\ta\n\\end\\\n"),
               ParseError);
  // Bigram whose context is missing.
  EXPECT_THROW(parse_arpa_string("\\data\\\nngram 1=2\nngram 2=1\n"
                                 "\\1-grams:\n-1\ta\n-1\tb\n"
                                 "\\2-grams:\n-1\tc\ta\n\\end\\\n"),
               ParseError);
  // Backoff weight on the highest order.
  EXPECT_THROW(parse_arpa_string(
                   "\\data\\\nngram 1=1\n\\1-grams:\n-1\ta\t-0.1\n\\end\\\n"),
               ParseError);
  // No header.
  EXPECT_THROW(parse_arpa_string("ngram 1=1\n"), ParseError);
  // Section missing entirely.
  EXPECT_THROW(parse_arpa_string("\\data\\\nngram 1=1\nngram 2=0\n"
                                 "\\1-grams:\n-1\ta\t0\n\\end\\\n"),
               ParseError);
}

TEST(ParseArpaTest, AcceptsSpaceSeparatedFields) {
  const auto m = parse_arpa_string(
      "\\data\\\nngram 1=2\nngram 2=1\n\\1-grams:\n-1 a -0.5\n-2 b -0.25\n"
      "\\2-grams:\n-0.3 a b\n\\end\\\n");
  EXPECT_DOUBLE_EQ(m.find(Words{"a", "b"})->log10_prob, -0.3);
  EXPECT_DOUBLE_EQ(m.find(Words{"b"})->log10_backoff, -0.25);
}

TEST(ScoreWordTest, BackoffRecursionOnToyBigram) {
  const auto m = parse_arpa_string(testing::kToyBigramArpa);
  EXPECT_NEAR(score_word(m, Words{}, "cat"), -1.0, 1e-12);
  // "the cat" is absent: backoff(the) + p(cat).
  EXPECT_NEAR(score_word(m, Words{"the"}, "cat"), -1.3, 1e-12);
  EXPECT_NEAR(score_word(m, Words{"the"}, "mat"), -0.2, 1e-12);
  EXPECT_NEAR(score_word(m, Words{"mat"}, "the"), -0.1 + -0.5, 1e-12);
  // History is truncated to order - 1 words.
  EXPECT_NEAR(score_word(m, Words{"mat", "cat"}, "the"), -0.7, 1e-12);
  // Unknown history word contributes no backoff.
  EXPECT_NEAR(score_word(m, Words{"dog"}, "cat"), -1.0, 1e-12);
}

TEST(ScoreWordTest, OovPolicy) {
  auto m = parse_arpa_string(testing::kToyBigramArpa);
  EXPECT_DOUBLE_EQ(score_word(m, Words{}, "dog"), -10.0);
  m.set_oov_log10_penalty(-7.0);
  EXPECT_DOUBLE_EQ(score_word(m, Words{"the"}, "dog"), -7.0);

  const auto with_unk = parse_arpa_string(
      "\\data\\\nngram 1=2\n\\1-grams:\n-0.1\tcat\n-3.0\t<unk>\n\\end\\\n");
  EXPECT_DOUBLE_EQ(score_word(with_unk, Words{}, "dog"), -3.0);
}

TEST(ScoreWordTest, EmptyHistoryIsUnigram) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const auto m = testing::random_model(rng);
    for (const auto& rec : m.records(1)) {
      EXPECT_DOUBLE_EQ(score_word(m, Words{}, m.word(rec.words[0])),
                       rec.entry.log10_prob);
    }
  }
}

TEST(ScoreWordTest, NormalizedModelsSumToOne) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 30; ++i) {
    const auto m = testing::normalized_bigram(rng, 2 + static_cast<int>(i % 9));
    for (const auto& h : m.vocabulary()) {
      double total = 0.0;
      for (const auto& w : m.vocabulary()) {
        total += std::pow(10.0, score_word(m, Words{h}, w));
      }
      EXPECT_LE(total, 1.0 + 1e-3);
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

TEST(ScoreSentenceTest, Composition) {
  const auto toy = parse_arpa_string(testing::kToyBigramArpa);
  EXPECT_DOUBLE_EQ(score_sentence(toy, Words{}), 0.0);
  EXPECT_NEAR(score_sentence(toy, Words{"the", "cat", "the"}),
              -0.5 + -1.3 + -0.7, 1e-12);
  EXPECT_NEAR(score_sentence(toy, Words{"mat", "the", "mat"}),
              -1.2 + -0.6 + -0.2, 1e-12);

  const auto uni = parse_arpa_string(
      "\\data\\\nngram 1=2\n\\1-grams:\n-0.4\tcat\n-0.2\tdog\n\\end\\\n");
  EXPECT_DOUBLE_EQ(score_sentence(uni, Words{"cat", "cat"}),
                   2 * score_sentence(uni, Words{"cat"}));

  // Sentinels frame the sentence when present.
  const auto cm = parse_arpa_string(testing::kCatMatArpa);
  EXPECT_NEAR(score_sentence(cm, Words{"cat"}), -0.1 + -1.0, 1e-12);
}

TEST(SerializeArpaTest, RoundTripIsEntryExact) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    const auto m = testing::random_model(rng);
    const auto text = serialize_arpa_string(m);
    const auto again = parse_arpa_string(text);
    EXPECT_TRUE(again == m) << text;
    EXPECT_EQ(serialize_arpa_string(again), text);
  }
}

TEST(VocabularyTrieTest, PrefixQueries) {
  VocabularyTrie trie;
  trie.insert("cat");
  trie.insert("car");
  EXPECT_TRUE(trie.is_prefix("ca"));
  EXPECT_TRUE(trie.is_prefix(""));
  EXPECT_TRUE(trie.is_prefix("cat"));
  EXPECT_FALSE(trie.is_prefix("cb"));
  EXPECT_FALSE(trie.is_prefix("cats"));
  EXPECT_TRUE(trie.contains("car"));
  EXPECT_FALSE(trie.contains("ca"));
  EXPECT_EQ(trie.size(), 2u);
}

TEST(VocabularyTrieTest, BuiltFromModelSkipsSentinels) {
  const auto m = parse_arpa_string(testing::kCatMatArpa);
  const VocabularyTrie trie(m);
  EXPECT_EQ(trie.size(), 3u);
  EXPECT_TRUE(trie.contains("the"));
  EXPECT_FALSE(trie.is_prefix("<"));
}

}  // namespace
}  // namespace ctcdecode
