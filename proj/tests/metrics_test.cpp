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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ctcdecode/error.hpp"
#include "test_util.hpp"

namespace ctcdecode {
namespace {

std::vector<char> chars(const std::string& s) { return {s.begin(), s.end()}; }

TEST(EditOpsTest, ErrorAnalysisWordPairs) {
  EXPECT_EQ(edit_ops("crawled", "crowled", Granularity::kCharacter),
            (EditOps{0, 0, 1}));
  EXPECT_EQ(edit_ops("tomorrow", "to morrow", Granularity::kCharacter),
            (EditOps{1, 0, 0}));
  EXPECT_EQ(edit_ops("youths", "youth", Granularity::kCharacter),
            (EditOps{0, 1, 0}));
  // Same pairs in sentence context.
  EXPECT_EQ(edit_ops("the portuguese boy crawled nearer and nearer",
                     "the portuguese boy crowled nearer and nearer",
                     Granularity::kCharacter),
            (EditOps{0, 0, 1}));
  EXPECT_EQ(edit_ops("tomorrow it will be strong",
                     "to morrow it will be strong", Granularity::kWord),
            (EditOps{1, 0, 1}));
}

TEST(EditOpsTest, EmptyStrings) {
  EXPECT_EQ(edit_ops("", "", Granularity::kCharacter), EditOps{});
  EXPECT_EQ(edit_ops("abc", "", Granularity::kCharacter), (EditOps{0, 3, 0}));
  EXPECT_EQ(edit_ops("", "ab", Granularity::kCharacter), (EditOps{2, 0, 0}));
  EXPECT_EQ(edit_ops("", "a b", Granularity::kWord), (EditOps{2, 0, 0}));
}

TEST(EditOpsTest, Utf8CharactersCountOnce) {
  EXPECT_EQ(edit_ops("caf\xc3\xa9", "cafe", Granularity::kCharacter),
            (EditOps{0, 0, 1}));
}

TEST(EditOpsTest, TracebackPreference) {
  // "ab" -> "ba": two substitutions rather than an insert/delete pair.
  EXPECT_EQ(edit_ops("ab", "ba", Granularity::kCharacter), (EditOps{0, 0, 2}));
  // "abc" -> "ac" vs full matrix with the same preference order.
  EXPECT_EQ(edit_ops("abc", "ac", Granularity::kCharacter),
            testing::full_matrix_edit_ops(chars("abc"), chars("ac")));
}

TEST(EditOpsTest, IdentityIsZero) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto s = testing::random_string(rng, 40, "abc d");
    EXPECT_EQ(edit_ops(s, s, Granularity::kCharacter), EditOps{});
    EXPECT_EQ(edit_ops(s, s, Granularity::kWord), EditOps{});
  }
}

TEST(EditOpsTest, SwappingRolesSwapsInsertionsAndDeletions) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_string(rng, 30, "abcd");
    const auto b = testing::random_string(rng, 30, "abcd");
    const auto ab = edit_ops(a, b, Granularity::kCharacter);
    const auto ba = edit_ops(b, a, Granularity::kCharacter);
    EXPECT_EQ(ab.total(), ba.total());
    // The mirrored alignment is also minimal, so the ins/del imbalance is
    // forced by the length difference.
    EXPECT_EQ(ab.insertions - ab.deletions, ba.deletions - ba.insertions);
    EXPECT_EQ(ab.insertions - ab.deletions,
              static_cast<long>(b.size()) - static_cast<long>(a.size()));
  }
}

TEST(EditOpsTest, TriangleInequality) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_string(rng, 20, "abc");
    const auto b = testing::random_string(rng, 20, "abc");
    const auto c = testing::random_string(rng, 20, "abc");
    EXPECT_LE(edit_ops(a, c, Granularity::kCharacter).total(),
              edit_ops(a, b, Granularity::kCharacter).total() +
                  edit_ops(b, c, Granularity::kCharacter).total());
  }
}

TEST(EditOpsTest, MatchesFullMatrixOracle) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    const auto a = testing::random_string(rng, 64, "abcde ");
    const auto b = testing::random_string(rng, 64, "abcde ");
    const auto want = testing::full_matrix_edit_ops(chars(a), chars(b));
    EXPECT_EQ(edit_ops(a, b, Granularity::kCharacter), want);
  }
}

TEST(WerTest, Examples) {
  const auto five = split_words("the cat chased the rat");
  EXPECT_DOUBLE_EQ(wer(five, five), 0.0);
  EXPECT_DOUBLE_EQ(wer(five, split_words("the mat chased the rat")), 0.2);
  const auto four = split_words("one two three four");
  EXPECT_DOUBLE_EQ(wer(four, {}), 1.0);
  EXPECT_DOUBLE_EQ(wer({}, {}), 0.0);
  EXPECT_TRUE(std::isinf(wer({}, four)));
  // Insertions can push WER above 1.
  EXPECT_DOUBLE_EQ(wer(split_words("a"), split_words("b c d")), 3.0);
}

TEST(WerTest, CommonSuffixWhenAlignmentUnchanged) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto g = split_words(testing::random_string(rng, 20, "ab "));
    auto h = split_words(testing::random_string(rng, 20, "ab "));
    if (g.empty()) continue;
    const auto before = testing::full_matrix_edit_ops(g, h);
    auto g2 = g;
    auto h2 = h;
    for (const char* w : {"zz", "yy"}) {
      g2.emplace_back(w);
      h2.emplace_back(w);
    }
    const auto after = testing::full_matrix_edit_ops(g2, h2);
    if (after.total() != before.total()) continue;
    EXPECT_DOUBLE_EQ(wer(g2, h2) * static_cast<double>(g2.size()),
                     wer(g, h) * static_cast<double>(g.size()));
  }
}

TEST(DeltaWerTest, ReportedValues) {
  auto d = delta_wer(12.47, 8.43);
  EXPECT_NEAR(d.absolute, -4.04, 1e-9);
  EXPECT_NEAR(d.relative_percent, -32.40, 0.01);
  d = delta_wer(12.47, 12.74);
  EXPECT_NEAR(d.relative_percent, 2.17, 0.01);
  d = delta_wer(9.27, 9.42);
  EXPECT_NEAR(d.relative_percent, 1.62, 0.01);
  d = delta_wer(9.27, 5.53);
  EXPECT_NEAR(d.absolute, -3.74, 1e-9);
  // Computed from the rounded inputs this comes to -40.35 %.
  EXPECT_NEAR(d.relative_percent, -40.345, 0.001);
  d = delta_wer(7.0, 7.0);
  EXPECT_EQ(d.absolute, 0.0);
  EXPECT_EQ(d.relative_percent, 0.0);
  EXPECT_THROW(delta_wer(0.0, 1.0), InvalidInput);
}

WerReport report_with(long subs, long dels, long ins) {
  // One utterance per operation kind so the counts are exact.
  std::vector<ScoringPair> pairs;
  pairs.push_back({"s", std::string(static_cast<std::size_t>(subs), 'a'),
                   std::string(static_cast<std::size_t>(subs), 'b')});
  pairs.push_back({"d", std::string(static_cast<std::size_t>(dels), 'a'), ""});
  pairs.push_back({"i", "", std::string(static_cast<std::size_t>(ins), 'a')});
  return build_report(pairs);
}

TEST(OpsDeltaTest, PercentChanges) {
  const auto base = report_with(100, 100, 10);
  const auto same = ops_delta_report(base, base);
  EXPECT_EQ(same.substitutions.absolute, 0);
  EXPECT_EQ(*same.substitutions.percent, 0.0);
  EXPECT_EQ(*same.deletions.percent, 0.0);

  const auto treat = report_with(57, 45, 10);
  const auto d = ops_delta_report(base, treat);
  EXPECT_EQ(d.substitutions.absolute, -43);
  EXPECT_NEAR(*d.substitutions.percent, -43.0, 1e-12);
  EXPECT_NEAR(*d.deletions.percent, -55.0, 1e-12);
  EXPECT_NEAR(*d.insertions.percent, 0.0, 1e-12);

  EXPECT_FALSE(op_change(0, 3).percent.has_value());
}

TEST(OpsDeltaTest, IdMismatchListsIds) {
  const auto base = build_report(std::vector<ScoringPair>{{"u1", "a", "a"}});
  const auto other = build_report(std::vector<ScoringPair>{{"u2", "a", "a"}});
  try {
    ops_delta_report(base, other);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("u1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("u2"), std::string::npos);
  }
}

TEST(WerReportTest, AggregateIsPooled) {
  std::vector<ScoringPair> pairs = {
      {"u1", "the cat chased the rat", "the mat chased the rat"},
      {"u2", "a b", "a b c d"},
      {"u3", "", "noise"},
  };
  const auto r = build_report(pairs);
  EXPECT_EQ(r.gold_words, 7);
  EXPECT_EQ(r.word_ops.total(), 4);
  EXPECT_DOUBLE_EQ(r.wer, 4.0 / 7.0);
  EXPECT_TRUE(r.utterances[2].empty_reference);
  EXPECT_EQ(r.single_edit_ids(), std::vector<std::string>{"u1"});
}

}  // namespace
}  // namespace ctcdecode
