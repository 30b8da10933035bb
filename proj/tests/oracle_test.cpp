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

#include "ctcdecode/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "ctcdecode/error.hpp"
#include "test_util.hpp"

namespace ctcdecode {
namespace {

using testing::make_table;
using testing::small_alphabet;

DecodeParams acoustic_only() {
  DecodeParams p;
  p.alpha = 0.0;
  p.beta = 0.0;
  p.partial_word_penalty = 0.0;
  return p;
}

TEST(EnumerateLabelingsTest, SingleFrame) {
  const auto d =
      enumerate_labelings(make_table({{0.3, 0.0, 0.7}}, small_alphabet(3)));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.at(""), 0.3);
  EXPECT_DOUBLE_EQ(d.at("a"), 0.7);
}

TEST(EnumerateLabelingsTest, TwoFrameHandEnumeration) {
  auto a = small_alphabet(3);
  auto d = enumerate_labelings(make_table({{0.6, 0, 0.4}, {0.6, 0, 0.4}}, a));
  EXPECT_NEAR(d.at(""), 0.36, 1e-15);
  EXPECT_NEAR(d.at("a"), 0.64, 1e-15);
  // aa, a-, -a collapse to "a"; only -- gives "".
  d = enumerate_labelings(make_table({{0.5, 0, 0.5}, {0.5, 0, 0.5}}, a));
  EXPECT_NEAR(d.at(""), 0.25, 1e-15);
  EXPECT_NEAR(d.at("a"), 0.75, 1e-15);
  EXPECT_EQ(d.count("aa"), 0u);
}

TEST(EnumerateLabelingsTest, MatchesRawPathEnumeration) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto a = small_alphabet(2 + static_cast<int>(rng() % 3));
    const auto table =
        testing::random_table(rng, 1 + static_cast<int>(rng() % 6), a);
    const auto got = enumerate_labelings(table);
    const auto want = testing::brute_force_distribution(table);
    ASSERT_EQ(got.size(), want.size());
    double total = 0.0;
    for (const auto& [text, p] : want) {
      EXPECT_NEAR(got.at(text), p, 1e-12);
      total += got.at(text);
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(EnumerateLabelingsTest, CapsAreEnforced) {
  auto a = small_alphabet(3);
  std::vector<std::vector<double>> rows(13, {1.0, 0.0, 0.0});
  EXPECT_THROW(enumerate_labelings(make_table(rows, a)), ResourceLimit);
  rows.resize(12);
  EXPECT_NO_THROW(enumerate_labelings(make_table(rows, a)));

  auto wide = small_alphabet(7);
  EXPECT_THROW(enumerate_labelings(make_table(
                   {{1.0, 0, 0, 0, 0, 0, 0}}, wide)),
               ResourceLimit);
}

TEST(EnumerateLabelingsTest, LargeTablesWithinBudget) {
  std::mt19937_64 rng(18);
  for (auto [frames, width] : {std::pair{12, 4}, std::pair{8, 6}}) {
    const auto table = testing::random_table(rng, frames, small_alphabet(width));
    double total = 0.0;
    for (const auto& [text, p] : enumerate_labelings(table)) {
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-9) << frames << "x" << width;
  }
}

TEST(EnumerateLabelingsTest, SparseTableAtTheCap) {
  // Three live symbols per frame, rotating through all six.
  std::vector<std::vector<double>> rows;
  for (int t = 0; t < 12; ++t) {
    std::vector<double> row(6, 0.0);
    row[0] = 0.5;
    row[static_cast<std::size_t>(1 + t % 5)] = 0.3;
    row[static_cast<std::size_t>(1 + (t + 2) % 5)] = 0.2;
    rows.push_back(row);
  }
  double total = 0.0;
  for (const auto& [text, p] : enumerate_labelings(make_table(rows, small_alphabet(6)))) {
    total += p;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(EnumerateLabelingsTest, DenseWorstCaseIsRefused) {
  // 12 x 6 dense has about 4.9e7 labelings.
  std::mt19937_64 rng(21);
  const auto table = testing::random_table(rng, 12, small_alphabet(6));
  EXPECT_THROW(enumerate_labelings(table), ResourceLimit);
}

TEST(OracleBestTest, ReducesToArgmaxWithoutFusion) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto table = testing::random_table(rng, 4, small_alphabet(4));
    const auto d = enumerate_labelings(table);
    auto it = std::max_element(
        d.begin(), d.end(),
        [](const auto& x, const auto& y) { return x.second < y.second; });
    const auto best = oracle_best(table, nullptr, acoustic_only());
    EXPECT_EQ(best.labeling.text, it->first);
    EXPECT_DOUBLE_EQ(best.probability, it->second);
    EXPECT_DOUBLE_EQ(best.fused_score, std::log(it->second));
  }
}

TEST(OracleBestTest, DiagonalTable) {
  auto a = small_alphabet(4);
  const auto best = oracle_best(
      make_table({{0, 0, 1, 0}, {0, 0, 0, 1}}, a), nullptr, acoustic_only());
  EXPECT_EQ(best.labeling.text, "ab");
  EXPECT_DOUBLE_EQ(best.fused_score, 0.0);
}

TEST(OracleBestTest, CatOverMatWithLanguageModel) {
  const LanguageModel lm(parse_arpa_string(testing::kCatMatArpa));
  const auto table = make_table({{0, 0, 0, 0.5, 0.5, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 1},
                                 {1, 0, 0, 0, 0, 0}},
                                testing::make_alphabet(
                                    {"-", " ", "a", "c", "m", "t"}));
  auto p = acoustic_only();
  p.alpha = 1.0;
  const auto best = oracle_best(table, &lm, p);
  EXPECT_EQ(best.labeling.text, "cat");
  EXPECT_NEAR(best.fused_score, -0.9234056898593499, 1e-12);
  p.alpha = 0.0;
  EXPECT_EQ(oracle_best(table, &lm, p).labeling.text, "cat");
}

}  // namespace
}  // namespace ctcdecode
