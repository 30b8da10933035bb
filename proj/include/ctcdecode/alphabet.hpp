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

#ifndef CTCDECODE_ALPHABET_HPP_
#define CTCDECODE_ALPHABET_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ctcdecode {

// Ordered symbol inventory of a CTC output layer. Every symbol other than the
// blank is a single UTF-8 code point; the blank may be any token ("-",
// "<pad>", ...) because it never reaches a transcript.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> symbols, int blank_index, int space_index);

  // "-", " ", "'", then a..z. Blank 0, space 1.
  static Alphabet english();

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  int blank() const noexcept { return blank_; }
  int space() const noexcept { return space_; }
  bool valid(int index) const noexcept { return index >= 0 && index < size(); }

  const std::string& symbol(int index) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<int> index_of(std::string_view symbol) const;

  // Splits blank-free text into symbol indices; throws InvalidInput on
  // characters outside the alphabet.
  std::vector<int> encode(std::string_view text) const;
  std::string decode(std::span<const int> indices) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  int blank_;
  int space_;
  std::unordered_map<std::string, int> lookup_;
};

// A transcript: text over the alphabet minus the blank.
struct Labeling {
  std::string text;

  friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

// Splits UTF-8 text into code points, each returned as its byte sequence.
std::vector<std::string_view> utf8_split(std::string_view text);

}  // namespace ctcdecode

#endif  // CTCDECODE_ALPHABET_HPP_
