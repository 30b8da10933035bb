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

#include "ctcdecode/alphabet.hpp"

#include "ctcdecode/error.hpp"

namespace ctcdecode {

std::vector<std::string_view> utf8_split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    if (i + len > text.size()) {
      throw InvalidInput("truncated UTF-8 sequence");
    }
    out.push_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols, int blank_index,
                   int space_index)
    : symbols_(std::move(symbols)), blank_(blank_index), space_(space_index) {
  if (symbols_.size() < 2) {
    throw InvalidInput("alphabet needs at least a blank and a space");
  }
  if (!valid(blank_) || !valid(space_)) {
    throw InvalidInput("blank/space index out of range");
  }
  if (blank_ == space_) {
    throw InvalidInput("blank and space must be distinct symbols");
  }
  for (int i = 0; i < size(); ++i) {
    const auto& s = symbols_[static_cast<std::size_t>(i)];
    if (s.empty()) {
      throw InvalidInput("empty symbol at index " + std::to_string(i));
    }
    if (i != blank_ && utf8_split(s).size() != 1) {
      throw InvalidInput("symbol '" + s + "' is not a single character");
    }
    if (!lookup_.emplace(s, i).second) {
      throw InvalidInput("duplicate symbol '" + s + "'");
    }
  }
  if (symbols_[static_cast<std::size_t>(space_)] != " ") {
    throw InvalidInput("space symbol must be ' '");
  }
}

Alphabet Alphabet::english() {
  std::vector<std::string> symbols = {"-", " ", "'"};
  for (char c = 'a'; c <= 'z'; ++c) {
    symbols.emplace_back(1, c);
  }
  return Alphabet(std::move(symbols), 0, 1);
}

const std::string& Alphabet::symbol(int index) const {
  if (!valid(index)) {
    throw InvalidInput("symbol index " + std::to_string(index) +
                       " out of range");
  }
  return symbols_[static_cast<std::size_t>(index)];
}

std::optional<int> Alphabet::index_of(std::string_view symbol) const {
  auto it = lookup_.find(std::string(symbol));
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<int> Alphabet::encode(std::string_view text) const {
  std::vector<int> out;
  for (auto ch : utf8_split(text)) {
    auto idx = index_of(ch);
    if (!idx || *idx == blank_) {
      throw InvalidInput("character '" + std::string(ch) +
                         "' is not in the alphabet");
    }
    out.push_back(*idx);
  }
  return out;
}

std::string Alphabet::decode(std::span<const int> indices) const {
  std::string out;
  for (int i : indices) {
    out += symbol(i);
  }
  return out;
}

}  // namespace ctcdecode
