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

#include <algorithm>

namespace ctcdecode {

VocabularyTrie::VocabularyTrie(const NgramModel& model) {
  for (const auto& w : model.vocabulary()) {
    if (!is_sentinel(w)) {
      insert(w);
    }
  }
}

void VocabularyTrie::insert(std::string_view word) {
  std::uint32_t node = 0;
  for (char c : word) {
    auto& children = nodes_[node].children;
    auto it = std::lower_bound(
        children.begin(), children.end(), c,
        [](const auto& child, char key) { return child.first < key; });
    if (it != children.end() && it->first == c) {
      node = it->second;
      continue;
    }
    const auto next = static_cast<std::uint32_t>(nodes_.size());
    children.insert(it, {c, next});
    nodes_.emplace_back();
    node = next;
  }
  if (!nodes_[node].terminal) {
    nodes_[node].terminal = true;
    ++num_words_;
  }
}

std::optional<std::uint32_t> VocabularyTrie::walk(std::string_view s) const {
  std::uint32_t node = 0;
  for (char c : s) {
    const auto& children = nodes_[node].children;
    auto it = std::lower_bound(
        children.begin(), children.end(), c,
        [](const auto& child, char key) { return child.first < key; });
    if (it == children.end() || it->first != c) {
      return std::nullopt;
    }
    node = it->second;
  }
  return node;
}

bool VocabularyTrie::is_prefix(std::string_view fragment) const {
  // An empty trie has no words, so not even "" is a prefix of one.
  return num_words_ > 0 && walk(fragment).has_value();
}

bool VocabularyTrie::contains(std::string_view word) const {
  auto node = walk(word);
  return node && nodes_[*node].terminal;
}

}  // namespace ctcdecode
