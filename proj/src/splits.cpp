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

#include "ctcdecode/splits.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <unordered_map>
#include <unordered_set>

#include "ctcdecode/error.hpp"

namespace ctcdecode {

Manifest::Manifest(std::vector<ManifestRow> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.utterance_id.empty()) {
      throw InvalidInput("manifest row " + std::to_string(i + 1) +
                         " has an empty utterance_id");
    }
    if (r.speaker_id.empty() || r.accent.empty()) {
      throw InvalidInput("manifest row '" + r.utterance_id +
                         "' needs a speaker and an accent");
    }
    if (!by_id_.emplace(r.utterance_id, i).second) {
      throw InvalidInput("duplicate utterance_id '" + r.utterance_id + "'");
    }
  }
}

const ManifestRow* Manifest::find(std::string_view utterance_id) const {
  auto it = by_id_.find(utterance_id);
  return it == by_id_.end() ? nullptr : &rows_[it->second];
}

std::vector<std::string> Manifest::accents() const {
  std::set<std::string> s;
  for (const auto& r : rows_) {
    s.insert(r.accent);
  }
  return {s.begin(), s.end()};
}

std::vector<std::string> Manifest::speakers() const {
  std::set<std::string> s;
  for (const auto& r : rows_) {
    s.insert(r.speaker_id);
  }
  return {s.begin(), s.end()};
}

std::vector<std::string> Manifest::speakers_of(std::string_view accent) const {
  std::set<std::string> s;
  for (const auto& r : rows_) {
    if (r.accent == accent) {
      s.insert(r.speaker_id);
    }
  }
  return {s.begin(), s.end()};
}

std::optional<std::string> Manifest::accent_of_speaker(
    std::string_view speaker) const {
  for (const auto& r : rows_) {
    if (r.speaker_id == speaker) {
      return r.accent;
    }
  }
  return std::nullopt;
}

std::string normalize_prompt(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string prompt_key(const ManifestRow& row) {
  if (!row.prompt.empty()) {
    return row.prompt;
  }
  if (!row.transcript_path.empty()) {
    return std::filesystem::path(row.transcript_path).stem().string();
  }
  return row.utterance_id;
}

std::string_view to_string(Partition p) {
  switch (p) {
    case Partition::kTrain:
      return "train";
    case Partition::kDev:
      return "dev";
    case Partition::kTest:
      return "test";
  }
  return "?";
}

std::optional<Partition> partition_from_string(std::string_view s) {
  if (s == "train") return Partition::kTrain;
  if (s == "dev") return Partition::kDev;
  if (s == "test") return Partition::kTest;
  return std::nullopt;
}

std::size_t SplitAssignment::count(Partition p) const {
  return static_cast<std::size_t>(
      std::count_if(assignments.begin(), assignments.end(),
                    [p](const auto& kv) { return kv.second == p; }));
}

std::string SplitAssignment::name() const {
  std::string n = "split" + std::to_string(strategy);
  switch (strategy) {
    case 2:
      return n + "-fold" + std::to_string(fold);
    case 3:
      return n + "-" + held_out_accent.value_or("none");
    case 4:
      return n + "-" + accent.value_or("none");
    case 5:
      return n + "-" + accent.value_or("none") + "-" +
             (held_out_speakers.empty() ? "none" : held_out_speakers.front());
    default:
      return n;
  }
}

namespace {

void check_ratios(const SplitRatios& r) {
  for (double v : {r.train, r.dev, r.test}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidParams("split ratios must lie in [0, 1]");
    }
  }
  if (std::abs(r.train + r.dev + r.test - 1.0) > 1e-9) {
    throw InvalidParams("split ratios must sum to 1");
  }
}

using PromptPartition = std::unordered_map<std::string, Partition>;

PromptPartition partition_prompts(const std::vector<const ManifestRow*>& rows,
                                  const SplitConfig& config) {
  std::set<std::string> unique;
  for (const auto* r : rows) {
    unique.insert(prompt_key(*r));
  }
  std::vector<std::string> prompts(unique.begin(), unique.end());
  Lcg64(config.seed).shuffle(prompts);

  const auto n = static_cast<double>(prompts.size());
  const auto n_test = static_cast<std::size_t>(
      std::floor(config.ratios.test * n + 1e-9));
  const auto n_dev = static_cast<std::size_t>(
      std::floor(config.ratios.dev * n + 1e-9));
  PromptPartition out;
  for (std::size_t i = 0; i < prompts.size(); ++i) {
    Partition p = Partition::kTrain;
    if (i < n_test) {
      p = Partition::kTest;
    } else if (i < n_test + n_dev) {
      p = Partition::kDev;
    }
    out.emplace(prompts[i], p);
  }
  return out;
}

// Rows in scope, prompts partitioned over them, then held-out rows restricted
// to Test prompts.
SplitAssignment assign(const std::vector<const ManifestRow*>& rows,
                       const PromptPartition& prompts,
                       const std::set<std::string>& held_speakers,
                       const std::optional<std::string>& held_accent) {
  SplitAssignment a;
  for (const auto* r : rows) {
    const Partition p = prompts.at(prompt_key(*r));
    const bool held = held_speakers.count(r->speaker_id) != 0 ||
                      (held_accent && r->accent == *held_accent);
    if (held) {
      if (p == Partition::kTest) {
        a.assignments.emplace(r->utterance_id, p);
        a.test_zeroshot.insert(r->utterance_id);
      }
    } else {
      a.assignments.emplace(r->utterance_id, p);
    }
  }
  return a;
}

std::vector<const ManifestRow*> rows_where(
    const Manifest& m, const std::optional<std::string>& accent) {
  std::vector<const ManifestRow*> out;
  for (const auto& r : m.rows()) {
    if (!accent || r.accent == *accent) {
      out.push_back(&r);
    }
  }
  return out;
}

void require_held_out(const SplitConfig& config) {
  if (!config.held_out && !config.all_folds) {
    throw InvalidParams("strategy " + std::to_string(config.strategy) +
                        " needs a held-out id or all folds");
  }
}

std::string require_speaker(const Manifest& m, const std::string& id) {
  auto accent = m.accent_of_speaker(id);
  if (!accent) {
    throw InvalidInput("held-out speaker '" + id + "' is not in the manifest");
  }
  return *accent;
}

void require_accent(const Manifest& m, const std::string& accent) {
  const auto all = m.accents();
  if (!std::binary_search(all.begin(), all.end(), accent)) {
    throw InvalidInput("held-out accent '" + accent +
                       "' is not in the manifest");
  }
}

void require_two_speakers(const Manifest& m, const std::string& accent) {
  if (m.speakers_of(accent).size() < 2) {
    throw InvalidInput("accent '" + accent +
                       "' has fewer than 2 speakers; cannot hold one out");
  }
}

}  // namespace

std::vector<SplitAssignment> make_split(const Manifest& manifest,
                                        const SplitConfig& config) {
  check_ratios(config.ratios);
  if (manifest.size() == 0) {
    throw InvalidInput("empty manifest");
  }
  std::vector<SplitAssignment> out;
  auto finish = [&](SplitAssignment a, int fold) {
    a.strategy = config.strategy;
    a.fold = fold;
    a.seed = config.seed;
    out.push_back(std::move(a));
  };

  switch (config.strategy) {
    case 1: {
      const auto rows = rows_where(manifest, std::nullopt);
      finish(assign(rows, partition_prompts(rows, config), {}, std::nullopt),
             0);
      break;
    }
    case 2: {
      require_held_out(config);
      const auto accents = manifest.accents();
      std::size_t folds = 0;
      for (const auto& acc : accents) {
        require_two_speakers(manifest, acc);
        folds = std::max(folds, manifest.speakers_of(acc).size());
      }
      std::vector<std::size_t> which;
      if (config.held_out) {
        const auto acc = require_speaker(manifest, *config.held_out);
        const auto spk = manifest.speakers_of(acc);
        which.push_back(static_cast<std::size_t>(
            std::find(spk.begin(), spk.end(), *config.held_out) -
            spk.begin()));
      } else {
        for (std::size_t f = 0; f < folds; ++f) {
          which.push_back(f);
        }
      }
      const auto rows = rows_where(manifest, std::nullopt);
      const auto prompts = partition_prompts(rows, config);
      for (std::size_t f : which) {
        std::set<std::string> held;
        for (const auto& acc : accents) {
          const auto spk = manifest.speakers_of(acc);
          held.insert(spk[f % spk.size()]);
        }
        auto a = assign(rows, prompts, held, std::nullopt);
        a.held_out_speakers.assign(held.begin(), held.end());
        finish(std::move(a), static_cast<int>(f));
      }
      break;
    }
    case 3: {
      require_held_out(config);
      const auto accents = manifest.accents();
      std::vector<std::string> which;
      if (config.held_out) {
        require_accent(manifest, *config.held_out);
        which.push_back(*config.held_out);
      } else {
        which = accents;
      }
      const auto rows = rows_where(manifest, std::nullopt);
      const auto prompts = partition_prompts(rows, config);
      for (const auto& acc : which) {
        auto a = assign(rows, prompts, {}, acc);
        a.held_out_accent = acc;
        const auto fold = std::find(accents.begin(), accents.end(), acc) -
                          accents.begin();
        finish(std::move(a), static_cast<int>(fold));
      }
      break;
    }
    case 4: {
      const auto accents = manifest.accents();
      std::vector<std::string> which;
      if (config.held_out && !config.all_folds) {
        require_accent(manifest, *config.held_out);
        which.push_back(*config.held_out);
      } else {
        which = accents;
      }
      for (const auto& acc : which) {
        const auto rows = rows_where(manifest, acc);
        auto a = assign(rows, partition_prompts(rows, config), {},
                        std::nullopt);
        a.accent = acc;
        const auto fold = std::find(accents.begin(), accents.end(), acc) -
                          accents.begin();
        finish(std::move(a), static_cast<int>(fold));
      }
      break;
    }
    case 5: {
      require_held_out(config);
      std::vector<std::pair<std::string, std::string>> which;  // accent, spk
      if (config.held_out) {
        const auto acc = require_speaker(manifest, *config.held_out);
        require_two_speakers(manifest, acc);
        which.emplace_back(acc, *config.held_out);
      } else {
        for (const auto& acc : manifest.accents()) {
          require_two_speakers(manifest, acc);
          for (const auto& spk : manifest.speakers_of(acc)) {
            which.emplace_back(acc, spk);
          }
        }
      }
      std::map<std::string, PromptPartition> prompts_by_accent;
      for (const auto& [acc, spk] : which) {
        const auto rows = rows_where(manifest, acc);
        auto it = prompts_by_accent.find(acc);
        if (it == prompts_by_accent.end()) {
          it = prompts_by_accent
                   .emplace(acc, partition_prompts(rows, config))
                   .first;
        }
        auto a = assign(rows, it->second, {spk}, std::nullopt);
        a.accent = acc;
        a.held_out_speakers = {spk};
        const auto speakers = manifest.speakers_of(acc);
        const auto fold = std::find(speakers.begin(), speakers.end(), spk) -
                          speakers.begin();
        finish(std::move(a), static_cast<int>(fold));
      }
      break;
    }
    default:
      throw InvalidParams("strategy must be 1..5, got " +
                          std::to_string(config.strategy));
  }
  return out;
}

std::vector<Violation> validate_split(const Manifest& manifest,
                                      const SplitAssignment& a) {
  std::vector<Violation> out;
  auto report = [&out](std::string rule, std::vector<std::string> ids) {
    if (!ids.empty()) {
      std::sort(ids.begin(), ids.end());
      out.push_back(Violation{std::move(rule), std::move(ids)});
    }
  };

  const std::set<std::string> held(a.held_out_speakers.begin(),
                                   a.held_out_speakers.end());
  auto is_held = [&](const ManifestRow& r) {
    return held.count(r.speaker_id) != 0 ||
           (a.held_out_accent && r.accent == *a.held_out_accent);
  };
  auto in_scope = [&](const ManifestRow& r) {
    return !a.accent || r.accent == *a.accent;
  };

  // Known ids, scope, and prompt ownership.
  std::vector<std::string> unknown;
  std::vector<std::string> out_of_scope;
  std::unordered_map<std::string, std::set<Partition>> prompt_parts;
  std::unordered_set<std::string> test_prompts;
  for (const auto& [id, part] : a.assignments) {
    const auto* row = manifest.find(id);
    if (row == nullptr) {
      unknown.push_back(id);
      continue;
    }
    if (!in_scope(*row)) {
      out_of_scope.push_back(id);
    }
    const auto key = prompt_key(*row);
    prompt_parts[key].insert(part);
    if (part == Partition::kTest) {
      test_prompts.insert(key);
    }
  }
  report("unknown-id", std::move(unknown));
  report("outside-accent-subset", std::move(out_of_scope));

  std::vector<std::string> overlap;
  std::vector<std::string> leaked;
  std::vector<std::string> unassigned;
  std::vector<std::string> zeroshot_missing;
  std::map<std::string, std::set<Partition>> speaker_parts;
  std::map<std::string, std::set<std::string>> accent_train_speakers;
  std::set<std::string> scope_accents;
  for (const auto& r : manifest.rows()) {
    if (!in_scope(r)) {
      continue;
    }
    scope_accents.insert(r.accent);
    auto it = a.assignments.find(r.utterance_id);
    if (it == a.assignments.end()) {
      if (!is_held(r) || test_prompts.count(prompt_key(r)) != 0) {
        unassigned.push_back(r.utterance_id);
      }
      continue;
    }
    const Partition part = it->second;
    if (prompt_parts[prompt_key(r)].size() > 1) {
      overlap.push_back(r.utterance_id);
    }
    speaker_parts[r.speaker_id].insert(part);
    if (part == Partition::kTrain) {
      accent_train_speakers[r.accent].insert(r.speaker_id);
    }
    if (is_held(r) && part != Partition::kTest) {
      leaked.push_back(r.utterance_id);
    }
    if (is_held(r) && part == Partition::kTest &&
        a.test_zeroshot.count(r.utterance_id) == 0) {
      zeroshot_missing.push_back(r.utterance_id);
    }
  }
  report("transcript-overlap", std::move(overlap));
  report("held-out-in-train-dev", std::move(leaked));
  report("unassigned-utterance", std::move(unassigned));
  report("zeroshot-incomplete", std::move(zeroshot_missing));

  std::vector<std::string> bad_zeroshot;
  for (const auto& id : a.test_zeroshot) {
    const auto* row = manifest.find(id);
    auto it = a.assignments.find(id);
    if (row == nullptr || it == a.assignments.end() ||
        it->second != Partition::kTest || !is_held(*row)) {
      bad_zeroshot.push_back(id);
    }
  }
  report("zeroshot-not-held-out-test", std::move(bad_zeroshot));

  if (a.strategy == 1 || a.strategy == 4) {
    std::vector<std::string> partial;
    for (const auto& [spk, parts] : speaker_parts) {
      if (parts.size() != 3) {
        partial.push_back(spk);
      }
    }
    report("speaker-not-in-all-partitions", std::move(partial));
  }
  if (a.strategy == 4 || a.strategy == 5) {
    if (!a.accent) {
      report("missing-accent-subset", {a.name()});
    }
  }
  if (a.strategy == 2 || a.strategy == 5) {
    if (held.empty()) {
      report("missing-held-out-speaker", {a.name()});
    }
    std::vector<std::string> no_train;
    for (const auto& acc : scope_accents) {
      if (accent_train_speakers[acc].empty()) {
        no_train.push_back(acc);
      }
    }
    report("accent-without-train-speaker", std::move(no_train));
  }
  if (a.strategy == 3 && !a.held_out_accent) {
    report("missing-held-out-accent", {a.name()});
  }
  return out;
}

}  // namespace ctcdecode
