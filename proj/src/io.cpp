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

#include "ctcdecode/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ctcdecode/error.hpp"

namespace ctcdecode {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInput("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidInput("cannot write '" + path + "'");
  }
  out << contents;
  if (!out) {
    throw InvalidInput("failed writing '" + path + "'");
  }
}

// ---------------------------------------------------------------------------
// Posterior files

PosteriorTable posterior_from_json(const Json& doc) {
  try {
    const auto id = doc.at("utterance_id").get<std::string>();
    auto alphabet = std::make_shared<const Alphabet>(
        doc.at("alphabet").get<std::vector<std::string>>(),
        doc.at("blank").get<int>(), doc.at("space").get<int>());
    const auto domain = doc.value("domain", std::string("prob"));
    if (domain != "prob" && domain != "logit") {
      throw InvalidInput("domain must be \"prob\" or \"logit\"");
    }
    const auto& frames = doc.at("frames");
    if (!frames.is_array()) {
      throw InvalidInput("frames must be an array");
    }
    PosteriorTable::Matrix m(static_cast<Eigen::Index>(frames.size()),
                             alphabet->size());
    for (std::size_t t = 0; t < frames.size(); ++t) {
      const auto& row = frames[t];
      if (!row.is_array() ||
          row.size() != static_cast<std::size_t>(alphabet->size())) {
        throw InvalidInput("frame " + std::to_string(t) + " has width " +
                           std::to_string(row.is_array() ? row.size() : 0) +
                           ", alphabet has " +
                           std::to_string(alphabet->size()) + " symbols");
      }
      for (std::size_t v = 0; v < row.size(); ++v) {
        m(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(v)) =
            row[v].get<double>();
      }
    }
    if (domain == "logit") {
      return PosteriorTable::from_logits(id, m, std::move(alphabet));
    }
    return PosteriorTable(id, std::move(m), std::move(alphabet));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed posterior document: ") +
                       e.what());
  }
}

Json posterior_to_json(const PosteriorTable& table) {
  Json frames = Json::array();
  for (Eigen::Index t = 0; t < table.num_frames(); ++t) {
    Json row = Json::array();
    for (Eigen::Index v = 0; v < table.num_symbols(); ++v) {
      row.push_back(table.frames()(t, v));
    }
    frames.push_back(std::move(row));
  }
  return Json{{"utterance_id", table.utterance_id()},
              {"alphabet", table.alphabet().symbols()},
              {"blank", table.alphabet().blank()},
              {"space", table.alphabet().space()},
              {"domain", "prob"},
              {"frames", std::move(frames)}};
}

PosteriorTable load_posterior_file(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  try {
    return posterior_from_json(doc);
  } catch (const Error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void save_posterior_file(const PosteriorTable& table, const std::string& path) {
  write_file(path, posterior_to_json(table).dump() + "\n");
}

std::vector<std::string> list_posterior_files(const std::string& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) {
    return {path};
  }
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Transcript TSV

std::string format_real(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::vector<TranscriptRow> read_transcripts(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<TranscriptRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw InvalidInput(path + ":" + std::to_string(lineno) +
                         ": expected id<TAB>text");
    }
    TranscriptRow row;
    row.id = line.substr(0, tab);
    const auto rest = line.substr(tab + 1);
    const auto tab2 = rest.find('\t');
    row.text = rest.substr(0, tab2);
    if (tab2 != std::string::npos) {
      const auto field = rest.substr(tab2 + 1);
      double v = 0.0;
      auto [p, e] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (e == std::errc() && p == field.data() + field.size()) {
        row.log_score = v;
      } else if (field == "-inf") {
        row.log_score = -INFINITY;
      } else {
        throw InvalidInput(path + ":" + std::to_string(lineno) +
                           ": malformed score field");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_transcript_row(const TranscriptRow& row) {
  std::string out = row.id + '\t' + row.text;
  if (row.log_score) {
    out += '\t' + format_real(*row.log_score);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Manifest CSV

namespace {

constexpr const char* kManifestHeader[] = {"utterance_id", "speaker_id",
                                           "accent", "transcript_path",
                                           "posterior_path"};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
        ++i;
      }
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) {
    throw InvalidInput("manifest: unterminated quoted field");
  }
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + '"';
}

}  // namespace

Manifest parse_manifest_csv(const std::string& text,
                            const std::string& base_dir) {
  const auto rows = parse_csv(text);
  if (rows.empty()) {
    throw InvalidInput("manifest: missing header");
  }
  const auto& header = rows.front();
  if (header.size() != 5 ||
      !std::equal(header.begin(), header.end(), std::begin(kManifestHeader))) {
    throw InvalidInput(
        "manifest: header must be "
        "utterance_id,speaker_id,accent,transcript_path,posterior_path");
  }
  std::vector<ManifestRow> out;
  out.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 5) {
      throw InvalidInput("manifest line " + std::to_string(i + 1) +
                         ": expected 5 fields, got " +
                         std::to_string(r.size()));
    }
    ManifestRow row{r[0], r[1], r[2], r[3], r[4], {}};
    if (!row.transcript_path.empty()) {
      fs::path p(row.transcript_path);
      if (p.is_relative()) {
        p = fs::path(base_dir) / p;
      }
      std::error_code ec;
      if (fs::is_regular_file(p, ec)) {
        row.prompt = normalize_prompt(read_file(p.string()));
      }
    }
    out.push_back(std::move(row));
  }
  return Manifest(std::move(out));
}

Manifest load_manifest(const std::string& path) {
  return parse_manifest_csv(read_file(path),
                            fs::path(path).parent_path().string());
}

std::string write_manifest_csv(const Manifest& manifest) {
  std::string out =
      "utterance_id,speaker_id,accent,transcript_path,posterior_path\n";
  for (const auto& r : manifest.rows()) {
    out += csv_field(r.utterance_id) + ',' + csv_field(r.speaker_id) + ',' +
           csv_field(r.accent) + ',' + csv_field(r.transcript_path) + ',' +
           csv_field(r.posterior_path) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json edit_ops_to_json(const EditOps& ops) {
  return Json{{"insertions", ops.insertions},
              {"deletions", ops.deletions},
              {"substitutions", ops.substitutions},
              {"total", ops.total()}};
}

namespace {

Json rate(double value) {
  return std::isfinite(value) ? Json(value) : Json(nullptr);
}

Json percent2(double fraction) {
  if (!std::isfinite(fraction)) {
    return nullptr;
  }
  return std::round(fraction * 10000.0) / 100.0;
}

}  // namespace

Json wer_report_to_json(const WerReport& report) {
  Json rows = Json::array();
  for (const auto& u : report.utterances) {
    Json row{{"id", u.id},
             {"gold", u.gold},
             {"hypothesis", u.hypothesis},
             {"gold_words", u.gold_words},
             {"wer", rate(u.wer)},
             {"word_ops", edit_ops_to_json(u.word_ops)},
             {"char_ops", edit_ops_to_json(u.char_ops)}};
    if (u.empty_reference) {
      row["warning"] = "empty reference with non-empty hypothesis";
    }
    rows.push_back(std::move(row));
  }
  return Json{{"aggregate",
               {{"wer", rate(report.wer)},
                {"wer_percent", percent2(report.wer)},
                {"gold_words", report.gold_words},
                {"utterances", report.utterances.size()},
                {"word_ops", edit_ops_to_json(report.word_ops)},
                {"char_ops", edit_ops_to_json(report.char_ops)}}},
              {"utterances", std::move(rows)},
              {"single_edit_utterances", report.single_edit_ids()}};
}

Json ops_delta_to_json(const OpsDelta& delta) {
  auto change = [](const OpChange& c) {
    return Json{{"baseline", c.baseline},
                {"treatment", c.treatment},
                {"absolute", c.absolute},
                {"percent", c.percent ? Json(*c.percent) : Json(nullptr)}};
  };
  return Json{{"insertions", change(delta.insertions)},
              {"deletions", change(delta.deletions)},
              {"substitutions", change(delta.substitutions)}};
}

Json delta_wer_to_json(double baseline_wer, double new_wer) {
  Json out{{"baseline_wer_percent", percent2(baseline_wer)},
           {"wer_percent", percent2(new_wer)}};
  // Relative change is computed from the rounded percentages, as WER tables
  // report them.
  const double base = std::round(baseline_wer * 10000.0) / 100.0;
  const double next = std::round(new_wer * 10000.0) / 100.0;
  if (std::isfinite(base) && std::isfinite(next) && base > 0.0) {
    const auto d = delta_wer(base, next);
    out["absolute"] = d.absolute;
    out["relative_percent"] = d.relative_percent;
  } else {
    out["absolute"] = nullptr;
    out["relative_percent"] = nullptr;
  }
  return out;
}

Json grid_to_json(const Grid& grid) {
  return Json{{"alphas", grid.alphas},
              {"betas", grid.betas},
              {"beam_widths", grid.beam_widths}};
}

Grid grid_from_json(const Json& doc) {
  try {
    Grid g{doc.at("alphas").get<std::vector<double>>(),
           doc.at("betas").get<std::vector<double>>(),
           doc.at("beam_widths").get<std::vector<int>>()};
    g.validate();
    return g;
  } catch (const Json::exception& e) {
    throw InvalidParams(std::string("malformed grid: ") + e.what());
  }
}

Json tuning_report_to_json(const TuningReport& report) {
  auto row_json = [](const GridRow& r) {
    return Json{{"alpha", r.alpha},
                {"beta", r.beta},
                {"beam_width", r.beam_width},
                {"wer", rate(r.wer)}};
  };
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(row_json(r));
  }
  return Json{{"grid", grid_to_json(report.grid)},
              {"rows", std::move(rows)},
              {"best", row_json(report.best)}};
}

Json split_to_json(const SplitAssignment& a) {
  Json assignments = Json::object();
  for (const auto& [id, part] : a.assignments) {
    assignments[id] = std::string(to_string(part));
  }
  Json doc{{"strategy", a.strategy},
           {"fold", a.fold},
           {"seed", a.seed},
           {"assignments", std::move(assignments)},
           {"test_zeroshot", Json(std::vector<std::string>(
                                 a.test_zeroshot.begin(), a.test_zeroshot.end()))},
           {"held_out_speakers", a.held_out_speakers}};
  if (a.held_out_accent) {
    doc["held_out_accent"] = *a.held_out_accent;
  }
  if (a.accent) {
    doc["accent"] = *a.accent;
  }
  return doc;
}

SplitAssignment split_from_json(const Json& doc) {
  try {
    SplitAssignment a;
    a.strategy = doc.at("strategy").get<int>();
    a.fold = doc.at("fold").get<int>();
    a.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& [id, part] : doc.at("assignments").items()) {
      auto p = partition_from_string(part.get<std::string>());
      if (!p) {
        throw InvalidInput("unknown partition for '" + id + "'");
      }
      a.assignments.emplace(id, *p);
    }
    for (const auto& id : doc.value("test_zeroshot", Json::array())) {
      a.test_zeroshot.insert(id.get<std::string>());
    }
    a.held_out_speakers = doc.value("held_out_speakers",
                                    std::vector<std::string>{});
    if (doc.contains("held_out_accent")) {
      a.held_out_accent = doc["held_out_accent"].get<std::string>();
    }
    if (doc.contains("accent")) {
      a.accent = doc["accent"].get<std::string>();
    }
    return a;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed split document: ") + e.what());
  }
}

}  // namespace ctcdecode
