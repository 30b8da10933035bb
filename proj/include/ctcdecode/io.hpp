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

#ifndef CTCDECODE_IO_HPP_
#define CTCDECODE_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ctcdecode/metrics.hpp"
#include "ctcdecode/posterior_table.hpp"
#include "ctcdecode/splits.hpp"
#include "ctcdecode/tuning.hpp"

namespace ctcdecode {

using Json = nlohmann::json;

// Posterior files:
//   {"utterance_id": "u1", "alphabet": ["-", " ", "a"], "blank": 0,
//    "space": 1, "domain": "prob" | "logit", "frames": [[...], ...]}
// Logit frames are softmax-normalized per frame; probability frames are
// validated as-is.
PosteriorTable posterior_from_json(const Json& doc);
Json posterior_to_json(const PosteriorTable& table);
PosteriorTable load_posterior_file(const std::string& path);
void save_posterior_file(const PosteriorTable& table, const std::string& path);

// A file, or every *.json directly inside a directory, in filename order.
std::vector<std::string> list_posterior_files(const std::string& path);

// Transcript TSV: "id<TAB>text[<TAB>log_score]" per line. Lines starting with
// '#' are headers and are skipped on read.
struct TranscriptRow {
  std::string id;
  std::string text;
  std::optional<double> log_score;
};
std::vector<TranscriptRow> read_transcripts(const std::string& path);
std::string format_transcript_row(const TranscriptRow& row);

// Shortest round-trip decimal, always with a fraction or exponent ("0.0").
std::string format_real(double value);

// CSV with header utterance_id,speaker_id,accent,transcript_path,posterior_path.
// Relative transcript paths resolve against the manifest's directory; a
// readable transcript supplies the normalized prompt text.
Manifest load_manifest(const std::string& path);
Manifest parse_manifest_csv(const std::string& text,
                            const std::string& base_dir = ".");
std::string write_manifest_csv(const Manifest& manifest);

Json edit_ops_to_json(const EditOps& ops);
Json wer_report_to_json(const WerReport& report);
Json ops_delta_to_json(const OpsDelta& delta);
Json delta_wer_to_json(double baseline_wer, double new_wer);

Json grid_to_json(const Grid& grid);
Grid grid_from_json(const Json& doc);
Json tuning_report_to_json(const TuningReport& report);

Json split_to_json(const SplitAssignment& assignment);
SplitAssignment split_from_json(const Json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ctcdecode

#endif  // CTCDECODE_IO_HPP_
