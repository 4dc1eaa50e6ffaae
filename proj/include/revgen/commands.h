// Copyright 2026 The revgen Authors.
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

// Pipeline stages behind the command-line tool. Each command reads
// config.inputs, writes into config.output_dir and reports a one-line
// summary on `log`. Outputs are staged and renamed into place only after
// the whole command succeeded; failures throw revgen::Error and leave no
// outputs behind. Every command also writes its resolved configuration as
// run.conf.

#ifndef REVGEN_COMMANDS_H_
#define REVGEN_COMMANDS_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "revgen/config.h"

namespace revgen {

// Collects output files and moves them into place on commit().
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path dir);
  ~OutputSet();
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;

  void write(const std::string& name, std::string_view content);
  void commit();
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> names_;
  std::vector<std::filesystem::path> staged_;
  bool committed_ = false;
};

// .jsonl corpora, .json single records and .xml TEI manuscripts ->
// corpus.jsonl + ingest_report.json.
void cmd_ingest(const RunConfig& config, std::ostream& log);
// corpus -> labeled.jsonl
void cmd_label(const RunConfig& config, std::ostream& log);
// (labeled) corpus -> {module}.{split}.jsonl, split.json, manifest.json
void cmd_build(const RunConfig& config, std::ostream& log);
// (labeled) corpus -> split.json
void cmd_split(const RunConfig& config, std::ostream& log);
// corpus -> stats.json, stats.txt
void cmd_stats(const RunConfig& config, std::ostream& log);
// TEI, manuscript JSON or record JSON -> review.txt, review.md, review.json
void cmd_generate(const RunConfig& config, std::ostream& log);
// {"candidate", "reference"[, "method"]} JSON-Lines -> report.json, report.txt
void cmd_evaluate(const RunConfig& config, std::ostream& log);

// {"error": code name, "message": text} for stderr.
std::string error_json(const std::exception& e);

}  // namespace revgen

#endif  // REVGEN_COMMANDS_H_
