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

#include "revgen/commands.h"

#include <unistd.h>

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"
#include "revgen/backends.h"
#include "revgen/corpus.h"
#include "revgen/error.h"
#include "revgen/labeler.h"
#include "revgen/metrics.h"
#include "revgen/resources.h"
#include "revgen/sectioner.h"
#include "revgen/stats.h"
#include "revgen/tagger.h"
#include "revgen/text.h"

namespace revgen {

namespace fs = std::filesystem;
using nlohmann::json;

OutputSet::OutputSet(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir_.string() + ": " + ec.message());
}

OutputSet::~OutputSet() {
  if (committed_) return;
  std::error_code ec;
  for (const fs::path& p : staged_) fs::remove(p, ec);
}

void OutputSet::write(const std::string& name, std::string_view content) {
  const fs::path staged = dir_ / ("." + name + ".partial-" + std::to_string(::getpid()));
  staged_.push_back(staged);
  names_.push_back(name);
  std::ofstream out(staged, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + (dir_ / name).string());
}

void OutputSet::commit() {
  std::vector<fs::path> done;
  for (std::size_t i = 0; i < staged_.size(); ++i) {
    const fs::path target = dir_ / names_[i];
    std::error_code ec;
    fs::rename(staged_[i], target, ec);
    if (ec) {
      for (const fs::path& p : done) fs::remove(p, ec);
      throw Error(ErrorCode::kIoError, "cannot move " + target.string() + " into place");
    }
    done.push_back(target);
  }
  committed_ = true;
}

std::string error_json(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  const std::string code = err ? std::string(error_code_name(err->code())) : "Internal";
  return json{{"error", code}, {"message", e.what()}}.dump();
}

namespace {

// Tagger, labeler and classifier as configured.
class Toolkit {
 public:
  explicit Toolkit(const RunConfig& c) {
    if (!c.verb_lexicon_path.empty()) {
      own_tagger_ = std::make_unique<LexiconPosTagger>(read_file(c.verb_lexicon_path));
      tagger_ = own_tagger_.get();
    }
    if (!c.proposal_keywords_path.empty() || own_tagger_) {
      const std::string keywords = c.proposal_keywords_path.empty()
                                       ? std::string(resources::proposal_keywords())
                                       : read_file(c.proposal_keywords_path);
      own_labeler_ = std::make_unique<ReviewLabeler>(*tagger_, keywords);
      labeler_ = own_labeler_.get();
    }
    if (!c.section_lexicon_path.empty()) {
      own_classifier_ = std::make_unique<LexiconTitleClassifier>(read_file(c.section_lexicon_path));
      classifier_ = own_classifier_.get();
    }
  }
  const ReviewLabeler& labeler() const { return *labeler_; }
  const TitleClassifier& classifier() const { return *classifier_; }

 private:
  std::unique_ptr<LexiconPosTagger> own_tagger_;
  std::unique_ptr<ReviewLabeler> own_labeler_;
  std::unique_ptr<LexiconTitleClassifier> own_classifier_;
  const PosTagger* tagger_ = &LexiconPosTagger::builtin();
  const ReviewLabeler* labeler_ = &ReviewLabeler::builtin();
  const TitleClassifier* classifier_ = &LexiconTitleClassifier::builtin();
};

void require_inputs(const RunConfig& c, const char* command) {
  if (c.inputs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(command) + ": no input files given");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return in;
}

std::string lower_extension(const std::string& path) {
  return to_lower(fs::path(path).extension().string());
}

void check_unique(std::set<std::string>& ids, const std::string& id, const std::string& path) {
  if (!ids.insert(id).second) {
    throw Error(ErrorCode::kSchemaViolation, path + ": paper_id: duplicate id " + id);
  }
}

Corpus load_inputs(const RunConfig& c) {
  Corpus corpus;
  std::set<std::string> ids;
  for (const std::string& path : c.inputs) {
    for (PaperRecord& r : load_corpus_file(path)) {
      check_unique(ids, r.paper_id, path);
      corpus.push_back(std::move(r));
    }
  }
  return corpus;
}

std::vector<LabeledPaper> load_labeled_inputs(const RunConfig& c, const ReviewLabeler& labeler) {
  std::vector<LabeledPaper> out;
  std::set<std::string> ids;
  for (const std::string& path : c.inputs) {
    std::ifstream in = open_input(path);
    std::vector<LabeledPaper> papers;
    try {
      papers = load_labeled_corpus(in, labeler);
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
    for (LabeledPaper& p : papers) {
      check_unique(ids, p.record.paper_id, path);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::string jsonl(const std::vector<json>& rows) {
  std::string out;
  for (const json& r : rows) out += r.dump() + "\n";
  return out;
}

void finish(OutputSet& outputs, const RunConfig& c) {
  outputs.write("run.conf", config_to_text(c));
  outputs.commit();
}

}  // namespace

void cmd_ingest(const RunConfig& c, std::ostream& log) {
  require_inputs(c, "ingest");
  std::vector<json> rows;
  json issues = json::array();
  std::set<std::string> ids;
  auto add = [&](PaperRecord record, const std::string& path, std::size_t line) {
    if (!ids.insert(record.paper_id).second) {
      const std::string msg = "paper_id: duplicate id " + record.paper_id;
      if (c.strict) throw Error(ErrorCode::kSchemaViolation, path + ": " + msg);
      issues.push_back({{"file", path}, {"line", line}, {"error", "SchemaViolation"}, {"message", msg}});
      return;
    }
    rows.push_back(record_to_json(record));
  };
  for (const std::string& path : c.inputs) {
    const std::string ext = lower_extension(path);
    if (ext == ".xml" || ext == ".tei") {
      PaperRecord record;
      record.paper_id = fs::path(path).stem().string();
      try {
        record.manuscripts.push_back(parse_tei(read_file(path)));
      } catch (const Error& e) {
        if (c.strict || e.code() == ErrorCode::kIoError) throw Error(e.code(), path + ": " + e.what());
        issues.push_back({{"file", path}, {"line", 0}, {"error", error_code_name(e.code())}, {"message", e.what()}});
        continue;
      }
      add(std::move(record), path, 0);
    } else if (ext == ".json") {
      try {
        add(load_record(read_file(path)), path, 1);
      } catch (const Error& e) {
        if (c.strict || e.code() == ErrorCode::kIoError) throw Error(e.code(), path + ": " + e.what());
        issues.push_back({{"file", path}, {"line", 1}, {"error", error_code_name(e.code())}, {"message", e.what()}});
      }
    } else {
      std::ifstream in = open_input(path);
      IngestResult result;
      try {
        result = load_corpus(in, c.strict);
      } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
      }
      for (const IngestIssue& i : result.issues) {
        issues.push_back({{"file", path}, {"line", i.line}, {"error", i.error}, {"message", i.message}});
      }
      for (PaperRecord& r : result.records) add(std::move(r), path, 0);
    }
  }
  OutputSet outputs(c.output_dir);
  outputs.write("corpus.jsonl", jsonl(rows));
  const json report = {{"records", rows.size()}, {"errors", issues.size()}, {"issues", issues}};
  outputs.write("ingest_report.json", report.dump(2) + "\n");
  finish(outputs, c);
  log << "ingested " << rows.size() << " records, " << issues.size() << " errors\n";
}

void cmd_label(const RunConfig& c, std::ostream& log) {
  require_inputs(c, "label");
  const Toolkit kit(c);
  const Corpus corpus = load_inputs(c);
  const std::vector<LabeledPaper> labeled = label_corpus(corpus, kit.labeler(), c.jobs);
  std::vector<json> rows;
  std::size_t reviews = 0, questions = 0, proposals = 0, removed = 0;
  for (const LabeledPaper& p : labeled) {
    rows.push_back(labeled_paper_to_json(p));
    for (const auto& round : p.labels) {
      for (const LabeledReview& r : round) {
        ++reviews;
        questions += r.questions.size();
        proposals += r.proposals.size();
        removed += r.removed.size();
      }
    }
  }
  OutputSet outputs(c.output_dir);
  outputs.write("labeled.jsonl", jsonl(rows));
  finish(outputs, c);
  log << "labeled " << reviews << " reviews in " << labeled.size() << " papers: " << questions
      << " questions, " << proposals << " proposals, " << removed << " sentences removed\n";
}

namespace {

struct PreparedRecords {
  std::vector<ExperimentRecord> records;
  SplitDataset split;
};

PreparedRecords prepare(const RunConfig& c, const Toolkit& kit) {
  PreparedRecords out;
  out.records = filter_records(load_labeled_inputs(c, kit.labeler()), c.thresholds);
  std::vector<RecordKey> keys;
  keys.reserve(out.records.size());
  for (const ExperimentRecord& r : out.records) keys.push_back(r.key);
  out.split = split(std::move(keys), static_cast<std::uint64_t>(c.seed), c.ratios);
  return out;
}

}  // namespace

void cmd_build(const RunConfig& c, std::ostream& log) {
  require_inputs(c, "build");
  const Toolkit kit(c);
  const PreparedRecords prepared = prepare(c, kit);
  const FinetuneCorpus corpus = build_finetune_corpus(prepared.records, kit.classifier());

  std::map<RecordKey, std::string> split_of;
  for (const RecordKey& k : prepared.split.train) split_of[k] = "train";
  for (const RecordKey& k : prepared.split.validation) split_of[k] = "validation";
  for (const RecordKey& k : prepared.split.test) split_of[k] = "test";
  const char* const kSplits[] = {"train", "validation", "test"};

  OutputSet outputs(c.output_dir);
  json modules = json::object();
  for (Module m : kAllModules) {
    std::map<std::string, std::vector<json>> rows;
    for (const FinetunePair& p : corpus.pairs.at(m)) {
      rows[split_of.at({p.paper_id, p.reviewer})].push_back(pair_to_json(p));
    }
    json counts = json::object();
    for (const char* s : kSplits) {
      const std::vector<json>& r = rows[s];
      outputs.write(std::string(module_tag(m)) + "." + s + ".jsonl", jsonl(r));
      counts[s] = r.size();
    }
    counts["emitted"] = corpus.pairs.at(m).size();
    counts["dropped"] = corpus.dropped.at(m);
    modules[std::string(module_tag(m))] = counts;
  }
  const json manifest = {
      {"records", prepared.records.size()},
      {"seed", c.seed},
      {"ratios", {c.ratios.train, c.ratios.validation, c.ratios.test}},
      {"thresholds",
       {{"min_manuscript_words", c.thresholds.min_manuscript_words},
        {"min_review_words", c.thresholds.min_review_words}}},
      {"splits",
       {{"train", prepared.split.train.size()},
        {"validation", prepared.split.validation.size()},
        {"test", prepared.split.test.size()}}},
      {"modules", modules},
      {"emitted", corpus.emitted()},
      {"dropped", corpus.total_dropped()},
      {"files", outputs.names()}};
  outputs.write("split.json", split_to_json(prepared.split).dump(2) + "\n");
  outputs.write("manifest.json", manifest.dump(2) + "\n");
  finish(outputs, c);
  log << "built " << corpus.emitted() << " pairs from " << prepared.records.size() << " records ("
      << corpus.total_dropped() << " dropped); split " << prepared.split.train.size() << "/"
      << prepared.split.validation.size() << "/" << prepared.split.test.size() << "\n";
}

void cmd_split(const RunConfig& c, std::ostream& log) {
  require_inputs(c, "split");
  const Toolkit kit(c);
  const PreparedRecords prepared = prepare(c, kit);
  OutputSet outputs(c.output_dir);
  outputs.write("split.json", split_to_json(prepared.split).dump(2) + "\n");
  finish(outputs, c);
  log << "split " << prepared.records.size() << " records into " << prepared.split.train.size()
      << "/" << prepared.split.validation.size() << "/" << prepared.split.test.size() << "\n";
}

void cmd_stats(const RunConfig& c, std::ostream& log) {
  require_inputs(c, "stats");
  const CorpusStats stats = corpus_stats(load_inputs(c));
  const std::string table = stats_table(stats);
  OutputSet outputs(c.output_dir);
  outputs.write("stats.json", stats_to_json(stats).dump(2) + "\n");
  outputs.write("stats.txt", table);
  finish(outputs, c);
  log << table;
}

namespace {

ManuscriptDoc load_manuscript(const std::string& path) {
  const std::string text = read_file(path);
  const std::string ext = lower_extension(path);
  try {
    if (ext == ".xml" || ext == ".tei") return parse_tei(text);
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::kMalformedJson, "not valid JSON");
    if (j.is_object() && j.contains("paper_id")) {
      const PaperRecord record = record_from_json(j);
      return record.manuscripts.front();
    }
    return manuscript_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace

void cmd_generate(const RunConfig& c, std::ostream& log) {
  if (c.inputs.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "generate: expected exactly one manuscript input");
  }
  const Toolkit kit(c);
  const PrefixSet prefixes =
      c.prefixes_path.empty() ? PrefixSet::builtin() : PrefixSet::load(c.prefixes_path);
  GenerationParams params = c.params;
  params.seed = c.seed;
  params.validate();

  const ManuscriptDoc doc = load_manuscript(c.inputs.front());
  const ManuscriptSegments segments = segment_manuscript(doc, kit.classifier());
  BackendOptions options;
  options.timeout = std::chrono::milliseconds(c.backend_timeout_ms);
  const std::unique_ptr<Backend> backend = make_backend(c.backend, options);
  const GeneratedReview review = generate_review(*backend, segments, prefixes, params, c.mode);

  OutputSet outputs(c.output_dir);
  outputs.write("review.txt", assemble(review, OutputFormat::kPlainText) + "\n");
  outputs.write("review.md", assemble(review, OutputFormat::kMarkdown) + "\n");
  outputs.write("review.json", assemble(review, OutputFormat::kJson) + "\n");
  finish(outputs, c);
  log << "generated " << review.modules.size() << " module(s) in " << mode_name(review.mode)
      << " mode with backend " << review.backend_id << "\n";
}

void cmd_evaluate(const RunConfig& c, std::ostream& log) {
  require_inputs(c, "evaluate");
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> groups;
  for (const std::string& path : c.inputs) {
    std::ifstream in = open_input(path);
    const std::string stem = fs::path(path).stem().string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (trim(line).empty()) continue;
      const std::string where = path + ": line " + std::to_string(line_no) + ": ";
      const json j = json::parse(line, nullptr, false);
      if (j.is_discarded()) throw Error(ErrorCode::kMalformedJson, where + "not valid JSON");
      if (!j.is_object() || !j.contains("candidate") || !j["candidate"].is_string() ||
          !j.contains("reference") || !j["reference"].is_string()) {
        throw Error(ErrorCode::kSchemaViolation, where + "expected string fields candidate and reference");
      }
      std::string method = stem;
      if (auto m = j.find("method"); m != j.end()) {
        if (!m->is_string()) throw Error(ErrorCode::kSchemaViolation, where + "method: expected string");
        method = m->get<std::string>();
      }
      if (!groups.count(method)) order.push_back(method);
      groups[method].emplace_back(j["candidate"].get<std::string>(), j["reference"].get<std::string>());
    }
  }
  if (order.empty()) throw Error(ErrorCode::kEmptyEvaluation, "evaluate: no candidate/reference pairs");
  EvalReport report;
  for (const std::string& method : order) {
    report.methods.emplace_back(method, evaluate_corpus(groups[method], c.jobs));
  }
  const std::string table = report_table(report);
  OutputSet outputs(c.output_dir);
  outputs.write("report.json", report_to_json(report).dump(2) + "\n");
  outputs.write("report.txt", table);
  finish(outputs, c);
  log << table;
}

}  // namespace revgen
