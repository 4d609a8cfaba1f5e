// Copyright 2026 The cogsig Authors.
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

// cogsig command-line tool.
//
//   cogsig ingest <log.jsonl> [--out FILE]
//   cogsig analyze <log.jsonl> [--corpus FILE] [--out FILE]
//   cogsig synth --kind composition|transcription|forgery:<attack>
//                --words N --seed S [--out FILE] [--labels FILE]
//   cogsig verify <report.json> --salt-hex HEX [--out FILE]
//   cogsig verify --check <record.evr.json> --commitment HEX
//   cogsig consistency <record.evr.json...> [--baseline FILE]
//   cogsig consistency <record.evr.json...> --enroll FILE
//   cogsig sweep --r 1,5,10,20,50 --sessions N --seed S [--out FILE]
//
// Errors go to stderr as {"error": "<Code>", "message": "..."}. Usage
// errors exit with 2, all other errors with 1.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cogsig/analyzer.hpp"
#include "cogsig/clc.hpp"
#include "cogsig/complexity.hpp"
#include "cogsig/error.hpp"
#include "cogsig/event_log.hpp"
#include "cogsig/privacy_sweep.hpp"
#include "cogsig/synth.hpp"
#include "cogsig/verify.hpp"
#include "json.hpp"

namespace {

using cogsig::Error;
using cogsig::ErrorCode;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" writes to stdout.
void write_output(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

void print_error(std::string_view code, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

struct AnalyzeArgs {
  std::string log;
  std::string corpus;
  std::string out = "-";
  int context_length = cogsig::NgramModel::kDefaultContextLength;
  double alpha = cogsig::NgramModel::kDefaultAlpha;
  cogsig::AnalysisOptions options;
};

struct SynthArgs {
  std::string kind;
  std::size_t words = 1500;
  std::uint64_t seed = 1;
  std::uint64_t writer_seed = 0;
  std::string out = "-";
  std::string labels;
  std::string emit_corpus;
  bool privacy = false;
};

struct VerifyArgs {
  std::string report;
  std::string salt_hex;
  std::string created_at{cogsig::kDefaultCreatedAt};
  std::string out;
  std::string check;
  std::string commitment;
};

struct ConsistencyArgs {
  std::vector<std::string> records;
  std::string baseline;
  std::string enroll;
};

struct SweepArgs {
  std::string r = "1,5,10,20,50";
  std::size_t sessions = 400;
  std::uint64_t seed = 1;
  std::size_t words = 1500;
  std::string out = "-";
};

int run_ingest(const std::string& log, const std::string& out) {
  const cogsig::Session session = cogsig::parse_log(read_file(log));
  write_output(out, cogsig::serialize_log(session));
  return 0;
}

int run_analyze(const AnalyzeArgs& args) {
  const cogsig::Session session = cogsig::parse_log(read_file(args.log));
  std::unique_ptr<cogsig::NgramModel> owned;
  const cogsig::NgramModel* model = nullptr;
  if (!session.privacy_mode) {
    if (args.corpus.empty()) {
      model = &cogsig::reference_model();
    } else {
      owned = std::make_unique<cogsig::NgramModel>(cogsig::NgramModel::train(
          read_file(args.corpus), args.context_length, args.alpha));
      model = owned.get();
    }
  }
  const cogsig::SessionAnalysis analysis =
      cogsig::analyze_session(session, model, args.options);
  write_output(args.out, cogsig::report_to_json(analysis));
  return 0;
}

int run_synth(const SynthArgs& args) {
  if (!args.emit_corpus.empty()) {
    write_output(args.emit_corpus, cogsig::reference_corpus());
  }
  if (args.kind.empty()) {
    if (args.emit_corpus.empty()) {
      throw Error(ErrorCode::kInvalidConfig, "--kind is required");
    }
    return 0;
  }
  cogsig::SessionKind kind;
  cogsig::Attack attack = cogsig::Attack::kNone;
  if (args.kind == "composition") {
    kind = cogsig::SessionKind::kComposition;
  } else if (args.kind == "transcription") {
    kind = cogsig::SessionKind::kTranscription;
  } else if (args.kind.rfind("forgery:", 0) == 0) {
    kind = cogsig::SessionKind::kForgery;
    const auto parsed = cogsig::parse_attack(args.kind.substr(8));
    if (!parsed || *parsed == cogsig::Attack::kNone) {
      throw Error(ErrorCode::kInvalidConfig, "unknown attack '" + args.kind.substr(8) + "'");
    }
    attack = *parsed;
  } else {
    throw Error(ErrorCode::kInvalidConfig, "unknown kind '" + args.kind + "'");
  }
  if (args.words < 1) throw Error(ErrorCode::kInvalidConfig, "--words must be >= 1");

  const cogsig::WriterProfile writer =
      cogsig::draw_writer(args.writer_seed != 0 ? args.writer_seed : args.seed);
  const cogsig::SynthConfig config =
      cogsig::session_config(writer, kind, args.seed, args.words, attack);
  const cogsig::NgramModel& model = cogsig::reference_model();
  cogsig::SynthSession synth = cogsig::synthesize(kind, config, model);
  if (args.privacy) {
    const cogsig::ReconstructedText doc = cogsig::reconstruct_text(synth.session);
    synth.session = cogsig::to_privacy_mode(
        synth.session, cogsig::profile_document(model, std::u32string_view(doc.text)));
  }
  write_output(args.out, cogsig::serialize_log(synth.session));
  std::string labels = args.labels;
  if (labels.empty() && args.out != "-") labels = args.out + ".labels.json";
  if (!labels.empty()) write_output(labels, cogsig::serialize_ground_truth(synth));
  return 0;
}

std::string default_record_path(const std::string& report) {
  const std::string suffix = ".json";
  std::string stem = report;
  if (stem.size() > suffix.size() &&
      stem.compare(stem.size() - suffix.size(), suffix.size(), suffix) == 0) {
    stem.resize(stem.size() - suffix.size());
  }
  return stem + ".evr.json";
}

int run_verify(const VerifyArgs& args) {
  if (!args.check.empty()) {
    if (args.commitment.empty()) {
      throw Error(ErrorCode::kInvalidParameters, "--check needs --commitment");
    }
    const cogsig::EvidenceRecord record = cogsig::parse_evidence(read_file(args.check));
    const bool valid =
        cogsig::verify_commitment(record, cogsig::parse_digest_hex(args.commitment));
    std::cout << (valid ? "valid" : "invalid") << "\n";
    return valid ? 0 : kExitError;
  }
  if (args.report.empty() || args.salt_hex.empty()) {
    throw Error(ErrorCode::kInvalidParameters, "verify needs <report.json> and --salt-hex");
  }
  const cogsig::SessionAnalysis analysis = cogsig::report_from_json(read_file(args.report));
  const cogsig::EvidenceRecord record = cogsig::build_evidence(
      analysis, cogsig::parse_salt_hex(args.salt_hex), args.created_at);
  const std::string out = args.out.empty() ? default_record_path(args.report) : args.out;
  write_output(out, cogsig::canonical_serialization(record));
  std::cout << cogsig::to_hex(cogsig::commit(record)) << "\n";
  return 0;
}

int run_consistency(const ConsistencyArgs& args) {
  std::vector<cogsig::EvidenceRecord> records;
  for (const std::string& path : args.records) {
    records.push_back(cogsig::parse_evidence(read_file(path)));
  }
  if (!args.enroll.empty()) {
    write_output(args.enroll, cogsig::baseline_to_json(cogsig::calibrate_baseline(records)));
    return 0;
  }
  std::optional<cogsig::BaselineProfile> baseline;
  if (!args.baseline.empty()) baseline = cogsig::parse_baseline(read_file(args.baseline));
  const cogsig::ConsistencyResult result =
      cogsig::consistency_check(records, baseline ? &*baseline : nullptr);
  std::cout << cogsig::consistency_to_json(result);
  return 0;
}

int run_sweep(const SweepArgs& args) {
  const std::vector<int> r_values = cogsig::parse_resolution_list(args.r);
  const auto population = cogsig::make_population(args.sessions, args.seed, args.words);
  const auto rows = cogsig::sweep(r_values, population, cogsig::reference_model());
  write_output(args.out, cogsig::sweep_to_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cogsig: composition signatures from keystroke timing"};
  app.require_subcommand(1);

  std::string ingest_log, ingest_out = "-";
  auto* ingest = app.add_subcommand("ingest", "Validate and normalize an event log");
  ingest->add_option("log", ingest_log, "cogsig-v1 JSONL log")->required();
  ingest->add_option("-o,--out", ingest_out, "Output path ('-' for stdout)");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Analyze a session and print a report");
  analyze->add_option("log", analyze_args.log, "cogsig-v1 JSONL log")->required();
  analyze->add_option("--corpus", analyze_args.corpus,
                      "Reference corpus (default: built-in synthetic corpus)");
  analyze->add_option("--context-length", analyze_args.context_length,
                      "N-gram context length (1-3)");
  analyze->add_option("--alpha", analyze_args.alpha, "Add-alpha smoothing constant");
  analyze->add_option("--planning-ms", analyze_args.options.thresholds.planning_ms,
                      "Planning pause threshold");
  analyze->add_option("--burst-break-ms", analyze_args.options.thresholds.burst_break_ms,
                      "Burst break threshold");
  analyze->add_option("--threshold", analyze_args.options.clc_threshold,
                      "CLC decision threshold");
  analyze->add_option("-o,--out", analyze_args.out, "Output path ('-' for stdout)");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Synthesize a labeled session");
  synth->add_option("--kind", synth_args.kind,
                    "composition | transcription | forgery:<naive_slowdown|pause_map|"
                    "rehearsed_profile>");
  synth->add_option("--words", synth_args.words, "Word count");
  synth->add_option("--seed", synth_args.seed, "Session seed");
  synth->add_option("--writer-seed", synth_args.writer_seed,
                    "Writer seed (default: the session seed)");
  synth->add_option("-o,--out", synth_args.out, "Session output ('-' for stdout)");
  synth->add_option("--labels", synth_args.labels,
                    "Ground-truth label file (default: <out>.labels.json)");
  synth->add_option("--emit-corpus", synth_args.emit_corpus,
                    "Also write the built-in reference corpus to this path");
  synth->add_flag("--privacy", synth_args.privacy, "Emit a privacy-mode session");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Build an evidence record and commitment");
  verify->add_option("report", verify_args.report, "Report JSON from 'analyze'");
  verify->add_option("--salt-hex", verify_args.salt_hex, "16-byte salt as 32 hex digits");
  verify->add_option("--created-at", verify_args.created_at, "Record timestamp");
  verify->add_option("-o,--out", verify_args.out,
                     "Record path (default: <report stem>.evr.json)");
  verify->add_option("--check", verify_args.check, "Evidence record to check");
  verify->add_option("--commitment", verify_args.commitment, "Commitment hex for --check");

  ConsistencyArgs consistency_args;
  auto* consistency =
      app.add_subcommand("consistency", "Multi-session consistency check");
  consistency->add_option("records", consistency_args.records, "Evidence records")
      ->required();
  consistency->add_option("--baseline", consistency_args.baseline, "Baseline profile");
  consistency->add_option("--enroll", consistency_args.enroll,
                          "Write a baseline profile from the records instead");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Privacy-utility sweep over resolutions");
  sweep->add_option("--r", sweep_args.r, "Comma-separated resolutions in ms");
  sweep->add_option("--sessions", sweep_args.sessions, "Population size");
  sweep->add_option("--seed", sweep_args.seed, "Population seed");
  sweep->add_option("--words", sweep_args.words, "Words per session");
  sweep->add_option("-o,--out", sweep_args.out, "CSV output ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("Usage", e.what());
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*ingest) return run_ingest(ingest_log, ingest_out);
    if (*analyze) return run_analyze(analyze_args);
    if (*synth) return run_synth(synth_args);
    if (*verify) return run_verify(verify_args);
    if (*consistency) return run_consistency(consistency_args);
    if (*sweep) return run_sweep(sweep_args);
  } catch (const cogsig::Error& e) {
    print_error(cogsig::error_code_name(e.code()), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return kExitError;
  }
  return kExitUsage;
}
