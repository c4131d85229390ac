// tools/rarewer_main.cc

// Copyright 2026  Rarewer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rarewer/beam_decode.h"
#include "rarewer/corpus_filter.h"
#include "rarewer/error.h"
#include "rarewer/manifest_io.h"
#include "rarewer/metrics.h"
#include "rarewer/parallel.h"
#include "rarewer/rareword.h"
#include "rarewer/report.h"
#include "rarewer/scorers.h"
#include "rarewer/text_norm.h"
#include "rarewer/version.h"

namespace {

using namespace rarewer;

void WriteTextFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kFileUnwritable, "cannot write: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kFileUnwritable, "cannot write: " + path);
  }
}

Manifest ReadManifestReporting(const std::string &path, bool strict) {
  ReadResult result = ReadManifest(path, strict);
  for (const IngestError &err : result.errors) {
    std::cerr << path << ": " << FormatIngestError(err) << "\n";
  }
  return std::move(result.manifest);
}

// --rare-list values use `name=path`; a bare path keeps the name stored in
// the file (or its stem).
RareWordSet LoadRareListArg(const std::string &arg) {
  size_t eq = arg.find('=');
  if (eq == std::string::npos) {
    return LoadRareList(arg);
  }
  std::string name = arg.substr(0, eq);
  std::string path = arg.substr(eq + 1);
  RareWordSet loaded = LoadRareList(path);
  return RareWordSet::Create(name, loaded.words(), loaded.source(),
                             loaded.threshold());
}

struct ScoreArgs {
  std::string manifest;
  std::vector<std::string> rare_lists;
  std::string out;
  std::string format = "md";
  std::string dataset;
  std::string system = "system";
  int workers = 1;
  bool strict = false;
  bool stamp = false;
  bool expand_abbrev = false;
  bool remove_disfluencies = false;
};

int RunScore(const ScoreArgs &args) {
  Manifest manifest = ReadManifestReporting(args.manifest, args.strict);
  if (manifest.records.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "manifest has no records: " + args.manifest);
  }

  std::vector<RareWordSet> rare_sets;
  rare_sets.reserve(args.rare_lists.size());
  for (const std::string &arg : args.rare_lists) {
    rare_sets.push_back(LoadRareListArg(arg));
  }

  NormalizationConfig config;
  config.expand_common_abbreviations = args.expand_abbrev;
  config.remove_disfluency_markers = args.remove_disfluencies;

  ManifestScore scores =
      ScoreRecords(manifest.records, rare_sets, config, args.workers);
  if (!scores.skipped_ids.empty()) {
    std::cerr << "skipped " << scores.skipped_ids.size()
              << " record(s) without hyp_text\n";
  }

  std::string dataset = args.dataset;
  if (dataset.empty()) {
    dataset = std::filesystem::path(args.manifest).stem().string();
  }
  MetricReport report = Aggregate(std::move(scores.scored), dataset);
  report.system_name = args.system;
  report.skipped_missing_hyp = static_cast<int64_t>(scores.skipped_ids.size());
  report.skipped_ids = std::move(scores.skipped_ids);

  std::string rendered;
  if (args.format == "md") {
    rendered = RenderMarkdown(report, args.stamp);
  } else if (args.format == "csv") {
    rendered = RenderCsv(report, args.stamp);
  } else {
    rendered = ReportToJson(report);
  }
  WriteTextFile(args.out, rendered);
  return 0;
}

struct FilterArgs {
  std::string manifest;
  std::string out;
  std::string report_out;
  FilterConfig config;
  int workers = 1;
  bool strict = false;
};

int RunFilter(const FilterArgs &args) {
  Manifest manifest = ReadManifestReporting(args.manifest, args.strict);
  args.config.Validate();

  // Filter decisions are record-local, so shards run independently and the
  // counters merge by addition; shard order keeps the output a subsequence
  // of the input.
  size_t num_shards =
      std::max<size_t>(1, std::min<size_t>(args.workers,
                                           manifest.records.size()));
  std::vector<Manifest> shards = Shard(manifest, num_shards);
  std::vector<FilterResult> results(shards.size());
  ParallelFor(shards.size(), args.workers, [&](size_t s) {
    results[s] = RunPipeline(shards[s].records, args.config);
  });

  Manifest passed;
  passed.source_path = manifest.source_path;
  passed.schema_version = manifest.schema_version;
  FilterReport report;
  report.config = args.config;
  for (FilterResult &part : results) {
    report.Merge(part.report);
    passed.records.insert(passed.records.end(),
                          std::make_move_iterator(part.passed.begin()),
                          std::make_move_iterator(part.passed.end()));
  }
  WriteManifest(passed, args.out);

  std::cerr << report.Summary();
  if (!args.report_out.empty()) {
    WriteTextFile(args.report_out, report.ToJsonLine() + "\n");
  }
  return 0;
}

struct ExtractArgs {
  std::string manifest;
  std::string out;
  FrequencyExtractOptions options;
  bool strict = false;
};

int RunExtractRare(const ExtractArgs &args) {
  Manifest manifest = ReadManifestReporting(args.manifest, args.strict);
  if (manifest.records.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "manifest has no records: " + args.manifest);
  }
  std::vector<TokenSeq> refs;
  refs.reserve(manifest.records.size());
  for (const UtteranceRecord &rec : manifest.records) {
    refs.push_back(Tokenize(rec.primary_text, NormalizationMode::kNormalized));
  }
  RareWordSet set = ExtractByFrequency(refs, args.options);
  SaveRareList(set, args.out);
  std::cerr << "extracted " << set.size() << " rare word(s)\n";
  return 0;
}

struct DecodeSimArgs {
  std::string scorer;
  DecodeConfig config;
};

int RunDecodeSim(const DecodeSimArgs &args) {
  TableScorer scorer = TableScorer::FromJsonFile(args.scorer);
  DecodeResult result = BeamSearch(scorer, args.config);
  if (result.all_pruned) {
    std::cerr << "warning: a decode step masked every expansion; returning "
                 "best hypotheses found\n";
  }
  for (size_t i = 0; i < result.hypotheses.size(); ++i) {
    const BeamHypothesis &hyp = result.hypotheses[i];
    std::printf("%zu\t%.6f\t%s\n", i + 1, hyp.log_prob,
                scorer.Detokenize(hyp.tokens).c_str());
  }
  return 0;
}

struct NormalizeArgs {
  std::string mode = "normalized";
  std::string text;
  bool text_given = false;
  std::string abbrev_table;
  bool expand_abbrev = false;
  bool remove_disfluencies = false;
};

int RunNormalize(const NormalizeArgs &args) {
  NormalizationMode mode = args.mode == "orthographic"
                               ? NormalizationMode::kOrthographic
                               : NormalizationMode::kNormalized;
  NormalizationConfig config;
  config.expand_common_abbreviations = args.expand_abbrev;
  config.remove_disfluency_markers = args.remove_disfluencies;

  AbbreviationTable table;
  const AbbreviationTable *table_ptr = nullptr;
  if (!args.abbrev_table.empty()) {
    table = AbbreviationTable::FromFile(args.abbrev_table);
    table_ptr = &table;
  }

  auto emit = [&](const std::string &line) {
    std::cout << JoinTokens(Tokenize(line, mode, config, table_ptr)) << "\n";
  };
  if (args.text_given) {
    emit(args.text);
  } else {
    std::string line;
    while (std::getline(std::cin, line)) emit(line);
  }
  return 0;
}

struct ReportArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string format = "md";
  bool stamp = false;
};

int RunReport(const ReportArgs &args) {
  MetricReport a = ReportFromJsonFile(args.inputs[0]);
  std::string rendered;
  if (args.inputs.size() == 2) {
    MetricReport b = ReportFromJsonFile(args.inputs[1]);
    rendered = args.format == "md" ? RenderComparisonMarkdown(a, b, args.stamp)
                                   : RenderComparisonCsv(a, b, args.stamp);
  } else {
    rendered = args.format == "md" ? RenderMarkdown(a, args.stamp)
                                   : RenderCsv(a, args.stamp);
  }
  WriteTextFile(args.out, rendered);
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"rare-word ASR evaluation toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ScoreArgs score_args;
  CLI::App *score = app.add_subcommand(
      "score", "Score hypothesis transcripts against references");
  score->add_option("--manifest", score_args.manifest, "input manifest (JSONL)")
      ->required();
  score->add_option("--rare-list", score_args.rare_lists,
                    "rare-word list as name=path (repeatable)");
  score->add_option("--out", score_args.out, "report output path")->required();
  score->add_option("--format", score_args.format, "report format")
      ->check(CLI::IsMember({"md", "csv", "json"}));
  score->add_option("--dataset", score_args.dataset,
                    "dataset label (default: manifest stem)");
  score->add_option("--system", score_args.system, "system label");
  score->add_option("--workers", score_args.workers, "scoring worker threads")
      ->check(CLI::PositiveNumber);
  score->add_flag("--strict", score_args.strict,
                  "abort on the first manifest ingestion error");
  score->add_flag("--stamp", score_args.stamp, "add a generation timestamp");
  score->add_flag("--expand-abbrev", score_args.expand_abbrev,
                  "expand abbreviations during normalization");
  score->add_flag("--remove-disfluencies", score_args.remove_disfluencies,
                  "drop disfluency markers during normalization");

  FilterArgs filter_args;
  CLI::App *filter = app.add_subcommand(
      "filter", "Run the duration/simplicity/WER curation pipeline");
  filter->add_option("--manifest", filter_args.manifest, "input manifest")
      ->required();
  filter->add_option("--out", filter_args.out, "passed-records manifest")
      ->required();
  filter->add_option("--report-out", filter_args.report_out,
                     "filter report JSON path");
  filter->add_option("--wer-threshold", filter_args.config.wer_threshold,
                     "reject when label-agreement WER exceeds this");
  filter->add_option("--min-tokens", filter_args.config.min_tokens,
                     "minimum normalized token count");
  filter->add_option("--min-unique-ratio", filter_args.config.min_unique_ratio,
                     "minimum unique/total token ratio");
  filter->add_option("--max-duration-s", filter_args.config.max_duration_s,
                     "reject segments exceeding this many seconds");
  filter->add_option("--workers", filter_args.workers,
                     "filtering worker threads (shard-parallel)")
      ->check(CLI::PositiveNumber);
  filter->add_flag("--strict", filter_args.strict,
                   "abort on the first manifest ingestion error");

  ExtractArgs extract_args;
  CLI::App *extract = app.add_subcommand(
      "extract-rare", "Derive a rare-word list from corpus frequencies");
  extract->add_option("--manifest", extract_args.manifest, "input manifest")
      ->required();
  extract->add_option("--out", extract_args.out, "rare list output path")
      ->required();
  extract->add_option("--max-occurrences",
                      extract_args.options.max_occurrences,
                      "keep tokens occurring at most this often")
      ->check(CLI::PositiveNumber);
  extract->add_option("--min-length", extract_args.options.min_length,
                      "drop tokens shorter than this many codepoints (0 "
                      "disables)");
  extract->add_flag("--keep-numerals", extract_args.options.keep_numerals,
                    "keep purely numeric tokens");
  extract->add_option("--name", extract_args.options.name, "rare set name");
  extract->add_flag("--strict", extract_args.strict,
                    "abort on the first manifest ingestion error");

  DecodeSimArgs decode_args;
  CLI::App *decode = app.add_subcommand(
      "decode-sim", "Beam-search a table scorer and print ranked hypotheses");
  decode->add_option("--scorer", decode_args.scorer,
                     "table scorer JSON (per-prefix distributions)")
      ->required();
  decode->add_option("--beam-size", decode_args.config.beam_size, "beam size")
      ->check(CLI::PositiveNumber);
  decode->add_option("--no-repeat-n", decode_args.config.no_repeat_n,
                     "block repeated n-grams of this size (0 disables)");
  decode->add_option("--max-len", decode_args.config.max_len,
                     "maximum hypothesis length")
      ->check(CLI::PositiveNumber);

  NormalizeArgs norm_args;
  CLI::App *normalize = app.add_subcommand(
      "normalize", "Tokenize text in orthographic or normalized mode");
  normalize->add_option("--mode", norm_args.mode, "tokenization mode")
      ->check(CLI::IsMember({"orthographic", "normalized"}));
  normalize->add_option("--text", norm_args.text,
                        "text to tokenize (default: read stdin lines)");
  normalize->add_option("--abbrev-table", norm_args.abbrev_table,
                        "abbreviation table path (default: builtin)");
  normalize->add_flag("--expand-abbrev", norm_args.expand_abbrev,
                      "expand abbreviations");
  normalize->add_flag("--remove-disfluencies", norm_args.remove_disfluencies,
                      "drop disfluency markers");

  ReportArgs report_args;
  CLI::App *report = app.add_subcommand(
      "report", "Render one report, or compare two side by side");
  report->add_option("inputs", report_args.inputs,
                     "one or two report JSON files")
      ->expected(1, 2)
      ->required();
  report->add_option("--out", report_args.out, "rendered output path")
      ->required();
  report->add_option("--format", report_args.format, "output format")
      ->check(CLI::IsMember({"md", "csv"}));
  report->add_flag("--stamp", report_args.stamp,
                   "add a generation timestamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (score->parsed()) return RunScore(score_args);
    if (filter->parsed()) return RunFilter(filter_args);
    if (extract->parsed()) return RunExtractRare(extract_args);
    if (decode->parsed()) return RunDecodeSim(decode_args);
    if (normalize->parsed()) {
      norm_args.text_given = normalize->count("--text") > 0;
      return RunNormalize(norm_args);
    }
    if (report->parsed()) return RunReport(report_args);
  } catch (const Error &e) {
    std::cerr << "error: " << ErrorCodeName(e.code()) << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
