// core/src/report.cc

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

#include "rarewer/report.h"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "rarewer/error.h"

namespace rarewer {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char kUndefined[] = "undefined";

struct MetricRow {
  std::string name;  // "O-WER", "N-WER", "R-WER <set>"
  std::optional<double> value;
};

std::vector<MetricRow> MetricRows(const MetricReport &report) {
  std::vector<MetricRow> rows;
  rows.push_back({"O-WER", report.o_wer});
  rows.push_back({"N-WER", report.n_wer});
  for (const auto &[set_name, rate] : report.r_wer) {
    rows.push_back({"R-WER " + set_name, rate});
  }
  return rows;
}

std::string MdEscape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string CsvEscape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string CellOf(const std::optional<double> &rate) {
  return rate ? FormatPercent(*rate) : kUndefined;
}

std::string StampLineMarkdown() {
  char buf[64];
  std::time_t now = std::time(nullptr);
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return std::string("<!-- generated_at: ") + buf + " -->\n\n";
}

std::string StampLineCsv() {
  char buf[64];
  std::time_t now = std::time(nullptr);
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return std::string("# generated_at=") + buf + "\n";
}

void RequireComparable(const MetricReport &a, const MetricReport &b) {
  if (a.dataset_name != b.dataset_name) {
    throw Error(ErrorCode::kMetricMismatch,
                "reports cover different datasets: \"" + a.dataset_name +
                    "\" vs \"" + b.dataset_name + "\"");
  }
  auto set_names = [](const MetricReport &r) {
    std::vector<std::string> names;
    for (const auto &[name, rate] : r.r_wer) names.push_back(name);
    return names;
  };
  if (set_names(a) != set_names(b)) {
    throw Error(ErrorCode::kMetricMismatch,
                "reports cover different rare-word sets");
  }
}

ordered_json CountsToJson(const ErrorCounts &c) {
  ordered_json j;
  j["correct"] = c.correct;
  j["substitutions"] = c.substitutions;
  j["deletions"] = c.deletions;
  j["insertions"] = c.insertions;
  j["ref_tokens"] = c.ref_tokens;
  return j;
}

ErrorCounts CountsFromJson(const ordered_json &j) {
  ErrorCounts c;
  c.correct = j.value("correct", static_cast<int64_t>(0));
  c.substitutions = j.value("substitutions", static_cast<int64_t>(0));
  c.deletions = j.value("deletions", static_cast<int64_t>(0));
  c.insertions = j.value("insertions", static_cast<int64_t>(0));
  c.ref_tokens = j.value("ref_tokens", static_cast<int64_t>(0));
  return c;
}

ordered_json RareCountsToJson(const RareErrorCounts &c) {
  ordered_json j;
  j["rare_ref_tokens"] = c.rare_ref_tokens;
  j["rare_substitutions"] = c.rare_substitutions;
  j["rare_deletions"] = c.rare_deletions;
  j["rare_insertions"] = c.rare_insertions;
  return j;
}

RareErrorCounts RareCountsFromJson(const ordered_json &j) {
  RareErrorCounts c;
  c.rare_ref_tokens = j.value("rare_ref_tokens", static_cast<int64_t>(0));
  c.rare_substitutions =
      j.value("rare_substitutions", static_cast<int64_t>(0));
  c.rare_deletions = j.value("rare_deletions", static_cast<int64_t>(0));
  c.rare_insertions = j.value("rare_insertions", static_cast<int64_t>(0));
  return c;
}

}  // namespace

std::string FormatPercent(double ratio) {
  // nearbyint under the default FE_TONEAREST mode rounds half to even.
  double tenths = std::nearbyint(ratio * 1000.0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", tenths / 10.0);
  return buf;
}

std::string RenderMarkdown(const MetricReport &report, bool stamp) {
  std::string out;
  if (stamp) out += StampLineMarkdown();
  out += "| Dataset | Metric | " + MdEscape(report.system_name) + " |\n";
  out += "| --- | --- | --- |\n";
  for (const MetricRow &row : MetricRows(report)) {
    out += "| " + MdEscape(report.dataset_name) + " | " + row.name +
           " (%) | " + CellOf(row.value) + " |\n";
  }
  return out;
}

std::string RenderCsv(const MetricReport &report, bool stamp) {
  std::string out;
  if (stamp) out += StampLineCsv();
  out += "dataset,metric,system,value_percent\n";
  for (const MetricRow &row : MetricRows(report)) {
    out += CsvEscape(report.dataset_name) + "," + CsvEscape(row.name) + "," +
           CsvEscape(report.system_name) + "," + CellOf(row.value) + "\n";
  }
  return out;
}

std::string RenderComparisonMarkdown(const MetricReport &a,
                                     const MetricReport &b, bool stamp) {
  RequireComparable(a, b);
  std::vector<MetricRow> rows_a = MetricRows(a);
  std::vector<MetricRow> rows_b = MetricRows(b);

  std::string out;
  if (stamp) out += StampLineMarkdown();
  out += "| Dataset | Metric | " + MdEscape(a.system_name) + " | " +
         MdEscape(b.system_name) + " |\n";
  out += "| --- | --- | --- | --- |\n";
  for (size_t i = 0; i < rows_a.size(); ++i) {
    std::string cell_a = CellOf(rows_a[i].value);
    std::string cell_b = CellOf(rows_b[i].value);
    // Lower is better; bold only a strict winner with both sides defined.
    if (rows_a[i].value && rows_b[i].value) {
      if (*rows_a[i].value < *rows_b[i].value) {
        cell_a = "**" + cell_a + "**";
      } else if (*rows_b[i].value < *rows_a[i].value) {
        cell_b = "**" + cell_b + "**";
      }
    }
    out += "| " + MdEscape(a.dataset_name) + " | " + rows_a[i].name + " (%) | " +
           cell_a + " | " + cell_b + " |\n";
  }
  return out;
}

std::string RenderComparisonCsv(const MetricReport &a, const MetricReport &b,
                                bool stamp) {
  RequireComparable(a, b);
  std::vector<MetricRow> rows_a = MetricRows(a);
  std::vector<MetricRow> rows_b = MetricRows(b);

  std::string out;
  if (stamp) out += StampLineCsv();
  out += "dataset,metric,system,value_percent\n";
  for (size_t i = 0; i < rows_a.size(); ++i) {
    out += CsvEscape(a.dataset_name) + "," + CsvEscape(rows_a[i].name) + "," +
           CsvEscape(a.system_name) + "," + CellOf(rows_a[i].value) + "\n";
    out += CsvEscape(b.dataset_name) + "," + CsvEscape(rows_b[i].name) + "," +
           CsvEscape(b.system_name) + "," + CellOf(rows_b[i].value) + "\n";
  }
  return out;
}

std::string ReportToJson(const MetricReport &report, bool include_utterances) {
  ordered_json j;
  j["schema_version"] = "1";
  j["dataset"] = report.dataset_name;
  j["system"] = report.system_name;
  j["num_utterances"] = report.per_utterance.size();
  j["skipped_missing_hyp"] = report.skipped_missing_hyp;
  j["skipped_ids"] = report.skipped_ids;
  j["o_counts"] = CountsToJson(report.o_totals);
  j["n_counts"] = CountsToJson(report.n_totals);
  ordered_json rare = ordered_json::object();
  for (const auto &[name, counts] : report.rare_totals) {
    rare[name] = RareCountsToJson(counts);
  }
  j["rare_counts"] = rare;
  j["o_wer"] = report.o_wer ? ordered_json(*report.o_wer) : ordered_json();
  j["n_wer"] = report.n_wer ? ordered_json(*report.n_wer) : ordered_json();
  ordered_json rates = ordered_json::object();
  for (const auto &[name, rate] : report.r_wer) {
    rates[name] = rate ? ordered_json(*rate) : ordered_json();
  }
  j["r_wer"] = rates;

  if (include_utterances) {
    ordered_json utts = ordered_json::array();
    for (const UtteranceMetrics &m : report.per_utterance) {
      ordered_json u;
      u["id"] = m.utterance_id;
      u["o_counts"] = CountsToJson(m.o_counts);
      u["n_counts"] = CountsToJson(m.n_counts);
      ordered_json r = ordered_json::object();
      for (const auto &[name, counts] : m.r_counts) {
        r[name] = RareCountsToJson(counts);
      }
      u["rare_counts"] = r;
      u["o_empty_reference"] = m.o_empty_reference;
      u["n_empty_reference"] = m.n_empty_reference;
      utts.push_back(std::move(u));
    }
    j["utterances"] = std::move(utts);
  }
  return j.dump(2) + "\n";
}

MetricReport ReportFromJsonText(std::string_view text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("dataset") ||
      !j.contains("o_counts") || !j.contains("n_counts")) {
    throw Error(ErrorCode::kMalformedEntry,
                "not a rarewer metric report (expected dataset/o_counts/"
                "n_counts)");
  }

  MetricReport report;
  report.dataset_name = j["dataset"].get<std::string>();
  report.system_name = j.value("system", std::string("system"));
  report.skipped_missing_hyp =
      j.value("skipped_missing_hyp", static_cast<int64_t>(0));
  if (j.contains("skipped_ids") && j["skipped_ids"].is_array()) {
    for (const auto &id : j["skipped_ids"]) {
      if (id.is_string()) report.skipped_ids.push_back(id.get<std::string>());
    }
  }
  report.o_totals = CountsFromJson(j["o_counts"]);
  report.n_totals = CountsFromJson(j["n_counts"]);
  if (j.contains("rare_counts") && j["rare_counts"].is_object()) {
    for (const auto &[name, counts] : j["rare_counts"].items()) {
      report.rare_totals[name] = RareCountsFromJson(counts);
    }
  }

  // Rates are derived; recompute from pooled counts.
  if (report.o_totals.ref_tokens > 0) report.o_wer = Wer(report.o_totals);
  if (report.n_totals.ref_tokens > 0) report.n_wer = Wer(report.n_totals);
  for (const auto &[name, counts] : report.rare_totals) {
    report.r_wer[name] = RareWerRatio(counts);
  }

  if (j.contains("utterances") && j["utterances"].is_array()) {
    for (const auto &u : j["utterances"]) {
      UtteranceMetrics m;
      m.utterance_id = u.value("id", std::string());
      if (u.contains("o_counts")) m.o_counts = CountsFromJson(u["o_counts"]);
      if (u.contains("n_counts")) m.n_counts = CountsFromJson(u["n_counts"]);
      if (u.contains("rare_counts") && u["rare_counts"].is_object()) {
        for (const auto &[name, counts] : u["rare_counts"].items()) {
          m.r_counts[name] = RareCountsFromJson(counts);
        }
      }
      m.o_empty_reference = u.value("o_empty_reference", false);
      m.n_empty_reference = u.value("n_empty_reference", false);
      report.per_utterance.push_back(std::move(m));
    }
  }
  return report;
}

MetricReport ReportFromJsonFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable, "cannot open report: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ReportFromJsonText(buf.str());
}

}  // namespace rarewer
