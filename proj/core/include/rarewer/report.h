// core/include/rarewer/report.h

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

#ifndef RAREWER_REPORT_H_
#define RAREWER_REPORT_H_

#include <string>
#include <string_view>

#include "rarewer/metrics.h"

namespace rarewer {

// ratio*100 with exactly one decimal place, round-half-to-even ("25.3").
// Percent conversion happens only here, at the presentation boundary.
std::string FormatPercent(double ratio);

// Markdown table over rows Dataset | Metric | <system>; undefined rates
// render as "undefined".  stamp prepends a generation-time comment (off by
// default so outputs are byte-reproducible).
std::string RenderMarkdown(const MetricReport &report, bool stamp = false);

// CSV with header dataset,metric,system,value_percent.
std::string RenderCsv(const MetricReport &report, bool stamp = false);

// Two-system comparison table; the better (lower) value per row is bolded
// in Markdown, ties and undefined values stay plain.  Throws kMetricMismatch
// unless both reports cover the same dataset and rare sets.
std::string RenderComparisonMarkdown(const MetricReport &a,
                                     const MetricReport &b,
                                     bool stamp = false);

std::string RenderComparisonCsv(const MetricReport &a, const MetricReport &b,
                                bool stamp = false);

// Machine-readable report (corpus counts, rates, and per-utterance detail);
// the input format of the `report` subcommand.
std::string ReportToJson(const MetricReport &report,
                         bool include_utterances = true);

MetricReport ReportFromJsonText(std::string_view text);
MetricReport ReportFromJsonFile(const std::string &path);

}  // namespace rarewer

#endif  // RAREWER_REPORT_H_
