// core/src/scorers.cc

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

#include "rarewer/scorers.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rarewer/error.h"

namespace rarewer {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> ProbsToLogs(const std::vector<double> &probs,
                                const std::string &what) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::kInvalidScorer,
                  what + ": probabilities must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw Error(ErrorCode::kInvalidScorer,
                what + ": probabilities must sum to 1");
  }
  std::vector<double> logs(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) {
    logs[i] = probs[i] > 0.0 ? std::log(probs[i]) : kNegInf;
  }
  return logs;
}

}  // namespace

TableScorer::TableScorer(
    std::vector<std::string> vocab, const std::string &end_token,
    std::map<std::vector<int>, std::vector<double>> prob_entries,
    std::vector<double> default_probs)
    : vocab_(std::move(vocab)) {
  if (vocab_.empty()) {
    throw Error(ErrorCode::kInvalidScorer, "table scorer: empty vocabulary");
  }
  end_token_ = TokenId(end_token);
  if (end_token_ < 0) {
    throw Error(ErrorCode::kInvalidScorer,
                "table scorer: end token \"" + end_token +
                    "\" is not in the vocabulary");
  }
  for (auto &[prefix, probs] : prob_entries) {
    if (probs.size() != vocab_.size()) {
      throw Error(ErrorCode::kInvalidScorer,
                  "table scorer: entry size does not match vocabulary");
    }
    entries_[prefix] = ProbsToLogs(probs, "table scorer entry");
  }
  if (!default_probs.empty()) {
    if (default_probs.size() != vocab_.size()) {
      throw Error(ErrorCode::kInvalidScorer,
                  "table scorer: default size does not match vocabulary");
    }
    default_log_probs_ = ProbsToLogs(default_probs, "table scorer default");
  }
}

TableScorer TableScorer::FromJsonText(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::kInvalidScorer, "scorer file is not a JSON object");
  }
  if (!j.contains("vocab") || !j["vocab"].is_array() ||
      !j.contains("end_token") || !j["end_token"].is_string()) {
    throw Error(ErrorCode::kInvalidScorer,
                "scorer file needs \"vocab\" (array) and \"end_token\" "
                "(string)");
  }
  std::vector<std::string> vocab;
  for (const auto &v : j["vocab"]) {
    if (!v.is_string()) {
      throw Error(ErrorCode::kInvalidScorer, "vocab entries must be strings");
    }
    vocab.push_back(v.get<std::string>());
  }

  auto token_id = [&vocab](const std::string &name) -> int {
    auto it = std::find(vocab.begin(), vocab.end(), name);
    return it == vocab.end() ? -1 : static_cast<int>(it - vocab.begin());
  };

  std::map<std::vector<int>, std::vector<double>> entries;
  if (j.contains("entries")) {
    if (!j["entries"].is_object()) {
      throw Error(ErrorCode::kInvalidScorer, "\"entries\" must be an object");
    }
    for (const auto &[key, value] : j["entries"].items()) {
      std::vector<int> prefix;
      std::istringstream names(key);
      std::string name;
      while (names >> name) {
        int id = token_id(name);
        if (id < 0) {
          throw Error(ErrorCode::kInvalidScorer,
                      "entry key token \"" + name +
                          "\" is not in the vocabulary");
        }
        prefix.push_back(id);
      }
      if (!value.is_array()) {
        throw Error(ErrorCode::kInvalidScorer,
                    "entry values must be probability arrays");
      }
      entries[prefix] = value.get<std::vector<double>>();
    }
  }

  std::vector<double> default_probs;
  if (j.contains("default")) {
    if (!j["default"].is_array()) {
      throw Error(ErrorCode::kInvalidScorer,
                  "\"default\" must be a probability array");
    }
    default_probs = j["default"].get<std::vector<double>>();
  }

  return TableScorer(std::move(vocab), j["end_token"].get<std::string>(),
                     std::move(entries), std::move(default_probs));
}

TableScorer TableScorer::FromJsonFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable, "cannot open scorer: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromJsonText(buf.str());
}

int TableScorer::vocab_size() const { return static_cast<int>(vocab_.size()); }

int TableScorer::end_token() const { return end_token_; }

int TableScorer::TokenId(const std::string &name) const {
  auto it = std::find(vocab_.begin(), vocab_.end(), name);
  return it == vocab_.end() ? -1 : static_cast<int>(it - vocab_.begin());
}

const std::string &TableScorer::TokenName(int id) const {
  return vocab_.at(static_cast<size_t>(id));
}

std::string TableScorer::Detokenize(std::span<const int> tokens) const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += TokenName(tokens[i]);
  }
  return out;
}

std::vector<double> TableScorer::Score(std::span<const int> prefix) const {
  std::vector<int> key(prefix.begin(), prefix.end());
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  if (!default_log_probs_.empty()) return default_log_probs_;
  throw Error(ErrorCode::kInvalidScorer,
              "table scorer has no entry for prefix \"" + Detokenize(prefix) +
                  "\" and no default");
}

CharNgramScorer::CharNgramScorer(std::string_view training_text, int order,
                                 double alpha)
    : order_(order), alpha_(alpha) {
  if (order < 2) {
    throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 2");
  }
  if (!(alpha > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "smoothing alpha must be > 0");
  }
  if (training_text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "training text is empty");
  }

  std::set<char> chars(training_text.begin(), training_text.end());
  alphabet_.assign(chars.begin(), chars.end());

  auto char_id = [this](char c) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
    return static_cast<int>(it - alphabet_.begin());
  };

  std::vector<int> ids;
  ids.reserve(training_text.size() + 1);
  for (char c : training_text) ids.push_back(char_id(c));
  ids.push_back(end_token());

  const size_t context = static_cast<size_t>(order_) - 1;
  for (size_t i = 0; i + 1 <= ids.size(); ++i) {
    size_t begin = i >= context ? i - context : 0;
    std::vector<int> ctx(ids.begin() + static_cast<ptrdiff_t>(begin),
                         ids.begin() + static_cast<ptrdiff_t>(i));
    ++counts_[ctx][ids[i]];
    ++context_totals_[ctx];
  }
}

CharNgramScorer CharNgramScorer::FromFile(const std::string &path, int order,
                                          double alpha) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable,
                "cannot open training text: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return CharNgramScorer(buf.str(), order, alpha);
}

int CharNgramScorer::vocab_size() const {
  return static_cast<int>(alphabet_.size()) + 1;
}

int CharNgramScorer::end_token() const {
  return static_cast<int>(alphabet_.size());
}

std::vector<double> CharNgramScorer::Score(std::span<const int> prefix) const {
  const size_t context = static_cast<size_t>(order_) - 1;
  size_t begin = prefix.size() > context ? prefix.size() - context : 0;
  std::vector<int> ctx(prefix.begin() + static_cast<ptrdiff_t>(begin),
                       prefix.end());

  const int vocab = vocab_size();
  auto counts_it = counts_.find(ctx);
  auto totals_it = context_totals_.find(ctx);
  int total = totals_it == context_totals_.end() ? 0 : totals_it->second;
  double denom = total + alpha_ * vocab;

  std::vector<double> logs(static_cast<size_t>(vocab));
  for (int t = 0; t < vocab; ++t) {
    int count = 0;
    if (counts_it != counts_.end()) {
      auto it = counts_it->second.find(t);
      if (it != counts_it->second.end()) count = it->second;
    }
    logs[static_cast<size_t>(t)] = std::log((count + alpha_) / denom);
  }
  return logs;
}

std::string CharNgramScorer::Detokenize(std::span<const int> tokens) const {
  std::string out;
  for (int t : tokens) {
    if (t == end_token()) continue;
    out.push_back(alphabet_.at(static_cast<size_t>(t)));
  }
  return out;
}

}  // namespace rarewer
