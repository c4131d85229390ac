// core/src/text_norm.cc

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

#include "rarewer/text_norm.h"

#include <unicode/localpointer.h>
#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rarewer/error.h"

namespace rarewer {

namespace {

// Mirrors data/abbreviations.tsv; a unit test pins the two in sync.
constexpr const char kBuiltinAbbreviationText[] =
    "# rarewer abbreviation table, version 1\n"
    "# format: abbrev<TAB>expansion ; keys must end with '.'\n"
    "capt.\tcaptain\n"
    "dr.\tdoctor\n"
    "etc.\tetcetera\n"
    "jr.\tjunior\n"
    "lt.\tlieutenant\n"
    "mr.\tmister\n"
    "mrs.\tmissus\n"
    "prof.\tprofessor\n"
    "sgt.\tsergeant\n"
    "sr.\tsenior\n"
    "st.\tsaint\n"
    "vs.\tversus\n";

std::vector<UChar32> DecodeUtf8(std::string_view text) {
  std::vector<UChar32> out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    UChar32 cp = 0xFFFD;
    size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      if ((b1 & 0xC0) == 0x80) {
        cp = ((b0 & 0x1F) << 6) | (b1 & 0x3F);
        len = 2;
        if (cp < 0x80) cp = 0xFFFD;
      }
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(text[i + 2]);
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80) {
        cp = ((b0 & 0x0F) << 12) | ((b1 & 0x3F) << 6) | (b2 & 0x3F);
        len = 3;
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
      }
    } else if ((b0 & 0xF8) == 0xF0 && i + 3 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(text[i + 2]);
      unsigned char b3 = static_cast<unsigned char>(text[i + 3]);
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80 && (b3 & 0xC0) == 0x80) {
        cp = ((b0 & 0x07) << 18) | ((b1 & 0x3F) << 12) | ((b2 & 0x3F) << 6) |
             (b3 & 0x3F);
        len = 4;
        if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
      }
    }
    out.push_back(cp);
    i += len;  // malformed bytes resync one at a time
  }
  return out;
}

void AppendUtf8(std::string *out, UChar32 cp) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string EncodeUtf8(const std::vector<UChar32> &cps, size_t begin,
                       size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) AppendUtf8(&out, cps[i]);
  return out;
}

bool IsWhitespace(UChar32 cp) {
  return u_isUWhiteSpace(cp) || cp == '\t' || cp == '\n' || cp == '\r' ||
         cp == '\v' || cp == '\f';
}

bool IsPunctOrSymbol(UChar32 cp) {
  int8_t type = u_charType(cp);
  switch (type) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return true;
    default:
      return false;
  }
}

bool IsWordChar(UChar32 cp) {
  return !IsWhitespace(cp) && !IsPunctOrSymbol(cp);
}

// Apostrophes and hyphens survive punctuation deletion when flanked by word
// characters on both sides ("don't", "x-ray").
bool IsJoiner(UChar32 cp) {
  return cp == '\'' || cp == 0x2019 || cp == '-';
}

std::string ComposeNfc(std::string_view text) {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec)) {
    throw Error(ErrorCode::kInvalidArgument, "ICU NFC instance unavailable");
  }
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString out = nfc->normalize(in, ec);
  if (U_FAILURE(ec)) {
    throw Error(ErrorCode::kInvalidArgument, "Unicode composition failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::string LowercaseUtf8(std::string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.toLower(icu::Locale::getRoot());
  std::string result;
  s.toUTF8String(result);
  return result;
}

// Deletes punctuation/symbol codepoints; keeps joiners with word-character
// neighbors in the original chunk.
std::string StripPunct(const std::vector<UChar32> &cps, size_t begin,
                       size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    UChar32 cp = cps[i];
    if (!IsPunctOrSymbol(cp)) {
      AppendUtf8(&out, cp);
      continue;
    }
    if (IsJoiner(cp) && i > begin && i + 1 < end && IsWordChar(cps[i - 1]) &&
        IsWordChar(cps[i + 1])) {
      AppendUtf8(&out, cp);
    }
  }
  return out;
}

// True when the chunk's trailing punctuation run contains a period, which
// arms the abbreviation lookup ("dr." and "dr.," but not "dr").
bool TrailingRunHasPeriod(const std::vector<UChar32> &cps, size_t begin,
                          size_t end) {
  for (size_t i = end; i > begin; --i) {
    UChar32 cp = cps[i - 1];
    if (!IsPunctOrSymbol(cp)) return false;
    if (cp == '.') return true;
  }
  return false;
}

bool IsDisfluency(const std::string &token) {
  for (const char *marker : kDisfluencyMarkers) {
    if (token == marker) return true;
  }
  return false;
}

void EmitNormalizedChunk(const std::vector<UChar32> &cps, size_t begin,
                         size_t end, const NormalizationConfig &config,
                         const AbbreviationTable &abbreviations,
                         std::vector<std::string> *tokens) {
  std::string stripped = StripPunct(cps, begin, end);
  if (config.expand_common_abbreviations && !stripped.empty() &&
      TrailingRunHasPeriod(cps, begin, end)) {
    std::string key = config.lowercase ? stripped : LowercaseUtf8(stripped);
    key.push_back('.');
    if (const std::string *expansion = abbreviations.Find(key)) {
      // Expansions may hold several words; they split like ordinary text.
      std::istringstream parts(*expansion);
      std::string word;
      while (parts >> word) {
        if (config.remove_disfluency_markers && IsDisfluency(word)) continue;
        tokens->push_back(word);
      }
      return;
    }
  }
  std::string token =
      config.strip_punctuation ? std::move(stripped) : EncodeUtf8(cps, begin, end);
  if (token.empty()) return;
  if (config.remove_disfluency_markers && IsDisfluency(token)) return;
  tokens->push_back(std::move(token));
}

}  // namespace

const char *NormalizationModeName(NormalizationMode mode) {
  return mode == NormalizationMode::kOrthographic ? "orthographic"
                                                  : "normalized";
}

AbbreviationTable AbbreviationTable::FromText(std::string_view text) {
  AbbreviationTable table;
  size_t line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedEntry,
                  "abbreviation table line " + std::to_string(line_number) +
                      ": missing tab separator");
    }
    std::string key = LowercaseUtf8(line.substr(0, tab));
    std::string expansion(line.substr(tab + 1));
    if (key.size() < 2 || key.back() != '.') {
      throw Error(ErrorCode::kMalformedEntry,
                  "abbreviation table line " + std::to_string(line_number) +
                      ": key must end with '.'");
    }
    table.entries_[key] = expansion;
  }
  return table;
}

AbbreviationTable AbbreviationTable::FromFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kFileUnreadable,
                "cannot open abbreviation table: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromText(buf.str());
}

const AbbreviationTable &AbbreviationTable::Builtin() {
  static const AbbreviationTable table =
      AbbreviationTable::FromText(kBuiltinAbbreviationText);
  return table;
}

const std::string *AbbreviationTable::Find(const std::string &key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

TokenSeq Tokenize(std::string_view text, NormalizationMode mode,
                  const NormalizationConfig &config,
                  const AbbreviationTable *abbreviations) {
  const AbbreviationTable &table =
      abbreviations ? *abbreviations : AbbreviationTable::Builtin();

  std::string composed;
  if (config.unicode_compose) {
    composed = ComposeNfc(text);
  } else {
    composed.assign(text);
  }

  if (mode == NormalizationMode::kNormalized && config.lowercase) {
    composed = LowercaseUtf8(composed);
  }

  std::vector<UChar32> cps = DecodeUtf8(composed);
  TokenSeq seq;
  seq.mode = mode;

  size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && IsWhitespace(cps[i])) ++i;
    size_t begin = i;
    while (i < cps.size() && !IsWhitespace(cps[i])) ++i;
    if (begin == i) continue;
    if (mode == NormalizationMode::kOrthographic) {
      seq.tokens.push_back(EncodeUtf8(cps, begin, i));
    } else {
      EmitNormalizedChunk(cps, begin, i, config, table, &seq.tokens);
    }
  }
  return seq;
}

std::string JoinTokens(const TokenSeq &seq) {
  std::string out;
  for (size_t i = 0; i < seq.tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += seq.tokens[i];
  }
  return out;
}

bool NormalizationIdempotentCheck(std::string_view text,
                                  NormalizationMode mode,
                                  const NormalizationConfig &config,
                                  const AbbreviationTable *abbreviations) {
  TokenSeq once = Tokenize(text, mode, config, abbreviations);
  TokenSeq twice = Tokenize(JoinTokens(once), mode, config, abbreviations);
  return once == twice;
}

}  // namespace rarewer
