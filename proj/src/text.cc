// src/text.cc

// Copyright 2026  The vsm Authors
//
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

#include "vsm/text.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace vsm {

namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

bool MatchesDecimalGrammar(std::string_view s) {
  std::size_t i = 0, n = s.size();
  if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0, frac_digits = 0;
  while (i < n && IsDigit(s[i])) { ++i; ++int_digits; }
  if (i < n && s[i] == '.') {
    ++i;
    while (i < n && IsDigit(s[i])) { ++i; ++frac_digits; }
  }
  if (int_digits == 0 && frac_digits == 0) return false;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < n && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < n && IsDigit(s[i])) { ++i; ++exp_digits; }
    if (exp_digits == 0) return false;
  }
  return i == n;
}

}  // namespace

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsBlank(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsBlank(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

void ForEachLine(std::string_view text,
                 const std::function<void(std::size_t, std::string_view)> &fn) {
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    bool blank = true;
    for (char c : line) {
      if (!IsBlank(c)) { blank = false; break; }
    }
    if (!blank) fn(line_no, line);
    pos = end + 1;
  }
}

RealParse ParseReal(std::string_view token, double *value) {
  std::string_view body = token;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) body.remove_prefix(1);
  if (EqualsIgnoreCase(body, "inf") || EqualsIgnoreCase(body, "infinity") ||
      EqualsIgnoreCase(body, "nan"))
    return RealParse::kNonFinite;
  if (!MatchesDecimalGrammar(token)) return RealParse::kMalformed;
  // std::from_chars rejects a leading '+'.
  std::string_view digits = token[0] == '+' ? token.substr(1) : token;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec == std::errc::result_out_of_range) {
    // from_chars leaves `v` untouched on range errors; strtod tells
    // overflow (HUGE_VAL) apart from underflow (a value at or near zero).
    std::string copy(digits);
    v = std::strtod(copy.c_str(), nullptr);
  } else if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return RealParse::kMalformed;
  }
  if (!std::isfinite(v)) return RealParse::kNonFinite;
  *value = v;
  return RealParse::kOk;
}

std::string FormatShortest(double value) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string FormatFixed(double value, int digits) {
  std::array<char, 64> buf;
  int len = std::snprintf(buf.data(), buf.size(), "%.*f", digits, value);
  std::string out(buf.data(), static_cast<std::size_t>(len));
  if (out.size() > 1 && out[0] == '-') {
    // Avoid "-0.000000".
    bool all_zero = true;
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i] != '0' && out[i] != '.') { all_zero = false; break; }
    if (all_zero) out.erase(0, 1);
  }
  return out;
}

bool IsToken(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f')
      return false;
  }
  return true;
}

}  // namespace vsm
