// Copyright 2026 The GameBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamebench/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gamebench {
namespace {

BigInt ParseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("empty number in '" + std::string(whole) + "'");
  BigInt out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad digit in '" + std::string(whole) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return out;
}

BigInt Pow10(int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= 10;
  return out;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool percent = false;
  if (!text.empty() && text.back() == '%') {
    percent = true;
    text.remove_suffix(1);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash), whole);
    BigInt den = ParseInteger(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("empty number in '" + std::string(whole) + "'");
    }
    BigInt ip = int_part.empty() ? BigInt(0) : ParseInteger(int_part, whole);
    BigInt fp = frac_part.empty() ? BigInt(0) : ParseInteger(frac_part, whole);
    BigInt scale = Pow10(static_cast<int>(frac_part.size()));
    value = Rational(ip * scale + fp, scale);
  } else {
    value = Rational(ParseInteger(text, whole));
  }
  if (negative) value = -value;
  if (percent) value /= 100;
  return value;
}

std::string RationalToString(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string FormatDecimal(const Rational& value, int places) {
  const bool negative = value < 0;
  const Rational magnitude = Abs(value);
  const BigInt scale = Pow10(places);
  const Rational scaled = magnitude * scale;
  const BigInt num = boost::multiprecision::numerator(scaled);
  const BigInt den = boost::multiprecision::denominator(scaled);
  BigInt q = num / den;
  const BigInt r = num % den;
  if (r * 2 >= den) q += 1;
  std::string digits = q.str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  if (negative && digits != "0") digits.insert(0, "-");
  return digits;
}

std::string FormatPercent(const Rational& value) { return FormatDecimal(value * 100, 2) + "%"; }

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

std::int64_t FloorToInt(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q.convert_to<std::int64_t>();
}

}  // namespace gamebench
