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

#ifndef GAMEBENCH_RATIONAL_HPP_
#define GAMEBENCH_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gamebench {

// Exact arithmetic for ratios, utilities and raw scores. Floating point is
// reserved for cross-run aggregate statistics.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "3", "-3", "2/3", "0.6" and "60%". Exponent notation is rejected.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational ParseRational(std::string_view text);

// Canonical text: "3", "-3", "2/3". Round-trips through ParseRational.
std::string RationalToString(const Rational& value);

// Decimal rendering rounded half away from zero to `places` digits with
// trailing zeros stripped: 100/3 -> "33.33", 91/2 -> "45.5", 50 -> "50".
std::string FormatDecimal(const Rational& value, int places = 2);

// "60%" for 3/5; falls back to a decimal percentage when not integral.
std::string FormatPercent(const Rational& value);

double ToDouble(const Rational& value);

// Largest integer not exceeding value.
std::int64_t FloorToInt(const Rational& value);

inline Rational Abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace gamebench

#endif  // GAMEBENCH_RATIONAL_HPP_
