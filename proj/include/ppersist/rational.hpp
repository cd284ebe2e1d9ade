/* Copyright (c) 2026 The ppersist Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef PPERSIST_RATIONAL_HPP
#define PPERSIST_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ppersist {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator. All scale parameters, filtration labels and
/// matrix entries in the library are of this type.
using Rat = boost::multiprecision::cpp_rational;

/// Parses "a/b", "a", or a plain decimal like "-2.25" (converted exactly).
/// Returns nullopt on malformed input or zero denominator.
std::optional<Rat> parse_rational(const std::string& text);

/// "a" for integers, "a/b" otherwise; lowest terms, denominator positive.
std::string rat_to_string(const Rat& value);

/// Decimal string of sqrt(value) truncated to `digits` fractional digits.
/// Requires value >= 0. Deterministic (integer square root underneath).
std::string sqrt_decimal(const Rat& value, int digits = 6);

}  // namespace ppersist

#endif
