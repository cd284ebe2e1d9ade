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

#include "ppersist/rational.hpp"

#include <cctype>

namespace ppersist {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) return std::nullopt;

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) return std::nullopt;

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        Rat r(Int(num), d);
        return negative ? Rat(-r) : r;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (frac.empty()) frac = "0";
        if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
        Int scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rat r(Int(whole) * scale + Int(frac), scale);
        return negative ? Rat(-r) : r;
    }

    if (!all_digits(s)) return std::nullopt;
    Rat r{Int(s)};
    return negative ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& value) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string sqrt_decimal(const Rat& value, int digits) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // floor(sqrt(value) * 10^digits) = isqrt(num * scale^2 / den), floored.
    Int radicand = (num * scale * scale) / den;
    Int root = boost::multiprecision::sqrt(radicand);
    Int whole = root / scale;
    Int frac = root % scale;
    std::string fs = frac.str();
    while (static_cast<int>(fs.size()) < digits) fs.insert(fs.begin(), '0');
    if (digits == 0) return whole.str();
    return whole.str() + "." + fs;
}

}  // namespace ppersist
