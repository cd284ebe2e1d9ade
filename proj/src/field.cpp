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

#include "ppersist/field.hpp"

namespace ppersist {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<FieldSpec> FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text == "f2" || text == "F2") return prime(2);
    if (text.rfind("fp:", 0) == 0) {
        try {
            unsigned long p = std::stoul(text.substr(3));
            if (p < 2 || p >= (1ul << 31) || !is_prime_u32(static_cast<uint32_t>(p)))
                return std::nullopt;
            return prime(static_cast<uint32_t>(p));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string FieldSpec::to_string() const {
    if (kind == FieldKind::Rationals) return "q";
    if (modulus == 2) return "f2";
    return "fp:" + std::to_string(modulus);
}

uint32_t inverse_mod(uint32_t a, uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse_mod: zero has no inverse");
    // extended Euclid on (a, p)
    int64_t t = 0, new_t = 1;
    int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

namespace {

Rat residue(const Int& n, uint32_t p) {
    Int r = n % p;
    if (r < 0) r += p;
    return Rat(r);
}

}  // namespace

Rat FieldOps::normalize(const Rat& a) const {
    if (fs_.kind == FieldKind::Rationals) return a;
    Int num = boost::multiprecision::numerator(a);
    Int den = boost::multiprecision::denominator(a);
    if (den == 1) return residue(num, fs_.modulus);
    Int dmod = den % fs_.modulus;
    if (dmod < 0) dmod += fs_.modulus;
    if (dmod == 0) throw std::domain_error("FieldOps: denominator not invertible mod p");
    uint32_t dinv = inverse_mod(static_cast<uint32_t>(dmod), fs_.modulus);
    return residue(num * dinv, fs_.modulus);
}

Rat FieldOps::add(const Rat& a, const Rat& b) const {
    if (fs_.kind == FieldKind::Rationals) return a + b;
    return residue(boost::multiprecision::numerator(a) + boost::multiprecision::numerator(b),
                   fs_.modulus);
}

Rat FieldOps::sub(const Rat& a, const Rat& b) const {
    if (fs_.kind == FieldKind::Rationals) return a - b;
    return residue(boost::multiprecision::numerator(a) - boost::multiprecision::numerator(b),
                   fs_.modulus);
}

Rat FieldOps::mul(const Rat& a, const Rat& b) const {
    if (fs_.kind == FieldKind::Rationals) return a * b;
    return residue(boost::multiprecision::numerator(a) * boost::multiprecision::numerator(b),
                   fs_.modulus);
}

Rat FieldOps::neg(const Rat& a) const {
    if (fs_.kind == FieldKind::Rationals) return -a;
    return residue(-boost::multiprecision::numerator(a), fs_.modulus);
}

Rat FieldOps::inv(const Rat& a) const {
    if (a == 0) throw std::domain_error("FieldOps: inverse of zero");
    if (fs_.kind == FieldKind::Rationals) return Rat(1) / a;
    Int amod = boost::multiprecision::numerator(a) % fs_.modulus;
    if (amod < 0) amod += fs_.modulus;
    return Rat(inverse_mod(static_cast<uint32_t>(amod), fs_.modulus));
}

}  // namespace ppersist
