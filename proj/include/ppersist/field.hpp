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

#ifndef PPERSIST_FIELD_HPP
#define PPERSIST_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ppersist/rational.hpp"

namespace ppersist {

enum class FieldKind { Rationals, PrimeField };

bool is_prime_u32(uint32_t n);

/// Coefficient field: the rationals, or Z/p for a prime p < 2^31.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    uint32_t modulus = 0;  // meaningful for PrimeField only

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

    static FieldSpec prime(uint32_t p) {
        if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
            throw std::invalid_argument("FieldSpec: modulus must be a prime < 2^31");
        return FieldSpec{FieldKind::PrimeField, p};
    }

    /// Accepts "q", "f2", or "fp:<prime>".
    static std::optional<FieldSpec> parse(const std::string& text);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && modulus == o.modulus; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;
};

uint32_t inverse_mod(uint32_t a, uint32_t p);

/// Field arithmetic on Rat values. For PrimeField the canonical form is the
/// integer residue in [0, p); every operation returns canonical values and
/// expects canonical inputs (normalize() repairs arbitrary rationals whose
/// denominator is invertible mod p).
class FieldOps {
  public:
    explicit FieldOps(FieldSpec fs) : fs_(fs) {}

    const FieldSpec& spec() const { return fs_; }

    bool is_zero(const Rat& a) const { return a == 0; }

    Rat normalize(const Rat& a) const;

    Rat add(const Rat& a, const Rat& b) const;
    Rat sub(const Rat& a, const Rat& b) const;
    Rat mul(const Rat& a, const Rat& b) const;
    Rat neg(const Rat& a) const;
    Rat inv(const Rat& a) const;  // throws on zero
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

  private:
    FieldSpec fs_;
};

}  // namespace ppersist

#endif
