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

#ifndef PPERSIST_SEMIGROUP_HPP
#define PPERSIST_SEMIGROUP_HPP

#include <optional>
#include <vector>

#include "ppersist/poset.hpp"

namespace ppersist {

class not_partial_order_error : public validation_error {
  public:
    not_partial_order_error(std::vector<int> witness, const std::string& what)
        : validation_error(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

/// Finite semigroup given by its multiplication table; associativity is
/// checked exhaustively at construction.
class FiniteSemigroup {
  public:
    static FiniteSemigroup from_table(const std::vector<std::vector<int>>& table);

    int size() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    /// Two-sided identity, if one exists.
    std::optional<int> unit() const;
    bool has_unit() const { return unit().has_value(); }

    /// All e with e*e = e.
    std::vector<int> idempotents() const;

    /// Every element has a pseudoinverse x with s*x*s = s.
    bool is_regular() const;

    /// Whether the idempotents are closed under multiplication.
    bool idempotents_form_subsemigroup() const;

  private:
    FiniteSemigroup() = default;
    int n_ = 0;
    std::vector<std::vector<int>> table_;
};

/// The semigroup itself if it has a unit, otherwise one new element
/// adjoined as a two-sided identity (it becomes element n).
FiniteSemigroup adjoin_unit(const FiniteSemigroup& s);

/// Witness pair (x, y) for a Mitsch relation s <= s'.
struct MitschWitness {
    int x, y;
};

/// The natural partial order: s <= s' iff s = x*s' = s'*y and x*s = s for
/// some x, y in the unitized semigroup. Always a poset for associative
/// tables; the returned relation is validated anyway. Witnesses per
/// related pair are written to *witnesses when given (indexed a*n+b).
FinitePoset mitsch_order(const FiniteSemigroup& s,
                         std::vector<std::optional<MitschWitness>>* witnesses = nullptr);

/// Idempotent-witnessed order: s <= s' iff s = e*s' = s'*e' with e, e'
/// idempotent. Valid on regular semigroups and whenever the idempotents
/// form a subsemigroup; outside those hypotheses validation may fail, in
/// which case not_partial_order_error carries the offending pair/triple.
FinitePoset nambooripad_order(const FiniteSemigroup& s);

/// Downset of `elem` in `order` (which must be an order on s's elements).
/// `cross_check_nambooripad` additionally compares against the closed form
/// E_S*s intersected with s*E_S and throws internal_check_error on any
/// disagreement.
std::vector<int> semigroup_sublevel(const FiniteSemigroup& s, int elem, const FinitePoset& order,
                                    bool cross_check_nambooripad = false);

}  // namespace ppersist

#endif
