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

#ifndef PPERSIST_POSET_HPP
#define PPERSIST_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "ppersist/errors.hpp"
#include "ppersist/rational.hpp"

namespace ppersist {

class poset_axiom_error : public validation_error {
  public:
    enum class Axiom { Reflexivity, Antisymmetry, Transitivity };
    poset_axiom_error(Axiom axiom, std::vector<int> witness, const std::string& what)
        : validation_error(what), axiom(axiom), witness(std::move(witness)) {}
    Axiom axiom;
    std::vector<int> witness;
};

/// A finite poset, i.e. a thin category: elements 0..n-1 with a verified
/// reflexive, antisymmetric, transitive relation. Elements carry a display
/// name and an optional label vector of exact rationals (one entry for
/// chain scales, two for bifiltration grids). Immutable once validated.
class FinitePoset {
  public:
    /// The empty poset; meaningful instances come from the factories below.
    FinitePoset() = default;

    /// Checks the three axioms (reported in that order with witnesses)
    /// and returns the verified poset.
    static FinitePoset validate(int n, const std::vector<std::vector<bool>>& leq,
                                std::vector<std::string> names = {},
                                std::vector<std::vector<Rat>> labels = {});

    /// Chain c_0 < c_1 < ... < c_{k-1} labeled by strictly increasing
    /// rationals; with `reversed`, the order relation is flipped while the
    /// labels stay put.
    static FinitePoset chain(const std::vector<Rat>& values, bool reversed = false);

    /// Discrete poset (only reflexive pairs).
    static FinitePoset antichain(int n);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a][b]; }
    bool lt(int a, int b) const { return a != b && leq_[a][b]; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<Rat>& label(int a) const { return labels_[a]; }
    bool has_labels() const;

    std::vector<int> downset(int s) const;
    std::vector<int> upset(int s) const;

    /// Cover relation: (a,b) with a < b and nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    /// A fixed linear extension (Kahn's algorithm, smallest index first).
    std::vector<int> linear_extension() const;

    bool is_chain() const;

    /// For chains only: elements sorted by the order relation.
    std::vector<int> chain_order() const;

    /// Minimal elements of {x : x >= a and x >= b}; empty when a and b
    /// have no common upper bound.
    std::vector<int> minimal_upper_bounds(int a, int b) const;

    /// Index of the element whose label equals `label`, if any.
    std::optional<int> find_label(const std::vector<Rat>& label) const;

  private:
    int n_ = 0;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::string> names_;
    std::vector<std::vector<Rat>> labels_;
};

/// Product order: (a,b) <= (a',b') iff a <= a' and b <= b'. Element (a,b)
/// is numbered a * q.size() + b; labels are concatenated.
FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q);

}  // namespace ppersist

#endif
