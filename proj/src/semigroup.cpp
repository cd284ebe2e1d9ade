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

#include "ppersist/semigroup.hpp"

#include <algorithm>
#include <set>

namespace ppersist {

FiniteSemigroup FiniteSemigroup::from_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw validation_error("semigroup: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw validation_error("semigroup: table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw validation_error("semigroup: entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw validation_error("semigroup: not associative at (" +
                                           std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
    FiniteSemigroup s;
    s.n_ = n;
    s.table_ = table;
    return s;
}

std::optional<int> FiniteSemigroup::unit() const {
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) return e;
    }
    return std::nullopt;
}

std::vector<int> FiniteSemigroup::idempotents() const {
    std::vector<int> out;
    for (int e = 0; e < n_; ++e)
        if (table_[e][e] == e) out.push_back(e);
    return out;
}

bool FiniteSemigroup::is_regular() const {
    for (int s = 0; s < n_; ++s) {
        bool found = false;
        for (int x = 0; x < n_ && !found; ++x) found = table_[table_[s][x]][s] == s;
        if (!found) return false;
    }
    return true;
}

bool FiniteSemigroup::idempotents_form_subsemigroup() const {
    auto es = idempotents();
    for (int e : es)
        for (int f : es) {
            int p = table_[e][f];
            if (table_[p][p] != p) return false;
        }
    return true;
}

FiniteSemigroup adjoin_unit(const FiniteSemigroup& s) {
    if (s.has_unit()) return s;
    int n = s.size();
    std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = s.mul(a, b);
    for (int a = 0; a <= n; ++a) {
        table[a][n] = a;
        table[n][a] = a;
    }
    return FiniteSemigroup::from_table(table);
}

FinitePoset mitsch_order(const FiniteSemigroup& s,
                         std::vector<std::optional<MitschWitness>>* witnesses) {
    FiniteSemigroup hat = adjoin_unit(s);
    int n = s.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    if (witnesses) witnesses->assign(static_cast<size_t>(n) * n, std::nullopt);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < hat.size() && !leq[a][b]; ++x) {
                if (hat.mul(x, b) != a || hat.mul(x, a) != a) continue;
                for (int y = 0; y < hat.size(); ++y)
                    if (hat.mul(b, y) == a) {
                        leq[a][b] = true;
                        if (witnesses) (*witnesses)[static_cast<size_t>(a) * n + b] = MitschWitness{x, y};
                        break;
                    }
            }
        }
    return FinitePoset::validate(n, leq);
}

FinitePoset nambooripad_order(const FiniteSemigroup& s) {
    auto es = s.idempotents();
    if (es.empty()) throw validation_error("nambooripad_order: no idempotents");
    int n = s.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool left = false, right = false;
            for (int e : es) {
                if (s.mul(e, b) == a) left = true;
                if (s.mul(b, e) == a) right = true;
            }
            leq[a][b] = left && right;
        }
    try {
        return FinitePoset::validate(n, leq);
    } catch (const poset_axiom_error& e) {
        throw not_partial_order_error(e.witness,
                                      std::string("nambooripad_order: relation is not a partial "
                                                  "order (") +
                                          e.what() + ")");
    }
}

std::vector<int> semigroup_sublevel(const FiniteSemigroup& s, int elem, const FinitePoset& order,
                                    bool cross_check_nambooripad) {
    if (order.size() != s.size())
        throw validation_error("semigroup_sublevel: order does not match semigroup");
    if (elem < 0 || elem >= s.size()) throw validation_error("semigroup_sublevel: unknown element");
    std::vector<int> down = order.downset(elem);
    if (cross_check_nambooripad) {
        std::set<int> left, right;
        for (int e : s.idempotents()) {
            left.insert(s.mul(e, elem));
            right.insert(s.mul(elem, e));
        }
        std::vector<int> closed_form;
        std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                              std::back_inserter(closed_form));
        if (closed_form != down)
            throw internal_check_error(
                "semigroup_sublevel: downset disagrees with E_S*s intersect s*E_S at element " +
                std::to_string(elem));
    }
    return down;
}

}  // namespace ppersist
