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

#include "ppersist/poset.hpp"

#include <algorithm>

namespace ppersist {

FinitePoset FinitePoset::validate(int n, const std::vector<std::vector<bool>>& leq,
                                  std::vector<std::string> names,
                                  std::vector<std::vector<Rat>> labels) {
    if (static_cast<int>(leq.size()) != n)
        throw validation_error("poset: relation has wrong number of rows");
    for (const auto& row : leq)
        if (static_cast<int>(row.size()) != n)
            throw validation_error("poset: relation has wrong number of columns");

    for (int s = 0; s < n; ++s)
        if (!leq[s][s])
            throw poset_axiom_error(poset_axiom_error::Axiom::Reflexivity, {s},
                                    "poset: reflexivity fails at element " + std::to_string(s));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (s != t && leq[s][t] && leq[t][s])
                throw poset_axiom_error(poset_axiom_error::Axiom::Antisymmetry, {s, t},
                                        "poset: antisymmetry fails on (" + std::to_string(s) +
                                            ", " + std::to_string(t) + ")");
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (!leq[s][t]) continue;
            for (int u = 0; u < n; ++u)
                if (leq[t][u] && !leq[s][u])
                    throw poset_axiom_error(
                        poset_axiom_error::Axiom::Transitivity, {s, t, u},
                        "poset: transitivity fails on (" + std::to_string(s) + ", " +
                            std::to_string(t) + ", " + std::to_string(u) + ")");
        }

    FinitePoset p;
    p.n_ = n;
    p.leq_ = leq;
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    }
    if (static_cast<int>(names.size()) != n) throw validation_error("poset: wrong name count");
    p.names_ = std::move(names);
    if (labels.empty()) labels.resize(n);
    if (static_cast<int>(labels.size()) != n) throw validation_error("poset: wrong label count");
    p.labels_ = std::move(labels);
    return p;
}

FinitePoset FinitePoset::chain(const std::vector<Rat>& values, bool reversed) {
    int n = static_cast<int>(values.size());
    for (int i = 0; i + 1 < n; ++i)
        if (!(values[i] < values[i + 1]))
            throw validation_error("chain: labels must be strictly increasing");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) leq[i][j] = reversed ? j <= i : i <= j;
    std::vector<std::string> names(n);
    std::vector<std::vector<Rat>> labels(n);
    for (int i = 0; i < n; ++i) {
        names[i] = rat_to_string(values[i]);
        labels[i] = {values[i]};
    }
    return validate(n, leq, std::move(names), std::move(labels));
}

FinitePoset FinitePoset::antichain(int n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    return validate(n, leq);
}

bool FinitePoset::has_labels() const {
    for (const auto& l : labels_)
        if (l.empty()) return false;
    return n_ > 0;
}

std::vector<int> FinitePoset::downset(int s) const {
    if (s < 0 || s >= n_) throw validation_error("downset: unknown element");
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (leq_[a][s]) out.push_back(a);
    return out;
}

std::vector<int> FinitePoset::upset(int s) const {
    if (s < 0 || s >= n_) throw validation_error("upset: unknown element");
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (leq_[s][a]) out.push_back(a);
    return out;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!lt(a, b)) continue;
            bool covered = true;
            for (int c = 0; c < n_ && covered; ++c)
                if (lt(a, c) && lt(c, b)) covered = false;
            if (covered) out.push_back({a, b});
        }
    return out;
}

std::vector<int> FinitePoset::linear_extension() const {
    std::vector<int> indeg(n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (lt(a, b)) ++indeg[b];
    std::vector<int> order;
    std::vector<bool> done(n_, false);
    for (int step = 0; step < n_; ++step) {
        int pick = -1;
        for (int a = 0; a < n_; ++a)
            if (!done[a] && indeg[a] == 0) {
                pick = a;
                break;
            }
        if (pick < 0) throw internal_check_error("linear_extension: cycle in verified poset");
        done[pick] = true;
        order.push_back(pick);
        for (int b = 0; b < n_; ++b)
            if (lt(pick, b)) --indeg[b];
    }
    return order;
}

bool FinitePoset::is_chain() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (!leq_[a][b] && !leq_[b][a]) return false;
    return true;
}

std::vector<int> FinitePoset::chain_order() const {
    if (!is_chain()) throw validation_error("chain_order: index poset is not a chain");
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lt(a, b); });
    return order;
}

std::vector<int> FinitePoset::minimal_upper_bounds(int a, int b) const {
    std::vector<int> ub;
    for (int c = 0; c < n_; ++c)
        if (leq_[a][c] && leq_[b][c]) ub.push_back(c);
    std::vector<int> out;
    for (int c : ub) {
        bool minimal = true;
        for (int d : ub)
            if (d != c && lt(d, c)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    return out;
}

std::optional<int> FinitePoset::find_label(const std::vector<Rat>& label) const {
    for (int a = 0; a < n_; ++a)
        if (labels_[a] == label) return a;
    return std::nullopt;
}

FinitePoset product_poset(const FinitePoset& p, const FinitePoset& q) {
    int n = p.size() * q.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::string> names(n);
    std::vector<std::vector<Rat>> labels(n);
    auto id = [&](int a, int b) { return a * q.size() + b; };
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b) {
            names[id(a, b)] = "(" + p.name(a) + "," + q.name(b) + ")";
            std::vector<Rat> lab = p.label(a);
            lab.insert(lab.end(), q.label(b).begin(), q.label(b).end());
            labels[id(a, b)] = std::move(lab);
            for (int a2 = 0; a2 < p.size(); ++a2)
                for (int b2 = 0; b2 < q.size(); ++b2)
                    leq[id(a, b)][id(a2, b2)] = p.leq(a, a2) && q.leq(b, b2);
        }
    return FinitePoset::validate(n, leq, std::move(names), std::move(labels));
}

}  // namespace ppersist
