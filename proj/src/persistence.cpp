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

#include "ppersist/persistence.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ppersist/parallel.hpp"

namespace ppersist {

void PersistenceModule::validate() const {
    if (static_cast<int>(dims.size()) != index.size())
        throw validation_error("module: dims not total on the index");
    for (const auto& [cover, m] : maps) {
        auto [a, b] = cover;
        if (m.rows() != dims[b] || m.cols() != dims[a])
            throw validation_error("module: structure map shape mismatch on a cover");
        if (m.field() != field) throw validation_error("module: mixed fields");
    }
    for (auto [a, b] : index.covers())
        if (!maps.count({a, b})) throw validation_error("module: missing map on a cover");
    // path independence: recompute every composite, which throws on any
    // two cover paths that disagree
    for (int a = 0; a < index.size(); ++a)
        for (int b = 0; b < index.size(); ++b)
            if (index.leq(a, b)) map_between(a, b);
}

Matrix PersistenceModule::map_between(int a, int b) const {
    if (!index.leq(a, b)) throw validation_error("module: indices are not comparable");
    std::vector<std::optional<Matrix>> acc(index.size());
    acc[a] = Matrix::identity(dims[a], field);
    for (int c : index.linear_extension()) {
        if (!index.lt(a, c) || !index.leq(c, b)) continue;
        for (auto [p, q] : index.covers()) {
            if (q != c || !acc[p]) continue;
            Matrix candidate = maps.at({p, q}).mul(*acc[p]);
            if (!acc[c])
                acc[c] = std::move(candidate);
            else if (*acc[c] != candidate)
                throw internal_check_error("module: two cover paths disagree between " +
                                           index.name(a) + " and " + index.name(c));
        }
    }
    if (!acc[b]) throw internal_check_error("module: no cover path found on a comparable pair");
    return *acc[b];
}

void ModuleMorphism::validate() const {
    if (source.index.size() != target.index.size())
        throw validation_error("morphism: index mismatch");
    if (source.field != target.field) throw validation_error("morphism: field mismatch");
    if (static_cast<int>(components.size()) != source.index.size())
        throw validation_error("morphism: component count mismatch");
    for (int s = 0; s < source.index.size(); ++s)
        if (components[s].rows() != target.dims[s] || components[s].cols() != source.dims[s])
            throw validation_error("morphism: component shape mismatch");
    for (auto [a, b] : source.index.covers()) {
        Matrix lhs = components[b].mul(source.maps.at({a, b}));
        Matrix rhs = target.maps.at({a, b}).mul(components[a]);
        if (lhs != rhs) throw validation_error("morphism: naturality square fails on a cover");
    }
}

bool ModuleMorphism::is_zero() const {
    for (const auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

void sort_bars(Barcode& b) {
    std::sort(b.bars.begin(), b.bars.end(), [](const Bar& x, const Bar& y) {
        if (x.birth != y.birth) return x.birth < y.birth;
        if (x.death.has_value() != y.death.has_value()) return x.death.has_value();
        if (!x.death) return false;
        return *x.death < *y.death;
    });
}

PersistenceModule module_from_filtration(const FilteredPair& fp, int degree, FieldSpec field) {
    const FinitePoset& index = fp.index();
    PersistenceModule m;
    m.index = index;
    m.field = field;
    m.dims.resize(index.size());

    std::vector<std::optional<Pair>> pairs(index.size());
    std::vector<std::optional<HomologySpace>> spaces(index.size());
    parallel_for(index.size(), [&](int s) {
        pairs[s] = fp.sub_pair(s);
        spaces[s].emplace(*pairs[s], degree, field);
    });
    for (int s = 0; s < index.size(); ++s) m.dims[s] = spaces[s]->rank();

    auto covers = index.covers();
    std::vector<Matrix> cover_maps(covers.size());
    parallel_for(static_cast<int>(covers.size()), [&](int i) {
        auto [a, b] = covers[i];
        cover_maps[i] = induced_map(VertexMap{}, *spaces[a], *spaces[b], *pairs[b]);
    });
    for (size_t i = 0; i < covers.size(); ++i) m.maps.emplace(covers[i], std::move(cover_maps[i]));
    m.validate();
    return m;
}

HomologyResult persistent_range(const FilteredPair& fp, int degree, int s, int s2,
                                FieldSpec field) {
    if (s < 0 || s >= fp.index().size() || s2 < 0 || s2 >= fp.index().size())
        throw validation_error("persistent_range: unknown index element");
    if (!fp.index().leq(s, s2))
        throw validation_error("persistent_range: incomparable indices " + fp.index().name(s) +
                               ", " + fp.index().name(s2));
    Pair ps = fp.sub_pair(s), pt = fp.sub_pair(s2);
    HomologySpace hs(ps, degree, field), ht(pt, degree, field);
    Matrix induced = induced_map(VertexMap{}, hs, ht, pt);
    Matrix image = induced.image_basis();  // coordinates in ht's representative basis
    HomologyResult out;
    out.degree = degree;
    out.rank = image.cols();
    out.cycle_basis = ht.representatives().mul(image);
    return out;
}

RankInvariant rank_invariant(const PersistenceModule& m) {
    RankInvariant ri;
    for (int a = 0; a < m.index.size(); ++a)
        for (int b = 0; b < m.index.size(); ++b) {
            if (!m.index.leq(a, b)) continue;
            ri.ranks[{a, b}] = a == b ? m.dims[a] : m.map_between(a, b).rank();
        }
    return ri;
}

namespace {

std::vector<Rat> chain_labels(const FinitePoset& index, const std::vector<int>& order) {
    if (!index.has_labels())
        throw validation_error("persistence: chain index must carry rational labels");
    std::vector<Rat> labels;
    for (int s : order) {
        if (index.label(s).size() != 1)
            throw validation_error("persistence: chain labels must be single rationals");
        labels.push_back(index.label(s)[0]);
    }
    for (size_t i = 1; i < labels.size(); ++i)
        if (!(labels[i - 1] < labels[i]))
            throw validation_error(
                "persistence: chain labels must increase along the order (reversed axes are "
                "grid-only)");
    return labels;
}

}  // namespace

Barcode barcode_1d(const PersistenceModule& m, bool unbounded_above, int degree) {
    auto order = m.index.chain_order();
    auto labels = chain_labels(m.index, order);
    int n = static_cast<int>(order.size());

    // ranks r[i][j] of the composite from position i to j
    std::vector<std::vector<int>> r(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        r[i][i] = m.dims[order[i]];
        Matrix acc = Matrix::identity(m.dims[order[i]], m.field);
        for (int j = i + 1; j < n; ++j) {
            acc = m.maps.at({order[j - 1], order[j]}).mul(acc);
            r[i][j] = acc.rank();
        }
    }

    auto rk = [&](int i, int j) { return (i < 0 || j < 0 || i > j) ? 0 : r[i][j]; };
    Barcode out;
    out.degree = degree;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int count = rk(i, j - 1) - rk(i, j) - rk(i - 1, j - 1) + rk(i - 1, j);
            if (count < 0) throw internal_check_error("barcode: negative multiplicity");
            for (int c = 0; c < count; ++c) out.bars.push_back({labels[i], labels[j]});
        }
        int live = rk(i, n - 1) - rk(i - 1, n - 1);
        if (live < 0) throw internal_check_error("barcode: negative multiplicity at infinity");
        for (int c = 0; c < live; ++c) {
            if (unbounded_above)
                out.bars.push_back({labels[i], std::nullopt});
            else if (labels[i] != labels[n - 1])
                out.bars.push_back({labels[i], labels[n - 1]});
        }
    }
    sort_bars(out);
    return out;
}

Barcode barcode_from_filtration(const FilteredPair& fp, int degree, FieldSpec field,
                                bool unbounded_above) {
    auto order = fp.index().chain_order();
    auto labels = chain_labels(fp.index(), order);
    std::vector<int> position(fp.index().size());
    for (size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

    // simplices of X \ Y ordered by (entry position, dimension, lex)
    struct Cell {
        int pos;
        int dim;
        Simplex s;
    };
    std::vector<Cell> cells;
    const auto& x = fp.pair().x;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k)) {
            if (fp.pair().y.contains(s)) continue;
            cells.push_back({position[fp.entry(s)], k, s});
        }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.s < b.s;
    });
    std::map<Simplex, int> cell_index;
    for (size_t i = 0; i < cells.size(); ++i) cell_index[cells[i].s] = static_cast<int>(i);

    int n = static_cast<int>(cells.size());
    FieldOps ops(field);
    Matrix boundary(n, n, field);
    for (int j = 0; j < n; ++j) {
        const Simplex& s = cells[j].s;
        if (s.size() == 1) continue;
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) face.push_back(s[t]);
            auto it = cell_index.find(face);
            if (it == cell_index.end()) continue;  // face in Y
            boundary.set(it->second, j, ops.normalize(drop % 2 == 0 ? Rat(1) : Rat(-1)));
        }
    }
    boundary.compact();
    auto red = boundary.column_reduce();

    Barcode out;
    out.degree = degree;
    std::vector<bool> is_death(n, false);
    std::vector<int> low_of(n, -1);
    for (int j = 0; j < n; ++j) {
        int low = -1;
        for (int i = n - 1; i >= 0; --i)
            if (red.r.at(i, j) != 0) {
                low = i;
                break;
            }
        low_of[j] = low;
        if (low >= 0) is_death[j] = true;
    }
    for (int j = 0; j < n; ++j) {
        if (low_of[j] >= 0) {
            int i = low_of[j];
            if (cells[i].dim != degree) continue;
            if (cells[i].pos == cells[j].pos) continue;  // born and killed at the same label
            out.bars.push_back({labels[cells[i].pos], labels[cells[j].pos]});
        }
    }
    // columns that reduce to zero and are never a pivot row: immortal classes
    std::vector<bool> killed(n, false);
    for (int j = 0; j < n; ++j)
        if (low_of[j] >= 0) killed[low_of[j]] = true;
    for (int j = 0; j < n; ++j) {
        if (low_of[j] >= 0 || killed[j] || cells[j].dim != degree) continue;
        if (unbounded_above)
            out.bars.push_back({labels[cells[j].pos], std::nullopt});
        else if (labels[cells[j].pos] != labels.back())
            out.bars.push_back({labels[cells[j].pos], labels.back()});
    }
    sort_bars(out);
    return out;
}

FiniteTypeInfo is_finite_type_and_tame(const PersistenceModule& m) {
    auto order = m.index.chain_order();
    auto labels = chain_labels(m.index, order);
    FiniteTypeInfo info;
    info.finite_type = true;  // every finite chain module splits into intervals
    for (size_t j = 1; j < order.size(); ++j) {
        const Matrix& step = m.maps.at({order[j - 1], order[j]});
        bool iso = step.rows() == step.cols() && step.rank() == step.rows();
        if (!iso) info.criticals.push_back(labels[j]);
    }
    return info;
}

PersistenceModule discretize_Z(const PersistenceModule& m,
                               const std::vector<Rat>& extra_criticals) {
    auto order = m.index.chain_order();
    auto labels = chain_labels(m.index, order);

    std::set<Rat> crit_set;
    for (const Rat& c : is_finite_type_and_tame(m).criticals) crit_set.insert(c);
    for (const Rat& c : extra_criticals) {
        if (std::find(labels.begin(), labels.end(), c) == labels.end())
            throw validation_error("discretize: extra critical is not a grid label");
        if (c != labels.front()) crit_set.insert(c);
    }
    std::vector<Rat> criticals(crit_set.begin(), crit_set.end());

    PersistenceModule out;
    out.field = m.field;
    if (criticals.empty()) {
        out.index = FinitePoset::chain({Rat(0)});
        out.dims = {m.dims[order[0]]};
        return out;
    }

    // sample positions: below the first critical, then at each critical
    std::vector<int> sample_pos;
    auto pos_of = [&](const Rat& label) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                                labels.begin());
    };
    sample_pos.push_back(pos_of(criticals.front()) - 1);
    for (const Rat& c : criticals) sample_pos.push_back(pos_of(c));

    int m_count = static_cast<int>(criticals.size());
    std::vector<Rat> zlabels;
    for (int i = -1; i < m_count; ++i) zlabels.push_back(Rat(i));
    out.index = FinitePoset::chain(zlabels);
    out.dims.resize(m_count + 1);
    for (int i = 0; i <= m_count; ++i) out.dims[i] = m.dims[order[sample_pos[i]]];
    for (int i = 0; i + 1 <= m_count; ++i)
        out.maps.emplace(std::pair<int, int>{i, i + 1},
                         m.map_between(order[sample_pos[i]], order[sample_pos[i + 1]]));
    out.validate();
    return out;
}

ModuleMorphism discretize_morphism(const ModuleMorphism& alpha) {
    alpha.validate();
    auto crit_src = is_finite_type_and_tame(alpha.source).criticals;
    auto crit_tgt = is_finite_type_and_tame(alpha.target).criticals;
    std::set<Rat> joint(crit_src.begin(), crit_src.end());
    joint.insert(crit_tgt.begin(), crit_tgt.end());
    std::vector<Rat> extras(joint.begin(), joint.end());

    ModuleMorphism out;
    out.source = discretize_Z(alpha.source, extras);
    out.target = discretize_Z(alpha.target, extras);

    auto order = alpha.source.index.chain_order();
    auto labels = chain_labels(alpha.source.index, order);
    if (extras.empty()) {
        out.components = {alpha.components[order[0]]};
    } else {
        auto pos_of = [&](const Rat& label) {
            return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) -
                                    labels.begin());
        };
        out.components.push_back(alpha.components[order[pos_of(extras.front()) - 1]]);
        for (const Rat& c : extras) out.components.push_back(alpha.components[order[pos_of(c)]]);
    }
    out.validate();
    return out;
}

PersistenceModule reconstruct_R(const PersistenceModule& fz, const Barcode& barcode) {
    auto zorder = fz.index.chain_order();
    auto zlabels = chain_labels(fz.index, zorder);

    std::set<Rat> endpoint_set;
    for (const Bar& b : barcode.bars) {
        endpoint_set.insert(b.birth);
        if (b.death) endpoint_set.insert(*b.death);
    }
    std::vector<Rat> criticals(endpoint_set.begin(), endpoint_set.end());

    // the integer module is read with constant extension outside its window
    for (size_t i = 0; i < zlabels.size(); ++i) {
        if (boost::multiprecision::denominator(zlabels[i]) != 1 ||
            (i > 0 && zlabels[i] != zlabels[i - 1] + 1))
            throw validation_error("reconstruct: expected consecutive integer labels");
    }
    long first = boost::multiprecision::numerator(zlabels.front()).convert_to<long>();
    auto z_at = [&](int n) {
        int pos = static_cast<int>(std::min<long>(
            std::max<long>(n - first, 0), static_cast<long>(zorder.size()) - 1));
        return zorder[pos];
    };

    PersistenceModule out;
    out.field = fz.field;
    if (criticals.empty()) {
        if (fz.dims[z_at(0)] != 0)
            throw validation_error("reconstruct: empty barcode but nonzero module");
        out.index = FinitePoset::chain({Rat(0)});
        out.dims = {0};
        return out;
    }

    std::vector<Rat> labels;
    labels.push_back(criticals.front() - 1);
    labels.insert(labels.end(), criticals.begin(), criticals.end());
    out.index = FinitePoset::chain(labels);
    int n = static_cast<int>(labels.size());
    out.dims.resize(n);
    for (int i = 0; i < n; ++i) {
        out.dims[i] = fz.dims[z_at(i - 1)];
        // consistency: dims must match the bar count over the sample point
        int expected = 0;
        for (const Bar& b : barcode.bars) {
            const Rat& sample = labels[i];
            if (b.birth <= sample && (!b.death || *b.death > sample)) ++expected;
        }
        if (expected != out.dims[i])
            throw validation_error("reconstruct: integer module dims disagree with barcode at " +
                                   rat_to_string(labels[i]));
    }
    for (int i = 0; i + 1 < n; ++i) {
        int a = z_at(i - 1), b = z_at(i);
        Matrix step = a == b ? Matrix::identity(fz.dims[a], fz.field) : fz.map_between(a, b);
        out.maps.emplace(std::pair<int, int>{i, i + 1}, std::move(step));
    }
    out.validate();
    return out;
}

PersistenceModule tensor_product(const PersistenceModule& m, const PersistenceModule& n) {
    if (m.index.size() != n.index.size() || m.field != n.field)
        throw validation_error("tensor: index or field mismatch");
    for (int a = 0; a < m.index.size(); ++a)
        for (int b = 0; b < m.index.size(); ++b)
            if (m.index.leq(a, b) != n.index.leq(a, b))
                throw validation_error("tensor: index order mismatch");
    PersistenceModule out;
    out.index = m.index;
    out.field = m.field;
    out.dims.resize(m.index.size());
    for (int s = 0; s < m.index.size(); ++s) out.dims[s] = m.dims[s] * n.dims[s];
    for (const auto& [cover, mm] : m.maps)
        out.maps.emplace(cover, mm.kronecker(n.maps.at(cover)));
    out.validate();
    return out;
}

PersistenceModule unit_module(const FinitePoset& index, FieldSpec field) {
    PersistenceModule out;
    out.index = index;
    out.field = field;
    out.dims.assign(index.size(), 1);
    for (auto cover : index.covers()) out.maps.emplace(cover, Matrix::identity(1, field));
    return out;
}

PersistenceModule interval_module(const FinitePoset& chain, const Rat& birth,
                                  const std::optional<Rat>& death, FieldSpec field) {
    if (death && !(birth < *death))
        throw validation_error("interval: birth must precede death");
    PersistenceModule out;
    out.index = chain;
    out.field = field;
    out.dims.resize(chain.size());
    auto inside = [&](int s) {
        const Rat& l = chain.label(s)[0];
        return birth <= l && (!death || l < *death);
    };
    for (int s = 0; s < chain.size(); ++s) out.dims[s] = inside(s) ? 1 : 0;
    for (auto [a, b] : chain.covers()) {
        Matrix step(out.dims[b], out.dims[a], field);
        if (inside(a) && inside(b)) step.set(0, 0, Rat(1));
        out.maps.emplace(std::pair<int, int>{a, b}, std::move(step));
    }
    return out;
}

PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b) {
    if (a.index.size() != b.index.size() || a.field != b.field)
        throw validation_error("direct_sum: index or field mismatch");
    PersistenceModule out;
    out.index = a.index;
    out.field = a.field;
    out.dims.resize(a.index.size());
    for (int s = 0; s < a.index.size(); ++s) out.dims[s] = a.dims[s] + b.dims[s];
    for (const auto& [cover, ma] : a.maps) {
        const Matrix& mb = b.maps.at(cover);
        Matrix block(ma.rows() + mb.rows(), ma.cols() + mb.cols(), a.field);
        for (int i = 0; i < ma.rows(); ++i)
            for (int j = 0; j < ma.cols(); ++j) block.set(i, j, ma.at(i, j));
        for (int i = 0; i < mb.rows(); ++i)
            for (int j = 0; j < mb.cols(); ++j)
                block.set(ma.rows() + i, ma.cols() + j, mb.at(i, j));
        out.maps.emplace(cover, std::move(block));
    }
    return out;
}

int snap_down(const FinitePoset& chain, const Rat& value) {
    auto order = chain.chain_order();
    auto labels = chain_labels(chain, order);
    int best = 0;
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] <= value) best = static_cast<int>(i);
    return order[best];
}

PersistenceModule shifted_module(const PersistenceModule& m, const Rat& lambda) {
    if (lambda < 0) throw validation_error("shifted_module: shift must be >= 0");
    auto order = m.index.chain_order();
    auto labels = chain_labels(m.index, order);
    int n = static_cast<int>(order.size());

    // image basis of t -> snap(t + lambda), as columns over dims[target]
    std::vector<int> target(n);
    std::vector<Matrix> image(n, Matrix(0, 0, m.field));
    for (int i = 0; i < n; ++i) {
        target[i] = snap_down(m.index, labels[i] + lambda);
        image[i] = m.map_between(order[i], target[i]).image_basis();
    }

    PersistenceModule out;
    out.index = m.index;
    out.field = m.field;
    out.dims.assign(m.index.size(), 0);
    for (int i = 0; i < n; ++i) out.dims[order[i]] = image[i].cols();
    for (int i = 0; i + 1 < n; ++i) {
        // push the image basis forward and express it in the next basis;
        // functoriality keeps it inside
        Matrix forward = m.map_between(target[i], target[i + 1]);
        auto sol = LinearSolver(image[i + 1]).solve_matrix(forward.mul(image[i]));
        if (!sol) throw internal_check_error("shifted_module: image escapes the target basis");
        out.maps.emplace(std::pair<int, int>{order[i], order[i + 1]}, *sol);
    }
    out.validate();
    return out;
}

bool is_good_vertex(const FilteredPair& fp, int degree, const Rat& lambda, FieldSpec field) {
    if (lambda < 0) throw validation_error("is_good_vertex: shift must be >= 0");
    auto order = fp.index().chain_order();
    auto labels = chain_labels(fp.index(), order);
    int top_degree = std::max(fp.pair().x.dim(), degree);
    for (size_t i = 0; i < order.size(); ++i) {
        int target = snap_down(fp.index(), labels[i] + lambda);
        for (int j = 0; j <= top_degree; ++j) {
            if (j == degree) continue;
            if (persistent_range(fp, j, order[i], target, field).rank != 0) return false;
        }
    }
    return true;
}

namespace {

// Feasibility of a perfect matching with all costs <= eps, by augmenting
// paths on the padded bipartite graph.
bool bottleneck_feasible(const std::vector<std::vector<bool>>& adj) {
    int left = static_cast<int>(adj.size());
    if (left == 0) return true;
    int right = static_cast<int>(adj[0].size());
    std::vector<int> match_right(right, -1);
    std::function<bool(int, std::vector<bool>&)> augment = [&](int u, std::vector<bool>& seen) {
        for (int v = 0; v < right; ++v) {
            if (!adj[u][v] || seen[v]) continue;
            seen[v] = true;
            if (match_right[v] < 0 || augment(match_right[v], seen)) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < left; ++u) {
        std::vector<bool> seen(right, false);
        if (!augment(u, seen)) return false;
    }
    return true;
}

}  // namespace

BarcodeComparison compare_barcodes(const Barcode& a, const Barcode& b) {
    if (a.degree != b.degree) throw validation_error("compare_barcodes: degree mismatch");
    Barcode sa = a, sb = b;
    sort_bars(sa);
    sort_bars(sb);
    BarcodeComparison out;
    out.equal = sa.bars == sb.bars;

    int na = static_cast<int>(sa.bars.size());
    int nb = static_cast<int>(sb.bars.size());
    int essential_a = 0, essential_b = 0;
    for (const Bar& bar : sa.bars) essential_a += bar.death ? 0 : 1;
    for (const Bar& bar : sb.bars) essential_b += bar.death ? 0 : 1;
    if (essential_a != essential_b) return out;  // no finite matching exists

    // candidate displacement values: pair costs, diagonal costs, zero
    auto pair_cost = [&](const Bar& x, const Bar& y) -> std::optional<Rat> {
        if (x.death.has_value() != y.death.has_value()) return std::nullopt;
        Rat c = boost::multiprecision::abs(x.birth - y.birth);
        if (x.death) c = std::max(c, Rat(boost::multiprecision::abs(*x.death - *y.death)));
        return c;
    };
    auto diag_cost = [&](const Bar& x) -> std::optional<Rat> {
        if (!x.death) return std::nullopt;
        return Rat((*x.death - x.birth) / 2);
    };

    std::set<Rat> candidates{Rat(0)};
    for (const Bar& x : sa.bars) {
        if (auto d = diag_cost(x)) candidates.insert(*d);
        for (const Bar& y : sb.bars)
            if (auto c = pair_cost(x, y)) candidates.insert(*c);
    }
    for (const Bar& y : sb.bars)
        if (auto d = diag_cost(y)) candidates.insert(*d);

    // padded graph: left = A bars + nb dummies, right = B bars + na dummies
    auto feasible = [&](const Rat& eps) {
        int l = na + nb, r = nb + na;
        std::vector<std::vector<bool>> adj(l, std::vector<bool>(r, false));
        for (int i = 0; i < na; ++i) {
            for (int j = 0; j < nb; ++j) {
                auto c = pair_cost(sa.bars[i], sb.bars[j]);
                adj[i][j] = c && *c <= eps;
            }
            auto d = diag_cost(sa.bars[i]);
            for (int j = 0; j < na; ++j) adj[i][nb + j] = d && *d <= eps;
        }
        for (int i = 0; i < nb; ++i) {
            auto d = diag_cost(sb.bars[i]);
            for (int j = 0; j < nb; ++j) adj[na + i][j] = d && *d <= eps;
            for (int j = 0; j < na; ++j) adj[na + i][nb + j] = true;  // dummy-dummy
        }
        return bottleneck_feasible(adj);
    };

    for (const Rat& eps : candidates)
        if (feasible(eps)) {
            out.bottleneck = eps;
            break;
        }
    return out;
}

bool modules_isomorphic_1d(const PersistenceModule& a, const PersistenceModule& b) {
    auto oa = a.index.chain_order(), ob = b.index.chain_order();
    if (oa.size() != ob.size() || a.field != b.field) return false;
    auto la = chain_labels(a.index, oa), lb = chain_labels(b.index, ob);
    if (la != lb) return false;
    int n = static_cast<int>(oa.size());
    for (int i = 0; i < n; ++i)
        if (a.dims[oa[i]] != b.dims[ob[i]]) return false;
    for (int i = 0; i < n; ++i) {
        Matrix ma = Matrix::identity(a.dims[oa[i]], a.field);
        Matrix mb = Matrix::identity(b.dims[ob[i]], b.field);
        for (int j = i + 1; j < n; ++j) {
            ma = a.maps.at({oa[j - 1], oa[j]}).mul(ma);
            mb = b.maps.at({ob[j - 1], ob[j]}).mul(mb);
            if (ma.rank() != mb.rank()) return false;
        }
    }
    return true;
}

}  // namespace ppersist
