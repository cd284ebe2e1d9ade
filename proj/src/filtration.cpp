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

#include "ppersist/filtration.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ppersist {

WeightedPointCloud WeightedPointCloud::make(std::vector<std::vector<Rat>> points,
                                            std::vector<Rat> probs) {
    if (points.empty()) throw validation_error("point cloud: at least one point required");
    if (points.size() != probs.size())
        throw validation_error("point cloud: point/weight count mismatch");
    size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw validation_error("point cloud: mixed dimensions");
    for (const auto& p : probs)
        if (p < 0 || p > 1) throw validation_error("point cloud: weight outside [0,1]");
    WeightedPointCloud c;
    c.points = std::move(points);
    c.probs = std::move(probs);
    return c;
}

Rat WeightedPointCloud::dist2(int i, int j) const {
    Rat acc(0);
    for (size_t k = 0; k < points[i].size(); ++k) {
        Rat d = points[i][k] - points[j][k];
        acc += d * d;
    }
    return acc;
}

Rat WeightedPointCloud::max_dist2() const {
    Rat m(0);
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) m = std::max(m, dist2(i, j));
    return m;
}

void DatasetMorphism::validate(const WeightedPointCloud& source,
                               const WeightedPointCloud& target) const {
    if (static_cast<int>(vertex_map.size()) != source.size())
        throw validation_error("dataset morphism: map not total on source");
    for (int v : vertex_map)
        if (v < 0 || v >= target.size())
            throw validation_error("dataset morphism: image out of range");
    if (lipschitz_k <= 0) throw validation_error("dataset morphism: Lipschitz bound must be > 0");

    for (int y = 0; y < target.size(); ++y) {
        Rat pushed(0);
        for (int x = 0; x < source.size(); ++x)
            if (vertex_map[x] == y) pushed += source.probs[x];
        if (pushed != target.probs[y])
            throw validation_error("dataset morphism: pushforward weight mismatch at target " +
                                   std::to_string(y));
    }
    Rat k2 = lipschitz_k * lipschitz_k;
    for (int i = 0; i < source.size(); ++i)
        for (int j = i + 1; j < source.size(); ++j)
            if (target.dist2(vertex_map[i], vertex_map[j]) > k2 * source.dist2(i, j))
                throw validation_error("dataset morphism: Lipschitz bound violated on pair (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
}

FilteredPair FilteredPair::make(Pair pair, FinitePoset index,
                                const std::map<Simplex, std::vector<int>>& entry_min) {
    FilteredPair fp;
    fp.pair_ = std::move(pair);
    fp.index_ = std::move(index);
    const auto& x = fp.pair_.x;
    fp.entry_min_.resize(x.dim() + 1);
    for (int k = 0; k <= x.dim(); ++k) {
        fp.entry_min_[k].resize(x.count(k));
        for (int i = 0; i < x.count(k); ++i) {
            auto it = entry_min.find(x.simplices(k)[i]);
            if (it == entry_min.end())
                throw validation_error("filtration: missing entry for a simplex");
            for (int m : it->second)
                if (m < 0 || m >= fp.index_.size())
                    throw validation_error("filtration: unknown index element");
            fp.entry_min_[k][i] = it->second;
        }
    }
    // monotonicity: a simplex is present only where all its faces are
    for (int k = 1; k <= x.dim(); ++k)
        for (int i = 0; i < x.count(k); ++i) {
            const Simplex& s = x.simplices(k)[i];
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != drop) face.push_back(s[t]);
                for (int at = 0; at < fp.index_.size(); ++at)
                    if (fp.present(s, at) && !fp.present(face, at))
                        throw validation_error("filtration: entries are not monotone over faces");
            }
        }
    return fp;
}

bool FilteredPair::present(const Simplex& s, int at) const {
    int k = static_cast<int>(s.size()) - 1;
    auto idx = pair_.x.index_of(s);
    if (!idx) throw validation_error("filtration: simplex not in the pair");
    for (int m : entry_min_[k][*idx])
        if (index_.leq(m, at)) return true;
    return false;
}

Pair FilteredPair::sub_pair(int at) const {
    std::vector<Simplex> xs, ys;
    for (int k = 0; k <= pair_.x.dim(); ++k)
        for (const auto& s : pair_.x.simplices(k)) {
            if (!present(s, at)) continue;
            xs.push_back(s);
            if (pair_.y.contains(s)) ys.push_back(s);
        }
    SimplicialComplex x =
        xs.empty() ? SimplicialComplex{} : SimplicialComplex::from_simplices(xs);
    SimplicialComplex y =
        ys.empty() ? SimplicialComplex{} : SimplicialComplex::from_simplices(ys);
    return Pair::make(std::move(x), std::move(y));
}

int FilteredPair::entry(const Simplex& s) const {
    const auto& mins = entry_min(s);
    if (mins.size() != 1)
        throw validation_error("filtration: entry antichain is not a singleton");
    return mins[0];
}

const std::vector<int>& FilteredPair::entry_min(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    auto idx = pair_.x.index_of(s);
    if (!idx) throw validation_error("filtration: simplex not in the pair");
    return entry_min_[k][*idx];
}

SimplicialComplex sublevel_complex(const SimplicialComplex& x, const std::map<int, int>& f,
                                   const FinitePoset& index, int s) {
    if (s < 0 || s >= index.size()) throw validation_error("sublevel: unknown index element");
    std::vector<int> keep;
    for (int v : x.vertex_ids()) {
        auto it = f.find(v);
        if (it == f.end()) throw validation_error("sublevel: f not total on vertices");
        if (it->second < 0 || it->second >= index.size())
            throw validation_error("sublevel: unknown index element in f");
        if (index.leq(it->second, s)) keep.push_back(v);
    }
    return x.induced(keep);
}

FilteredPair sublevel_filtration(const Pair& p, const std::map<int, int>& f, FinitePoset index) {
    std::map<Simplex, std::vector<int>> entries;
    for (int k = 0; k <= p.x.dim(); ++k)
        for (const auto& s : p.x.simplices(k)) {
            // a simplex is present where every vertex value is dominated:
            // minimal elements of the intersection of the vertex up-sets
            std::vector<int> current;
            for (size_t i = 0; i < s.size(); ++i) {
                auto it = f.find(s[i]);
                if (it == f.end())
                    throw validation_error("sublevel_filtration: f not total on vertices");
                if (i == 0) {
                    current = {it->second};
                    continue;
                }
                std::set<int> merged;
                for (int m : current)
                    for (int u : index.minimal_upper_bounds(m, it->second)) merged.insert(u);
                // keep only minimal elements of the union
                std::vector<int> cand(merged.begin(), merged.end());
                std::vector<int> mins;
                for (int c : cand) {
                    bool minimal = true;
                    for (int d : cand)
                        if (d != c && index.lt(d, c)) {
                            minimal = false;
                            break;
                        }
                    if (minimal) mins.push_back(c);
                }
                current = std::move(mins);
            }
            entries[s] = current;
        }
    return FilteredPair::make(p, std::move(index), entries);
}

SimplicialComplex vr_complex(const WeightedPointCloud& cloud, const Rat& t2, const Rat& lambda,
                             int max_dim) {
    if (t2 < 0) throw validation_error("vr_complex: squared scale must be >= 0");
    if (lambda < 0 || lambda > 1) throw validation_error("vr_complex: cutoff outside [0,1]");
    std::vector<int> verts;
    for (int i = 0; i < cloud.size(); ++i)
        if (cloud.probs[i] >= lambda) verts.push_back(i);
    if (verts.empty()) return {};

    std::vector<Simplex> simplices;
    std::vector<int> stack;
    // depth-first clique enumeration in vertex order
    std::function<void(size_t)> extend = [&](size_t from) {
        simplices.push_back(stack);
        if (static_cast<int>(stack.size()) == max_dim + 1) return;
        for (size_t i = from; i < verts.size(); ++i) {
            bool close = true;
            for (int u : stack)
                if (cloud.dist2(u, verts[i]) > t2) {
                    close = false;
                    break;
                }
            if (!close) continue;
            stack.push_back(verts[i]);
            extend(i + 1);
            stack.pop_back();
        }
    };
    for (size_t i = 0; i < verts.size(); ++i) {
        stack = {verts[i]};
        extend(i + 1);
    }
    return SimplicialComplex::from_simplices(simplices);
}

namespace {

FilteredPair vr_build(const WeightedPointCloud& cloud, int max_dim,
                      const std::vector<int>& marked, bool bifiltration) {
    // critical squared scales
    std::set<Rat> t_set{Rat(0)};
    for (int i = 0; i < cloud.size(); ++i)
        for (int j = i + 1; j < cloud.size(); ++j) t_set.insert(cloud.dist2(i, j));
    std::vector<Rat> t_axis(t_set.begin(), t_set.end());

    FinitePoset index;
    if (bifiltration) {
        std::set<Rat> p_set(cloud.probs.begin(), cloud.probs.end());
        std::vector<Rat> p_axis(p_set.begin(), p_set.end());
        index = product_poset(FinitePoset::chain(t_axis),
                              FinitePoset::chain(p_axis, /*reversed=*/true));
    } else {
        std::vector<Rat> labels;
        labels.push_back(t_axis.front() - 1);
        labels.insert(labels.end(), t_axis.begin(), t_axis.end());
        labels.push_back(t_axis.back() + 1);
        index = FinitePoset::chain(labels);
    }

    SimplicialComplex x = vr_complex(cloud, cloud.max_dist2(), Rat(0), max_dim);
    SimplicialComplex y = marked.empty() ? SimplicialComplex{} : x.induced(marked);

    std::map<Simplex, std::vector<int>> entries;
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& s : x.simplices(k)) {
            Rat max_d2(0);
            Rat min_p = cloud.probs[s[0]];
            for (size_t a = 0; a < s.size(); ++a) {
                min_p = std::min(min_p, cloud.probs[s[a]]);
                for (size_t b = a + 1; b < s.size(); ++b)
                    max_d2 = std::max(max_d2, cloud.dist2(s[a], s[b]));
            }
            std::optional<int> elem = bifiltration
                                          ? index.find_label({max_d2, min_p})
                                          : index.find_label({max_d2});
            if (!elem) throw internal_check_error("vr filtration: entry label missing from grid");
            entries[s] = {*elem};
        }
    return FilteredPair::make(Pair::make(std::move(x), std::move(y)), std::move(index), entries);
}

}  // namespace

FilteredPair vr_bifiltration(const WeightedPointCloud& cloud, int max_dim,
                             const std::vector<int>& marked) {
    return vr_build(cloud, max_dim, marked, true);
}

FilteredPair vr_filtration_1d(const WeightedPointCloud& cloud, int max_dim) {
    return vr_build(cloud, max_dim, {}, false);
}

InducedVrMap induced_vr_map(const DatasetMorphism& m, const WeightedPointCloud& source,
                            const WeightedPointCloud& target, const Rat& t2, const Rat& lambda,
                            bool mlambda_mode) {
    m.validate(source, target);
    Rat lambda_out = lambda;
    if (mlambda_mode) {
        // m = minimum fiber cardinality over target points
        int min_fiber = source.size() + 1;
        for (int y = 0; y < target.size(); ++y) {
            int fiber = 0;
            for (int x : m.vertex_map)
                if (x == y) ++fiber;
            min_fiber = std::min(min_fiber, fiber);
        }
        lambda_out = std::min(Rat(1), Rat(min_fiber) * lambda);
    }

    std::map<int, int> images;
    for (int i = 0; i < source.size(); ++i) {
        if (source.probs[i] < lambda) continue;
        if (target.probs[m.vertex_map[i]] < lambda_out)
            throw vr_escape_error(i, "induced_vr_map: image of retained point " +
                                         std::to_string(i) +
                                         " falls below the target cutoff");
        images[i] = m.vertex_map[i];
    }
    return InducedVrMap{VertexMap(images), m.lipschitz_k * m.lipschitz_k * t2, lambda_out};
}

FilteredPair graph_sublevel_family(const GraphFamily& family) {
    const auto& h = family.h;
    const auto& g = family.g;
    if (static_cast<int>(family.label.size()) != g.vertices)
        throw validation_error("graph family: label not total on V(g)");
    for (int v : family.label)
        if (v < 0 || v >= h.vertices) throw validation_error("graph family: label out of range");
    for (auto [u, v] : g.edges)
        if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
            throw validation_error("graph family: edge out of range in g");
    for (auto [u, v] : h.edges)
        if (u < 0 || u >= h.vertices || v < 0 || v >= h.vertices)
            throw validation_error("graph family: edge out of range in h");

    // reachability of h (empty paths included)
    int n = h.vertices;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reach[i][i] = true;
    for (auto [u, v] : h.edges) reach[u][v] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (reach[u][v] && reach[v][u])
                throw cyclic_base_error({u, v},
                                        "graph family: base graph has a directed cycle through " +
                                            std::to_string(u) + " and " + std::to_string(v));
    FinitePoset index = FinitePoset::validate(n, reach);

    // 1-complex of g: vertices plus deduplicated undirected edges
    std::vector<Simplex> simplices;
    for (int v = 0; v < g.vertices; ++v) simplices.push_back({v});
    for (auto [u, v] : g.edges)
        if (u != v) simplices.push_back({std::min(u, v), std::max(u, v)});
    SimplicialComplex x = SimplicialComplex::from_simplices(simplices);

    std::map<Simplex, std::vector<int>> entries;
    for (int v = 0; v < g.vertices; ++v) entries[{v}] = {family.label[v]};
    for (const auto& e : x.simplices(1))
        entries[e] = index.minimal_upper_bounds(family.label[e[0]], family.label[e[1]]);
    return FilteredPair::make(Pair::absolute(std::move(x)), std::move(index), entries);
}

std::vector<Rat> critical_values(const FilteredPair& fp) {
    const auto& index = fp.index();
    if (!index.is_chain() || !index.has_labels())
        throw validation_error("critical_values: index is not a labeled chain");
    std::set<Rat> labels;
    for (int k = 0; k <= fp.pair().x.dim(); ++k)
        for (const auto& s : fp.pair().x.simplices(k))
            labels.insert(index.label(fp.entry(s))[0]);
    return std::vector<Rat>(labels.begin(), labels.end());
}

}  // namespace ppersist
