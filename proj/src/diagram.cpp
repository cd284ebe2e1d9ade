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

#include "ppersist/diagram.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace ppersist {

void Diagram::validate() const {
    int n = static_cast<int>(vertices.size());
    std::set<std::string> ids;
    for (const auto& v : vertices)
        if (!ids.insert(v).second) throw validation_error("diagram: duplicate vertex id " + v);
    for (const auto& e : edges) {
        if (e.src < 0 || e.src >= n || e.tgt < 0 || e.tgt >= n)
            throw validation_error("diagram: edge endpoint out of range");
        if (!ids.insert(e.id).second) throw validation_error("diagram: duplicate edge id " + e.id);
    }
    if (!identity_edge.empty()) {
        if (static_cast<int>(identity_edge.size()) != n)
            throw validation_error("diagram: identity table has wrong size");
        for (int v = 0; v < n; ++v) {
            int e = identity_edge[v];
            if (e < 0) continue;
            if (e >= static_cast<int>(edges.size()) || edges[e].src != v || edges[e].tgt != v)
                throw validation_error("diagram: identity of " + vertices[v] +
                                       " is not a loop at it");
        }
    }
}

bool Diagram::has_identities() const {
    if (identity_edge.size() != vertices.size()) return false;
    for (int e : identity_edge)
        if (e < 0) return false;
    return !vertices.empty() || true;
}

void Diagram::attach_identities() {
    identity_edge.resize(vertices.size(), -1);
    for (size_t v = 0; v < vertices.size(); ++v) {
        if (identity_edge[v] >= 0) continue;
        identity_edge[v] = static_cast<int>(edges.size());
        edges.push_back({"id:" + vertices[v], static_cast<int>(v), static_cast<int>(v)});
    }
}

bool Diagram::is_identity(int edge) const {
    int v = edges[edge].src;
    return v == edges[edge].tgt && !identity_edge.empty() && identity_edge[v] == edge;
}

void DiagramRep::validate(const Diagram& d) const {
    if (dims.size() != d.vertices.size())
        throw validation_error("representation: wrong number of vertex dimensions");
    if (edge_maps.size() != d.edges.size())
        throw validation_error("representation: wrong number of edge maps");
    for (size_t e = 0; e < d.edges.size(); ++e) {
        const auto& m = edge_maps[e];
        if (m.rows() != dims[d.edges[e].tgt] || m.cols() != dims[d.edges[e].src])
            throw validation_error("representation: shape mismatch on edge " + d.edges[e].id);
        if (m.field() != field) throw validation_error("representation: mixed fields");
        if (d.is_identity(static_cast<int>(e)) && !m.is_identity())
            throw validation_error("representation: identity edge " + d.edges[e].id +
                                   " does not carry the identity matrix");
    }
}

std::vector<Rat> EndRing::flatten(const std::vector<Matrix>& tuple) const {
    std::vector<Rat> out;
    for (size_t v = 0; v < dims.size(); ++v)
        for (int i = 0; i < dims[v]; ++i)
            for (int j = 0; j < dims[v]; ++j) out.push_back(tuple[v].at(i, j));
    return out;
}

std::vector<Matrix> EndRing::unflatten(const std::vector<Rat>& coords) const {
    std::vector<Matrix> tuple;
    size_t k = 0;
    for (size_t v = 0; v < dims.size(); ++v) {
        Matrix block(dims[v], dims[v], field);
        for (int i = 0; i < dims[v]; ++i)
            for (int j = 0; j < dims[v]; ++j) block.set(i, j, coords[k++]);
        tuple.push_back(std::move(block));
    }
    return tuple;
}

std::vector<Matrix> EndRing::identity_tuple() const {
    std::vector<Matrix> tuple;
    for (int dv : dims) tuple.push_back(Matrix::identity(dv, field));
    return tuple;
}

std::vector<Matrix> EndRing::compose(const std::vector<Matrix>& a,
                                     const std::vector<Matrix>& b) const {
    std::vector<Matrix> out;
    for (size_t v = 0; v < dims.size(); ++v) out.push_back(a[v].mul(b[v]));
    return out;
}

std::optional<std::vector<Rat>> EndRing::coords_of(const std::vector<Matrix>& tuple) const {
    std::vector<std::vector<Rat>> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    Matrix span = Matrix::from_cols(cols, field);
    if (span.rows() == 0) {
        // zero-dimensional total space: anything flattens to the empty vector
        return std::vector<Rat>(basis.size(), Rat(0));
    }
    return span.solve(flatten(tuple));
}

EndRing end_ring(const Diagram& d, const DiagramRep& rep) {
    d.validate();
    rep.validate(d);
    EndRing ring;
    ring.dims = rep.dims;
    ring.field = rep.field;

    int total = 0;
    std::vector<int> offset(rep.dims.size());
    for (size_t v = 0; v < rep.dims.size(); ++v) {
        offset[v] = total;
        total += rep.dims[v] * rep.dims[v];
    }

    // rows: one constraint entry (i, j) per edge; unknown layout is
    // row-major per block in vertex order
    std::vector<std::vector<Rat>> rows;
    for (size_t e = 0; e < d.edges.size(); ++e) {
        if (d.is_identity(static_cast<int>(e))) continue;  // vacuous constraints
        int u = d.edges[e].src, w = d.edges[e].tgt;
        const Matrix& m = rep.edge_maps[e];
        FieldOps ops(rep.field);
        for (int i = 0; i < rep.dims[w]; ++i)
            for (int j = 0; j < rep.dims[u]; ++j) {
                std::vector<Rat> row(total, Rat(0));
                for (int k = 0; k < rep.dims[w]; ++k)
                    row[offset[w] + i * rep.dims[w] + k] =
                        ops.add(row[offset[w] + i * rep.dims[w] + k], m.at(k, j));
                for (int k = 0; k < rep.dims[u]; ++k)
                    row[offset[u] + k * rep.dims[u] + j] =
                        ops.sub(row[offset[u] + k * rep.dims[u] + j], m.at(i, k));
                rows.push_back(std::move(row));
            }
    }

    Matrix system = rows.empty() ? Matrix::zero(0, total, rep.field)
                                 : Matrix::from_rows(rows, rep.field);
    system.compact();
    Matrix null = system.nullspace_basis();
    for (int j = 0; j < null.cols(); ++j) ring.basis.push_back(ring.unflatten(null.col_vec(j)));
    verify_end_ring(d, rep, ring);
    return ring;
}

void verify_end_ring(const Diagram& d, const DiagramRep& rep, const EndRing& ring) {
    // every basis element satisfies the defining module-action constraint
    for (const auto& tuple : ring.basis)
        for (size_t e = 0; e < d.edges.size(); ++e) {
            int u = d.edges[e].src, w = d.edges[e].tgt;
            if (tuple[w].mul(rep.edge_maps[e]) != rep.edge_maps[e].mul(tuple[u]))
                throw internal_check_error("end ring: basis element violates edge " +
                                           d.edges[e].id);
        }
    // identity tuple lies in the span
    if (!ring.coords_of(ring.identity_tuple()))
        throw internal_check_error("end ring: identity tuple outside the span");
    // closure under blockwise composition
    for (const auto& a : ring.basis)
        for (const auto& b : ring.basis)
            if (!ring.coords_of(ring.compose(a, b)))
                throw internal_check_error("end ring: composition escapes the span");
}

EndRestriction restrict_end_ring(const Diagram& sub, const SubdiagramMap& into,
                                 const Diagram& ambient, const DiagramRep& ambient_rep) {
    sub.validate();
    ambient.validate();
    if (into.vertex_of.size() != sub.vertices.size() || into.edge_of.size() != sub.edges.size())
        throw validation_error("restrict: inclusion map has wrong arity");
    std::set<int> seen_v(into.vertex_of.begin(), into.vertex_of.end());
    if (seen_v.size() != into.vertex_of.size())
        throw validation_error("restrict: vertex map not injective");
    for (size_t e = 0; e < sub.edges.size(); ++e) {
        int ae = into.edge_of[e];
        if (ae < 0 || ae >= static_cast<int>(ambient.edges.size()))
            throw validation_error("restrict: edge image out of range");
        if (ambient.edges[ae].src != into.vertex_of[sub.edges[e].src] ||
            ambient.edges[ae].tgt != into.vertex_of[sub.edges[e].tgt])
            throw validation_error("restrict: inclusion does not preserve incidence");
    }
    // a morphism of diagrams with identities maps identities to identities
    if (sub.has_identities() && ambient.has_identities())
        for (size_t v = 0; v < sub.vertices.size(); ++v)
            if (into.edge_of[sub.identity_edge[v]] != ambient.identity_edge[into.vertex_of[v]])
                throw validation_error("restrict: inclusion does not preserve identities");

    DiagramRep sub_rep;
    sub_rep.field = ambient_rep.field;
    for (size_t v = 0; v < sub.vertices.size(); ++v)
        sub_rep.dims.push_back(ambient_rep.dims[into.vertex_of[v]]);
    for (size_t e = 0; e < sub.edges.size(); ++e)
        sub_rep.edge_maps.push_back(ambient_rep.edge_maps[into.edge_of[e]]);

    EndRestriction out{end_ring(ambient, ambient_rep), end_ring(sub, sub_rep),
                       Matrix(0, 0, ambient_rep.field)};
    out.matrix = Matrix(out.restricted.dimension(), out.ambient.dimension(), ambient_rep.field);
    for (int j = 0; j < out.ambient.dimension(); ++j) {
        std::vector<Matrix> projected;
        for (size_t v = 0; v < sub.vertices.size(); ++v)
            projected.push_back(out.ambient.basis[j][into.vertex_of[v]]);
        auto coords = out.restricted.coords_of(projected);
        if (!coords)
            throw internal_check_error("restrict: projection escapes the restricted ring");
        for (int i = 0; i < out.restricted.dimension(); ++i) out.matrix.set(i, j, (*coords)[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spectral pages

std::optional<int> SpectralPage::vertex_at(int p, int q) const {
    for (size_t v = 0; v < pq.size(); ++v)
        if (pq[v] == std::make_pair(p, q)) return static_cast<int>(v);
    return std::nullopt;
}

SpectralPage build_spectral_page(int r, std::pair<int, int> p_range,
                                 std::pair<int, int> q_range) {
    if (r < 1) throw validation_error("spectral page: r must be >= 1");
    SpectralPage page;
    page.r = r;
    // an empty range yields the empty diagram
    for (int p = p_range.first; p <= p_range.second; ++p)
        for (int q = q_range.first; q <= q_range.second; ++q) {
            page.pq.push_back({p, q});
            page.diagram.vertices.push_back("(" + std::to_string(p) + "," + std::to_string(q) +
                                            "," + std::to_string(r) + ")");
        }
    for (size_t v = 0; v < page.pq.size(); ++v) {
        auto [p, q] = page.pq[v];
        auto tgt = page.vertex_at(p + r, q - r + 1);
        if (!tgt) continue;
        page.diagram.edges.push_back({"d:" + page.diagram.vertices[v], static_cast<int>(v), *tgt});
    }
    page.diagram.attach_identities();
    page.diagram.validate();
    return page;
}

SpectralValidation validate_spectral_rep(const SpectralPage& page, const DiagramRep& rep) {
    rep.validate(page.diagram);
    SpectralValidation out;
    for (size_t e1 = 0; e1 < page.diagram.edges.size(); ++e1) {
        if (page.diagram.is_identity(static_cast<int>(e1))) continue;
        for (size_t e2 = 0; e2 < page.diagram.edges.size(); ++e2) {
            if (page.diagram.is_identity(static_cast<int>(e2))) continue;
            if (page.diagram.edges[e1].tgt != page.diagram.edges[e2].src) continue;
            if (!rep.edge_maps[e2].mul(rep.edge_maps[e1]).is_zero()) {
                out.valid = false;
                out.witnesses.push_back(page.pq[page.diagram.edges[e1].src]);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Persistence diagrams

namespace {

void require_common_chain(const std::vector<FilteredPair>& pairs) {
    if (pairs.empty()) throw validation_error("persistence diagram: no pairs");
    const FinitePoset& first = pairs[0].index();
    if (!first.is_chain() || !first.has_labels())
        throw validation_error("persistence diagram: index must be a labeled chain");
    for (const auto& fp : pairs) {
        const FinitePoset& idx = fp.index();
        if (idx.size() != first.size())
            throw validation_error("persistence diagram: indices differ");
        for (int s = 0; s < idx.size(); ++s)
            if (idx.label(s) != first.label(s))
                throw validation_error("persistence diagram: index labels differ");
    }
}

void validate_morphism_spec(const PairMorphismSpec& spec, const std::vector<FilteredPair>& pairs) {
    const FilteredPair& src = pairs[spec.source];
    const FilteredPair& tgt = pairs[spec.target];
    validate_pair_map(spec.map, src.pair(), tgt.pair());
    // commuting triangle over the index: vertex entries are preserved...
    for (const auto& v : src.pair().x.simplices(0))
        if (tgt.entry({spec.map(v[0])}) != src.entry(v))
            throw validation_error(
                "persistence diagram: morphism does not commute with the filtrations at vertex " +
                std::to_string(v[0]));
    // ...and presence is preserved simplex-wise (entry rules may differ)
    for (int k = 0; k <= src.pair().x.dim(); ++k)
        for (const auto& s : src.pair().x.simplices(k)) {
            auto img = spec.map.image(s);
            if (!img) continue;
            for (int at = 0; at < src.index().size(); ++at)
                if (src.present(s, at) && !tgt.present(img->first, at))
                    throw validation_error(
                        "persistence diagram: morphism breaks sublevel containment");
        }
}

void validate_triple_spec(const TripleSpec& spec, const std::vector<FilteredPair>& pairs) {
    const FilteredPair& xy = pairs[spec.pair_xy];
    const FilteredPair& yz = pairs[spec.pair_yz];
    if (!(yz.pair().x == xy.pair().y))
        throw validation_error("persistence diagram: triple does not share Y");
    for (int k = 0; k <= yz.pair().x.dim(); ++k)
        for (const auto& s : yz.pair().x.simplices(k))
            if (yz.entry_min(s) != xy.entry_min(s))
                throw validation_error(
                    "persistence diagram: triple filtrations disagree on shared Y");
}

}  // namespace

PersistenceDiagram build_persistence_diagram(std::vector<FilteredPair> pairs,
                                             std::vector<PairMorphismSpec> morphisms,
                                             std::vector<TripleSpec> triples,
                                             const std::vector<int>& degrees,
                                             const std::vector<Rat>& shifts) {
    require_common_chain(pairs);
    for (const auto& m : morphisms) {
        if (m.source < 0 || m.source >= static_cast<int>(pairs.size()) || m.target < 0 ||
            m.target >= static_cast<int>(pairs.size()))
            throw validation_error("persistence diagram: morphism pair index out of range");
        validate_morphism_spec(m, pairs);
    }
    for (const auto& t : triples) {
        if (t.pair_xy < 0 || t.pair_xy >= static_cast<int>(pairs.size()) || t.pair_yz < 0 ||
            t.pair_yz >= static_cast<int>(pairs.size()))
            throw validation_error("persistence diagram: triple pair index out of range");
        validate_triple_spec(t, pairs);
    }
    for (int d : degrees)
        if (d < 0) throw validation_error("persistence diagram: negative degree");
    for (const Rat& s : shifts)
        if (s < 0) throw validation_error("persistence diagram: negative shift");

    PersistenceDiagram pd;
    pd.pairs = std::move(pairs);
    pd.morphisms = std::move(morphisms);
    pd.triples = std::move(triples);

    std::map<std::tuple<int, int, Rat>, int> vertex_at;
    for (size_t p = 0; p < pd.pairs.size(); ++p)
        for (int d : degrees)
            for (const Rat& s : shifts) {
                vertex_at[{static_cast<int>(p), d, s}] =
                    static_cast<int>(pd.diagram.vertices.size());
                pd.vertex_key.push_back({static_cast<int>(p), d, s});
                pd.diagram.vertices.push_back("(p" + std::to_string(p) + ",i=" +
                                              std::to_string(d) + ",l=" + rat_to_string(s) + ")");
            }

    auto add_edge = [&](const std::string& id, int src, int tgt, PersistenceEdgeKind kind,
                        int ref) {
        pd.diagram.edges.push_back({id, src, tgt});
        pd.edge_info.push_back({kind, ref});
    };

    for (size_t m = 0; m < pd.morphisms.size(); ++m)
        for (int d : degrees)
            for (const Rat& s : shifts)
                add_edge("phi" + std::to_string(m) + ":i=" + std::to_string(d) +
                             ",l=" + rat_to_string(s),
                         vertex_at.at({pd.morphisms[m].source, d, s}),
                         vertex_at.at({pd.morphisms[m].target, d, s}),
                         PersistenceEdgeKind::Morphism, static_cast<int>(m));

    for (size_t t = 0; t < pd.triples.size(); ++t)
        for (int d : degrees) {
            if (d < 1 || !std::count(degrees.begin(), degrees.end(), d - 1)) continue;
            for (const Rat& s : shifts)
                add_edge("del" + std::to_string(t) + ":i=" + std::to_string(d) +
                             ",l=" + rat_to_string(s),
                         vertex_at.at({pd.triples[t].pair_xy, d, s}),
                         vertex_at.at({pd.triples[t].pair_yz, d - 1, s}),
                         PersistenceEdgeKind::Connecting, static_cast<int>(t));
        }

    for (size_t p = 0; p < pd.pairs.size(); ++p)
        for (int d : degrees)
            for (const Rat& s1 : shifts)
                for (const Rat& s2 : shifts) {
                    if (!(s1 < s2)) continue;
                    add_edge("p:" + rat_to_string(s1) + "->" + rat_to_string(s2) + ":p" +
                                 std::to_string(p) + ",i=" + std::to_string(d),
                             vertex_at.at({static_cast<int>(p), d, s1}),
                             vertex_at.at({static_cast<int>(p), d, s2}),
                             PersistenceEdgeKind::Shift, -1);
                }

    size_t plain_edges = pd.diagram.edges.size();
    pd.diagram.attach_identities();
    for (size_t e = plain_edges; e < pd.diagram.edges.size(); ++e)
        pd.edge_info.push_back({PersistenceEdgeKind::Identity, -1});
    pd.diagram.validate();
    return pd;
}

namespace {

// Range of H_degree(sub-pair at s) -> H_degree(sub-pair at s2): the
// ambient homology space at s2 plus image coordinates in its basis.
struct RangeSpace {
    std::shared_ptr<HomologySpace> ambient;
    Matrix basis;  // ambient rank x range rank
};

}  // namespace

DiagramRep evaluate_persistence_rep(const PersistenceDiagram& pd, int grid_element,
                                    FieldSpec field) {
    const FinitePoset& chain = pd.pairs[0].index();
    if (grid_element < 0 || grid_element >= chain.size())
        throw validation_error("evaluate: unknown grid element");
    Rat t_label = chain.label(grid_element)[0];

    // homology space cache per (pair, element, degree)
    std::map<std::tuple<int, int, int>, std::shared_ptr<HomologySpace>> spaces;
    std::map<std::tuple<int, int>, Pair> sub_pairs;
    auto space_at = [&](int pair, int at, int degree) {
        auto key = std::make_tuple(pair, at, degree);
        auto it = spaces.find(key);
        if (it != spaces.end()) return it->second;
        auto pk = std::make_tuple(pair, at);
        if (!sub_pairs.count(pk)) sub_pairs.emplace(pk, pd.pairs[pair].sub_pair(at));
        auto hs = std::make_shared<HomologySpace>(sub_pairs.at(pk), degree, field);
        spaces.emplace(key, hs);
        return hs;
    };

    auto range_of = [&](const PersistenceVertexKey& key) {
        int target = snap_down(chain, t_label + key.shift);
        auto hs = space_at(key.pair, grid_element, key.degree);
        auto ht = space_at(key.pair, target, key.degree);
        Matrix induced =
            induced_map(VertexMap{}, *hs, *ht, sub_pairs.at({key.pair, target}));
        return std::make_pair(target, RangeSpace{ht, induced.image_basis()});
    };

    std::vector<int> targets(pd.vertex_key.size());
    std::vector<RangeSpace> ranges;
    ranges.reserve(pd.vertex_key.size());
    DiagramRep rep;
    rep.field = field;
    for (size_t v = 0; v < pd.vertex_key.size(); ++v) {
        auto [target, range] = range_of(pd.vertex_key[v]);
        targets[v] = target;
        rep.dims.push_back(range.basis.cols());
        ranges.push_back(std::move(range));
    }

    // expresses (ambient matrix) restricted to the source range in the
    // target range basis; naturality guarantees containment
    auto restrict = [&](const Matrix& ambient_map, const RangeSpace& src, const RangeSpace& tgt) {
        Matrix pushed = ambient_map.mul(src.basis);
        auto sol = tgt.basis.solve_matrix(pushed);
        if (!sol)
            throw internal_check_error("evaluate: restricted map escapes the target range");
        return *sol;
    };

    for (size_t e = 0; e < pd.diagram.edges.size(); ++e) {
        const auto& info = pd.edge_info[e];
        int sv = pd.diagram.edges[e].src, tv = pd.diagram.edges[e].tgt;
        switch (info.kind) {
            case PersistenceEdgeKind::Identity:
                rep.edge_maps.push_back(Matrix::identity(rep.dims[sv], field));
                break;
            case PersistenceEdgeKind::Shift: {
                // include H(at u1) -> H(at u2), restricted to ranges
                const auto& key_src = pd.vertex_key[sv];
                auto hu1 = space_at(key_src.pair, targets[sv], key_src.degree);
                auto hu2 = space_at(key_src.pair, targets[tv], key_src.degree);
                Matrix incl = induced_map(VertexMap{}, *hu1, *hu2,
                                          sub_pairs.at({key_src.pair, targets[tv]}));
                rep.edge_maps.push_back(restrict(incl, ranges[sv], ranges[tv]));
                break;
            }
            case PersistenceEdgeKind::Morphism: {
                const auto& spec = pd.morphisms[info.ref];
                const auto& key_src = pd.vertex_key[sv];
                auto hs = space_at(spec.source, targets[sv], key_src.degree);
                auto ht = space_at(spec.target, targets[tv], key_src.degree);
                Matrix ind =
                    induced_map(spec.map, *hs, *ht, sub_pairs.at({spec.target, targets[tv]}));
                rep.edge_maps.push_back(restrict(ind, ranges[sv], ranges[tv]));
                break;
            }
            case PersistenceEdgeKind::Connecting: {
                const auto& spec = pd.triples[info.ref];
                const auto& key_src = pd.vertex_key[sv];
                const Pair& at_xy = sub_pairs.at({spec.pair_xy, targets[sv]});
                const Pair& at_yz = sub_pairs.at({spec.pair_yz, targets[tv]});
                Matrix conn = connecting_map(at_xy.x, at_xy.y, at_yz.y, key_src.degree, field);
                rep.edge_maps.push_back(restrict(conn, ranges[sv], ranges[tv]));
                break;
            }
        }
    }
    rep.validate(pd.diagram);
    return rep;
}

EndRing commutant_poset_rep(const Diagram& d, const std::vector<PersistenceModule>& modules,
                            const std::map<int, std::vector<Matrix>>& edge_transformations) {
    d.validate();
    if (modules.size() != d.vertices.size())
        throw validation_error("commutant: one module per vertex required");
    const FinitePoset& index = modules[0].index;
    for (const auto& m : modules) {
        if (m.index.size() != index.size() || m.field != modules[0].field)
            throw validation_error("commutant: modules must share index and field");
        m.validate();
    }
    for (size_t e = 0; e < d.edges.size(); ++e) {
        if (d.is_identity(static_cast<int>(e))) continue;
        auto it = edge_transformations.find(static_cast<int>(e));
        if (it == edge_transformations.end())
            throw validation_error("commutant: missing transformation for edge " + d.edges[e].id);
        ModuleMorphism check{modules[d.edges[e].src], modules[d.edges[e].tgt], it->second};
        check.validate();
    }

    Diagram aug;
    auto vid = [&](int v, int s) { return v * index.size() + s; };
    for (size_t v = 0; v < d.vertices.size(); ++v)
        for (int s = 0; s < index.size(); ++s)
            aug.vertices.push_back(d.vertices[v] + "@" + index.name(s));

    DiagramRep rep;
    rep.field = modules[0].field;
    rep.dims.resize(aug.vertices.size());
    for (size_t v = 0; v < d.vertices.size(); ++v)
        for (int s = 0; s < index.size(); ++s) rep.dims[vid(v, s)] = modules[v].dims[s];

    for (size_t e = 0; e < d.edges.size(); ++e) {
        if (d.is_identity(static_cast<int>(e))) continue;
        for (int s = 0; s < index.size(); ++s) {
            aug.edges.push_back({d.edges[e].id + "@" + index.name(s),
                                 vid(d.edges[e].src, s), vid(d.edges[e].tgt, s)});
            rep.edge_maps.push_back(edge_transformations.at(static_cast<int>(e))[s]);
        }
    }
    for (size_t v = 0; v < d.vertices.size(); ++v)
        for (auto [a, b] : index.covers()) {
            aug.edges.push_back({"st:" + d.vertices[v] + ":" + index.name(a) + "->" +
                                     index.name(b),
                                 vid(v, a), vid(v, b)});
            rep.edge_maps.push_back(modules[v].maps.at({a, b}));
        }
    size_t plain = aug.edges.size();
    aug.attach_identities();
    for (size_t e = plain; e < aug.edges.size(); ++e)
        rep.edge_maps.push_back(Matrix::identity(rep.dims[aug.edges[e].src], rep.field));
    return end_ring(aug, rep);
}

// ---------------------------------------------------------------------------
// Graded structure

int degree_mod2(const GradedVertex& v) { return ((v.degree % 2) + 2) % 2; }

GradedVertex graded_product(const GradedVertex& v, const GradedVertex& w) {
    GradedVertex out;
    out.degree = v.degree + w.degree;
    out.shift = v.shift + w.shift;
    out.symbol = "(" + v.symbol + ")x(" + w.symbol + ")";
    out.module = tensor_product(v.module, w.module);
    return out;
}

GradedVertex graded_unit(const FinitePoset& index, FieldSpec field) {
    GradedVertex out;
    out.degree = 0;
    out.shift = Rat(0);
    out.symbol = "1";
    out.module = unit_module(index, field);
    return out;
}

Matrix koszul_swap(int dim_a, int dim_b, int deg_a, int deg_b, FieldSpec field) {
    FieldOps ops(field);
    Matrix out(dim_a * dim_b, dim_a * dim_b, field);
    Rat sign = (deg_a * deg_b) % 2 == 0 ? Rat(1) : Rat(-1);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j)
            out.set(j * dim_a + i, i * dim_b + j, ops.normalize(sign));
    return out;
}

}  // namespace ppersist
