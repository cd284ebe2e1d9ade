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

#include "ppersist/simplicial.hpp"

#include <algorithm>
#include <set>

namespace ppersist {

const std::vector<Simplex> SimplicialComplex::kEmpty = {};

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
    std::set<Simplex> closed;
    // close under faces by dropping one vertex at a time
    std::vector<Simplex> stack = simplices;
    for (auto& s : stack) {
        if (s.empty()) throw not_simplicial_error(s, "complex: empty simplex");
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] >= s[i + 1])
                throw not_simplicial_error(s, "complex: vertices must be strictly increasing");
    }
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!closed.insert(s).second) continue;
        if (s.size() == 1) continue;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) face.push_back(s[j]);
            stack.push_back(std::move(face));
        }
    }
    SimplicialComplex c;
    for (const auto& s : closed) {
        int k = static_cast<int>(s.size()) - 1;
        if (k >= static_cast<int>(c.by_dim_.size())) c.by_dim_.resize(k + 1);
        c.by_dim_[k].push_back(s);
    }
    for (auto& level : c.by_dim_) std::sort(level.begin(), level.end());
    return c;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[k];
}

std::vector<int> SimplicialComplex::vertex_ids() const {
    std::vector<int> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_of(s).has_value();
}

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
    int k = static_cast<int>(s.size()) - 1;
    const auto& level = simplices(k);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it != level.end() && *it == s) return static_cast<int>(it - level.begin());
    return std::nullopt;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (int k = 0; k <= dim(); ++k)
        for (const auto& s : simplices(k))
            if (!other.contains(s)) return false;
    return true;
}

SimplicialComplex SimplicialComplex::skeleton(int j) const {
    if (j < 0) return {};
    SimplicialComplex c;
    c.by_dim_.assign(by_dim_.begin(),
                     by_dim_.begin() + std::min<size_t>(by_dim_.size(), j + 1));
    while (!c.by_dim_.empty() && c.by_dim_.back().empty()) c.by_dim_.pop_back();
    return c;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertices) const {
    std::set<int> keep(vertices.begin(), vertices.end());
    SimplicialComplex c;
    for (int k = 0; k <= dim(); ++k) {
        std::vector<Simplex> level;
        for (const auto& s : simplices(k)) {
            bool ok = true;
            for (int v : s)
                if (!keep.count(v)) {
                    ok = false;
                    break;
                }
            if (ok) level.push_back(s);
        }
        if (!level.empty()) {
            c.by_dim_.resize(k + 1);
            c.by_dim_[k] = std::move(level);
        }
    }
    return c;
}

Pair Pair::make(SimplicialComplex x, SimplicialComplex y) {
    for (int k = 0; k <= y.dim(); ++k)
        for (const auto& s : y.simplices(k))
            if (!x.contains(s))
                throw pair_violation_error(s, "pair: Y is not a subcomplex of X");
    return Pair{std::move(x), std::move(y)};
}

Matrix boundary_matrix(const SimplicialComplex& x, int k, FieldSpec field) {
    if (k < 1) throw validation_error("boundary_matrix: degree must be >= 1");
    const auto& rows = x.simplices(k - 1);
    const auto& cols = x.simplices(k);
    FieldOps ops(field);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), field);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const Simplex& s = cols[j];
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) face.push_back(s[t]);
            auto idx = x.index_of(face);
            if (!idx) throw internal_check_error("boundary_matrix: complex not closed");
            Rat sign = (drop % 2 == 0) ? Rat(1) : Rat(-1);
            m.set(*idx, j, ops.normalize(sign));
        }
    }
    m.compact();
    return m;
}

namespace {

// Quotient chain basis in degree k: simplices of X not in Y, lex order.
std::vector<Simplex> quotient_basis(const Pair& p, int k) {
    std::vector<Simplex> basis;
    for (const auto& s : p.x.simplices(k))
        if (!p.y.contains(s)) basis.push_back(s);
    return basis;
}

// Quotient boundary C_k(X)/C_k(Y) -> C_{k-1}(X)/C_{k-1}(Y), written in
// the given quotient bases.
Matrix quotient_boundary(FieldSpec field, const std::vector<Simplex>& rows,
                         const std::vector<Simplex>& cols) {
    FieldOps ops(field);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), field);
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        const Simplex& s = cols[j];
        for (size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != drop) face.push_back(s[t]);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            if (it == rows.end() || *it != face) continue;  // lands in Y, killed by quotient
            Rat sign = (drop % 2 == 0) ? Rat(1) : Rat(-1);
            m.set(static_cast<int>(it - rows.begin()), j, ops.normalize(sign));
        }
    }
    return m;
}

// Incremental Gaussian span for independence filtering.
class Span {
  public:
    explicit Span(FieldSpec fs) : ops_(fs) {}

    bool insert(std::vector<Rat> v) {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot] == 0) continue;
            Rat c = ops_.div(v[pivot], row[pivot]);
            for (size_t i = 0; i < v.size(); ++i)
                if (row[i] != 0) v[i] = ops_.sub(v[i], ops_.mul(c, row[i]));
        }
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                rows_.push_back({i, std::move(v)});
                return true;
            }
        return false;
    }

  private:
    FieldOps ops_;
    std::vector<std::pair<size_t, std::vector<Rat>>> rows_;
};

}  // namespace

HomologySpace::HomologySpace(const Pair& p, int degree, FieldSpec field)
    : degree_(degree), field_(field) {
    if (degree < 0) throw validation_error("homology: negative degree");
    chain_basis_ = quotient_basis(p, degree);
    std::vector<Simplex> below = degree > 0 ? quotient_basis(p, degree - 1) : std::vector<Simplex>{};
    std::vector<Simplex> above = quotient_basis(p, degree + 1);

    Matrix d_k = quotient_boundary(field, below, chain_basis_);
    Matrix d_k1 = quotient_boundary(field, chain_basis_, above);

    // kernel basis: pivot-free columns of the reduced boundary
    auto red = d_k.column_reduce();
    std::vector<int> kernel_cols;
    for (int j = 0; j < red.r.cols(); ++j)
        if (red.r.columns({j}).is_zero()) kernel_cols.push_back(j);
    Matrix cycles = red.v.columns(kernel_cols);

    boundary_image_ = d_k1.image_basis();

    // representatives: cycles that extend the boundary image to a basis
    Span span(field);
    for (int j = 0; j < boundary_image_.cols(); ++j) span.insert(boundary_image_.col_vec(j));
    std::vector<int> keep;
    for (int j = 0; j < cycles.cols(); ++j)
        if (span.insert(cycles.col_vec(j))) keep.push_back(j);
    reps_ = cycles.columns(keep);
    rank_ = reps_.cols();
    if (rank_ != cycles.cols() - boundary_image_.cols())
        throw internal_check_error("homology: boundary image not contained in cycle space");
    class_solver_.emplace(Matrix::hstack(boundary_image_, reps_));
}

std::vector<Rat> HomologySpace::class_coords(const std::vector<Rat>& chain) const {
    auto sol = class_solver_->solve(chain);
    if (!sol)
        throw internal_check_error("homology: chain is not a cycle modulo boundaries");
    return std::vector<Rat>(sol->begin() + boundary_image_.cols(), sol->end());
}

HomologyResult relative_homology(const Pair& p, int k, FieldSpec field) {
    HomologySpace h(p, k, field);
    return HomologyResult{k, h.rank(), h.representatives()};
}

HomologyResult homology(const SimplicialComplex& x, int k, FieldSpec field) {
    return relative_homology(Pair::absolute(x), k, field);
}

std::optional<std::pair<Simplex, int>> VertexMap::image(const Simplex& s) const {
    std::vector<int> img;
    img.reserve(s.size());
    for (int v : s) img.push_back((*this)(v));
    // sort, counting transpositions; duplicates mean a degenerate image
    int sign = 1;
    for (size_t i = 1; i < img.size(); ++i)
        for (size_t j = i; j > 0 && img[j - 1] >= img[j]; --j) {
            if (img[j - 1] == img[j]) return std::nullopt;
            std::swap(img[j - 1], img[j]);
            sign = -sign;
        }
    return std::make_pair(img, sign);
}

void validate_pair_map(const VertexMap& phi, const Pair& source, const Pair& target) {
    for (int k = 0; k <= source.x.dim(); ++k)
        for (const auto& s : source.x.simplices(k)) {
            auto img = phi.image(s);
            if (img && !target.x.contains(img->first))
                throw not_simplicial_error(s, "vertex map is not simplicial");
        }
    for (int k = 0; k <= source.y.dim(); ++k)
        for (const auto& s : source.y.simplices(k)) {
            auto img = phi.image(s);
            if (img && !target.y.contains(img->first))
                throw pair_violation_error(s, "vertex map does not respect the pair");
        }
}

Matrix induced_map(const VertexMap& phi, const HomologySpace& source,
                   const HomologySpace& target, const Pair& target_pair) {
    FieldOps ops(source.field());
    const auto& src_basis = source.chain_basis();
    const auto& tgt_basis = target.chain_basis();

    // chain map on the quotient bases
    Matrix chain_map(static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()),
                     source.field());
    for (int j = 0; j < static_cast<int>(src_basis.size()); ++j) {
        auto img = phi.image(src_basis[j]);
        if (!img) continue;  // degenerate image
        if (target_pair.y.contains(img->first)) continue;
        auto it = std::lower_bound(tgt_basis.begin(), tgt_basis.end(), img->first);
        if (it == tgt_basis.end() || *it != img->first)
            throw not_simplicial_error(src_basis[j], "induced_map: image simplex missing");
        chain_map.set(static_cast<int>(it - tgt_basis.begin()), j,
                      ops.normalize(Rat(img->second)));
    }

    Matrix out(target.rank(), source.rank(), source.field());
    for (int j = 0; j < source.rank(); ++j) {
        auto pushed = chain_map.apply(source.representatives().col_vec(j));
        auto coords = target.class_coords(pushed);
        for (int i = 0; i < target.rank(); ++i) out.set(i, j, coords[i]);
    }
    return out;
}

Matrix induced_map(const VertexMap& phi, const Pair& source, const Pair& target, int k,
                   FieldSpec field) {
    validate_pair_map(phi, source, target);
    HomologySpace hs(source, k, field);
    HomologySpace ht(target, k, field);
    return induced_map(phi, hs, ht, target);
}

Matrix connecting_map(const SimplicialComplex& x, const SimplicialComplex& y,
                      const SimplicialComplex& z, int k, FieldSpec field) {
    if (!z.is_subcomplex_of(y) || !y.is_subcomplex_of(x))
        throw validation_error("connecting_map: not a triple of subcomplexes");
    if (k < 1) throw validation_error("connecting_map: degree must be >= 1");

    Pair xy = Pair::make(x, y);
    Pair yz = Pair::make(y, z);
    HomologySpace hs(xy, k, field);
    HomologySpace ht(yz, k - 1, field);
    FieldOps ops(field);

    const auto& tgt_basis = ht.chain_basis();
    Matrix out(ht.rank(), hs.rank(), field);
    for (int j = 0; j < hs.rank(); ++j) {
        // lift the representative to C_k(X), take the boundary, keep the
        // part supported on Y \ Z; the X \ Y part must vanish
        std::vector<Rat> chain = hs.representatives().col_vec(j);
        std::vector<Rat> target_chain(tgt_basis.size(), Rat(0));
        for (size_t c = 0; c < hs.chain_basis().size(); ++c) {
            if (chain[c] == 0) continue;
            const Simplex& s = hs.chain_basis()[c];
            for (size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (size_t t = 0; t < s.size(); ++t)
                    if (t != drop) face.push_back(s[t]);
                Rat sign = (drop % 2 == 0) ? Rat(1) : Rat(-1);
                Rat coeff = ops.mul(chain[c], ops.normalize(sign));
                if (z.contains(face)) continue;
                auto it = std::lower_bound(tgt_basis.begin(), tgt_basis.end(), face);
                if (it != tgt_basis.end() && *it == face) {
                    size_t idx = it - tgt_basis.begin();
                    target_chain[idx] = ops.add(target_chain[idx], coeff);
                }
                // faces in X \ Y cancel within the boundary of a relative cycle
            }
        }
        auto coords = ht.class_coords(target_chain);
        for (int i = 0; i < ht.rank(); ++i) out.set(i, j, coords[i]);
    }
    return out;
}

void ChainComplex::validate() const {
    for (size_t k = 1; k < dims.size(); ++k)
        if (boundaries[k].rows() != dims[k - 1] || boundaries[k].cols() != dims[k])
            throw validation_error("chain complex: boundary shape mismatch");
    for (size_t k = 1; k + 1 < dims.size(); ++k)
        if (!boundaries[k].mul(boundaries[k + 1]).is_zero())
            throw internal_check_error("chain complex: dd != 0 at degree " + std::to_string(k + 1));
}

int ChainComplex::homology_rank(int k) const {
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    int rank_out = (k >= 1 && k < static_cast<int>(boundaries.size())) ? boundaries[k].rank() : 0;
    int rank_in =
        (k + 1 < static_cast<int>(boundaries.size())) ? boundaries[k + 1].rank() : 0;
    return dims[k] - rank_out - rank_in;
}

ChainComplex skeletal_chain_complex(const SimplicialComplex& x, FieldSpec field) {
    ChainComplex cc;
    int d = x.dim();
    if (d < 0) return cc;
    cc.dims.resize(d + 1);
    cc.boundaries.resize(d + 1, Matrix(0, 0, field));
    std::vector<HomologySpace> spaces;
    for (int j = 0; j <= d; ++j) {
        Pair skel = Pair::make(x.skeleton(j), x.skeleton(j - 1));
        spaces.emplace_back(skel, j, field);
        cc.dims[j] = spaces.back().rank();
        if (cc.dims[j] != x.count(j))
            throw internal_check_error("skeletal complex: H_j(X^(j), X^(j-1)) not free on j-cells");
    }
    for (int j = 1; j <= d; ++j)
        cc.boundaries[j] = connecting_map(x.skeleton(j), x.skeleton(j - 1), x.skeleton(j - 2),
                                          j, field);
    cc.validate();
    return cc;
}

}  // namespace ppersist
