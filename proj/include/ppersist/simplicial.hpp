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

#ifndef PPERSIST_SIMPLICIAL_HPP
#define PPERSIST_SIMPLICIAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "ppersist/errors.hpp"
#include "ppersist/matrix.hpp"

namespace ppersist {

/// Strictly increasing vertex ids.
using Simplex = std::vector<int>;

class not_simplicial_error : public validation_error {
  public:
    not_simplicial_error(Simplex witness, const std::string& what)
        : validation_error(what), witness(std::move(witness)) {}
    Simplex witness;
};

class pair_violation_error : public validation_error {
  public:
    pair_violation_error(Simplex witness, const std::string& what)
        : validation_error(what), witness(std::move(witness)) {}
    Simplex witness;
};

/// Finite abstract simplicial complex: per-dimension lex-sorted simplex
/// lists, closed under faces. Immutable after construction.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Builds the face closure of the given simplices (maximal faces are
    /// enough). Vertices inside a simplex must be strictly increasing.
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return by_dim_.empty(); }
    const std::vector<Simplex>& simplices(int k) const;
    int count(int k) const { return static_cast<int>(simplices(k).size()); }
    std::vector<int> vertex_ids() const;

    bool contains(const Simplex& s) const;
    std::optional<int> index_of(const Simplex& s) const;  // position within its dimension

    bool is_subcomplex_of(const SimplicialComplex& other) const;

    SimplicialComplex skeleton(int j) const;
    SimplicialComplex induced(const std::vector<int>& vertices) const;

    bool operator==(const SimplicialComplex& o) const { return by_dim_ == o.by_dim_; }

  private:
    std::vector<std::vector<Simplex>> by_dim_;  // by_dim_[k]: k-simplices, lex sorted
    static const std::vector<Simplex> kEmpty;
};

/// Pair (X, Y) with Y a subcomplex of X; Y may be empty (absolute case).
struct Pair {
    SimplicialComplex x, y;
    static Pair make(SimplicialComplex x, SimplicialComplex y);
    static Pair absolute(SimplicialComplex x) { return make(std::move(x), {}); }
};

/// Boundary of the k-chains of x (k >= 1): entry (face, simplex) is
/// (-1)^i when the face omits the i-th vertex of the simplex.
Matrix boundary_matrix(const SimplicialComplex& x, int k, FieldSpec field);

struct HomologyResult {
    int degree = 0;
    int rank = 0;
    std::optional<Matrix> cycle_basis;  // columns: representative relative cycles
};

/// Relative homology data of a pair in one degree with enough structure to
/// compare classes: the quotient chain basis (k-simplices of X not in Y,
/// lex order), a deterministic cycle basis, the boundary image, and chosen
/// representatives. Representatives are the pivot-free columns of the
/// reduced quotient boundary that survive modulo the boundary image.
class HomologySpace {
  public:
    HomologySpace(const Pair& p, int degree, FieldSpec field);

    int degree() const { return degree_; }
    int rank() const { return rank_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Simplex>& chain_basis() const { return chain_basis_; }
    const Matrix& representatives() const { return reps_; }

    /// Coordinates of a quotient cycle's class in the representative
    /// basis. Throws internal_check_error if the chain is not a cycle
    /// modulo boundaries (callers only pass chain images of cycles).
    std::vector<Rat> class_coords(const std::vector<Rat>& chain) const;

  private:
    int degree_;
    int rank_;
    FieldSpec field_;
    std::vector<Simplex> chain_basis_;
    Matrix boundary_image_;  // image basis of quotient boundary from degree+1
    Matrix reps_;            // rank_ many representative cycles
    std::optional<LinearSolver> class_solver_;  // factorized [image | reps]
};

HomologyResult homology(const SimplicialComplex& x, int k, FieldSpec field);
HomologyResult relative_homology(const Pair& p, int k, FieldSpec field);

/// Simplicial vertex map; defaults to the identity on missing vertices.
class VertexMap {
  public:
    VertexMap() = default;
    explicit VertexMap(std::map<int, int> images) : images_(std::move(images)) {}
    int operator()(int v) const {
        auto it = images_.find(v);
        return it == images_.end() ? v : it->second;
    }
    /// Image simplex and orientation sign; nullopt when degenerate.
    std::optional<std::pair<Simplex, int>> image(const Simplex& s) const;

  private:
    std::map<int, int> images_;
};

/// Verifies phi is simplicial from source.x to target.x with
/// phi(source.y) inside target.y; throws not_simplicial_error /
/// pair_violation_error with the offending simplex otherwise.
void validate_pair_map(const VertexMap& phi, const Pair& source, const Pair& target);

/// Matrix of H_k(source) -> H_k(target) in the deterministic cycle bases.
/// Degenerate simplex images are sent to zero at chain level.
Matrix induced_map(const VertexMap& phi, const Pair& source, const Pair& target, int k,
                   FieldSpec field);
Matrix induced_map(const VertexMap& phi, const HomologySpace& source, const HomologySpace& target,
                   const Pair& target_pair);

/// Connecting homomorphism H_k(X, Y) -> H_{k-1}(Y, Z) of a triple
/// Z c Y c X, computed by lift / boundary / project at chain level.
Matrix connecting_map(const SimplicialComplex& x, const SimplicialComplex& y,
                      const SimplicialComplex& z, int k, FieldSpec field);

/// Chain complex: dims per degree and boundaries d_k: C_k -> C_{k-1}
/// (boundaries[k] for 1 <= k < dims.size()); d d = 0 is validated.
struct ChainComplex {
    std::vector<int> dims;
    std::vector<Matrix> boundaries;  // boundaries[0] unused placeholder
    void validate() const;
    int homology_rank(int k) const;
};

/// The complex H_j(X^(j), X^(j-1)) with connecting-map differentials; its
/// homology agrees with the simplicial homology of x degree by degree.
ChainComplex skeletal_chain_complex(const SimplicialComplex& x, FieldSpec field);

}  // namespace ppersist

#endif
