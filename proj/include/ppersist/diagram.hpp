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

#ifndef PPERSIST_DIAGRAM_HPP
#define PPERSIST_DIAGRAM_HPP

#include "ppersist/persistence.hpp"

namespace ppersist {

/// Directed multigraph with one distinguished identity loop per vertex.
struct Diagram {
    struct Edge {
        std::string id;
        int src = 0;
        int tgt = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<int> identity_edge;  // edge index per vertex, -1 when absent

    void validate() const;
    bool has_identities() const;
    /// Appends one identity loop per vertex that lacks one.
    void attach_identities();
    bool is_identity(int edge) const;
};

/// Linear representation: a dimension per vertex, a matrix per edge,
/// identity edges carrying identity matrices.
struct DiagramRep {
    std::vector<int> dims;
    std::vector<Matrix> edge_maps;
    FieldSpec field = FieldSpec::rationals();

    void validate(const Diagram& d) const;
};

/// Basis of the commutant: tuples of blocks, one square block per vertex,
/// commuting with every edge map. Closed under blockwise composition and
/// containing the identity tuple (both re-verified after solving).
struct EndRing {
    std::vector<int> dims;  // block sizes per vertex
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::vector<Matrix>> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
    std::vector<Rat> flatten(const std::vector<Matrix>& tuple) const;
    std::vector<Matrix> unflatten(const std::vector<Rat>& coords) const;
    std::vector<Matrix> identity_tuple() const;
    std::vector<Matrix> compose(const std::vector<Matrix>& a, const std::vector<Matrix>& b) const;
    /// Coordinates of a tuple in the basis, or nullopt when outside the span.
    std::optional<std::vector<Rat>> coords_of(const std::vector<Matrix>& tuple) const;
};

/// Solves the commutation constraints phi_tgt T(e) = T(e) phi_src as one
/// homogeneous system over vectorized blocks; the nullspace basis is the
/// ring basis (deterministic via the fixed variable ordering).
EndRing end_ring(const Diagram& d, const DiagramRep& rep);

/// Post-solve verification: constraints, identity membership, closure
/// under composition. Throws internal_check_error on any failure.
void verify_end_ring(const Diagram& d, const DiagramRep& rep, const EndRing& ring);

/// Inclusion of diagrams: vertex/edge index maps from the sub-diagram
/// into the ambient one (injective, orientation- and identity-compatible).
struct SubdiagramMap {
    std::vector<int> vertex_of;
    std::vector<int> edge_of;
};

struct EndRestriction {
    EndRing ambient;      // End(T_2)
    EndRing restricted;   // End(T_1)
    Matrix matrix;        // columns: images of ambient basis in restricted coords
};

/// The block projection End(T_2) -> End(T_1) along a subdiagram
/// inclusion, expressed in the computed bases.
EndRestriction restrict_end_ring(const Diagram& sub, const SubdiagramMap& into,
                                 const Diagram& ambient, const DiagramRep& ambient_rep);

// ---------------------------------------------------------------------------
// Spectral pages

/// Page r of a spectral sequence over finite (p, q) ranges: one vertex per
/// (p, q), one arrow (p,q) -> (p+r, q-r+1) whenever the target is in
/// range, identities attached.
struct SpectralPage {
    int r = 1;
    Diagram diagram;
    std::vector<std::pair<int, int>> pq;  // per vertex
    std::optional<int> vertex_at(int p, int q) const;
};

SpectralPage build_spectral_page(int r, std::pair<int, int> p_range, std::pair<int, int> q_range);

struct SpectralValidation {
    bool valid = true;
    std::vector<std::pair<int, int>> witnesses;  // (p,q) where d after d is nonzero
};

/// Checks that consecutive arrows compose to zero.
SpectralValidation validate_spectral_rep(const SpectralPage& page, const DiagramRep& rep);

// ---------------------------------------------------------------------------
// The persistence diagram of filtered pairs

/// Vertex payload: which filtered pair, homology degree, shift.
struct PersistenceVertexKey {
    int pair = 0;
    int degree = 0;
    Rat shift;
};

/// Filtration-compatible map between two filtered pairs over the same
/// index: simplicial, pair-preserving, vertex entries equal, presence
/// preserved simplex-wise.
struct PairMorphismSpec {
    int source = 0;
    int target = 0;
    VertexMap map;
};

/// A stair Z c Y c X given by the pairs (X, Y) and (Y, Z) at the stated
/// positions in the pair list; the shared Y must match with equal entries.
struct TripleSpec {
    int pair_xy = 0;
    int pair_yz = 0;
};

enum class PersistenceEdgeKind { Identity, Morphism, Connecting, Shift };

struct PersistenceDiagram {
    Diagram diagram;
    std::vector<FilteredPair> pairs;
    std::vector<PairMorphismSpec> morphisms;
    std::vector<TripleSpec> triples;
    std::vector<PersistenceVertexKey> vertex_key;
    struct EdgeInfo {
        PersistenceEdgeKind kind = PersistenceEdgeKind::Identity;
        int ref = -1;  // morphism / triple index; shift edges store none
    };
    std::vector<EdgeInfo> edge_info;
};

/// Vertices (pair, degree, shift) for every combination; functoriality
/// edges per morphism, connecting edges per triple (degree drops by one),
/// shift edges per ordered pair of shifts, identities throughout. All
/// pairs must share one labeled chain index.
PersistenceDiagram build_persistence_diagram(std::vector<FilteredPair> pairs,
                                             std::vector<PairMorphismSpec> morphisms,
                                             std::vector<TripleSpec> triples,
                                             const std::vector<int>& degrees,
                                             const std::vector<Rat>& shifts);

/// The range representation at one grid element t: a vertex (pair, i,
/// shift) carries the image of H_i at (t -> t + shift) (snapped down to
/// the grid); morphism edges act by the induced maps restricted to
/// ranges, connecting edges by the connecting map restricted to ranges,
/// shift edges by inclusion of ranges.
DiagramRep evaluate_persistence_rep(const PersistenceDiagram& pd, int grid_element,
                                    FieldSpec field);

/// Commutant of a representation by persistence modules over a common
/// finite poset: flattens to end_ring of the augmented diagram with one
/// vertex per (vertex, poset element), edges for both diagram edges
/// (natural transformations, validated) and poset covers.
EndRing commutant_poset_rep(const Diagram& d, const std::vector<PersistenceModule>& modules,
                            const std::map<int, std::vector<Matrix>>& edge_transformations);

// ---------------------------------------------------------------------------
// Graded structure (combinatorial level; modules via the tensor product)

struct GradedVertex {
    int degree = 0;
    Rat shift;
    std::string symbol;
    PersistenceModule module;
};

int degree_mod2(const GradedVertex& v);

/// Product vertex: degrees and shifts add, modules tensor.
GradedVertex graded_product(const GradedVertex& v, const GradedVertex& w);

/// Unit vertex: degree 0, shift 0, the rank-one constant module.
GradedVertex graded_unit(const FinitePoset& index, FieldSpec field);

/// Graded swap on a tensor factor pair: the commutation matrix scaled by
/// (-1)^(deg_a deg_b), mapping a (x) b to b (x) a.
Matrix koszul_swap(int dim_a, int dim_b, int deg_a, int deg_b, FieldSpec field);

}  // namespace ppersist

#endif
