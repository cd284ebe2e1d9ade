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

#ifndef PPERSIST_PERSISTENCE_HPP
#define PPERSIST_PERSISTENCE_HPP

#include <map>

#include "ppersist/filtration.hpp"

namespace ppersist {

/// Functor from a finite index poset to finite-dimensional spaces:
/// dimensions per element, structure matrix per cover relation. Any two
/// cover paths between the same endpoints compose to the same matrix
/// (checked by validate() and again by every composite computation).
struct PersistenceModule {
    FinitePoset index;
    std::vector<int> dims;
    std::map<std::pair<int, int>, Matrix> maps;  // keyed by cover (a, b)
    FieldSpec field = FieldSpec::rationals();

    void validate() const;

    /// Composite structure map along any cover path a -> b (a <= b).
    /// Throws internal_check_error if two paths disagree.
    Matrix map_between(int a, int b) const;
};

/// Pointwise morphism of modules over a shared index; naturality on every
/// cover is checked by validate().
struct ModuleMorphism {
    PersistenceModule source;
    PersistenceModule target;
    std::vector<Matrix> components;  // per index element

    void validate() const;
    bool is_zero() const;
};

/// Half-open interval [birth, death); no death means the class never dies.
struct Bar {
    Rat birth;
    std::optional<Rat> death;
    bool operator==(const Bar& o) const { return birth == o.birth && death == o.death; }
};

struct Barcode {
    int degree = 0;
    std::vector<Bar> bars;  // sorted by (birth, death), unbounded bars last per birth
};

void sort_bars(Barcode& b);

struct RankInvariant {
    std::map<std::pair<int, int>, int> ranks;  // every comparable pair (a <= b)
};

/// Persistent homology module of a filtered pair in one degree: homology
/// of every sub-pair, inclusion-induced maps on covers. Grid points are
/// processed independently (and concurrently when threads are available);
/// the result is identical regardless.
PersistenceModule module_from_filtration(const FilteredPair& fp, int degree, FieldSpec field);

/// Rank and cycle basis of the image of H(sub-pair at s) -> H(sub-pair at
/// s') for s <= s'; throws on incomparable indices.
HomologyResult persistent_range(const FilteredPair& fp, int degree, int s, int s2,
                                FieldSpec field);

RankInvariant rank_invariant(const PersistenceModule& m);

/// Interval decomposition of a module over a labeled chain, extracted
/// from the rank invariant by inclusion-exclusion. Classes alive at the
/// last index become unbounded bars when unbounded_above; otherwise they
/// close at the final label (empty bars dropped).
Barcode barcode_1d(const PersistenceModule& m, bool unbounded_above, int degree = 0);

/// Same barcode along the other route: one global column reduction of the
/// entry-ordered quotient boundary matrix of the filtration, lexicographic
/// tie-breaking. Crosschecks barcode_1d in the test suite.
Barcode barcode_from_filtration(const FilteredPair& fp, int degree, FieldSpec field,
                                bool unbounded_above = true);

struct FiniteTypeInfo {
    bool finite_type = false;
    std::vector<Rat> criticals;  // labels where the isomorphism type changes
};

/// Over a finite labeled chain every pointwise-finite module splits into
/// intervals, so finite_type is always true; the content is the critical
/// label list. The label of position j > 0 is critical when the map from
/// the previous position is not an isomorphism (values outside the window
/// are read as constant extensions).
FiniteTypeInfo is_finite_type_and_tame(const PersistenceModule& m);

/// Integer-indexed module sampling the open intervals between criticals:
/// position n holds the value on (c_n, c_{n+1}), with one sample below the
/// window (label -1) and the constant tail above. extra_criticals refines
/// the sampling grid (used when discretizing morphisms over a union).
PersistenceModule discretize_Z(const PersistenceModule& m,
                               const std::vector<Rat>& extra_criticals = {});

/// Discretizes source, target, and components over the union of their
/// critical sets.
ModuleMorphism discretize_morphism(const ModuleMorphism& alpha);

/// Rebuilds the real-indexed module from its discretization and barcode:
/// the barcode endpoints recover the critical labels, the integer module
/// the spaces and maps. Throws when the two disagree.
PersistenceModule reconstruct_R(const PersistenceModule& fz, const Barcode& barcode);

/// Pointwise tensor product over a shared index: dims multiply, cover
/// maps are Kronecker products.
PersistenceModule tensor_product(const PersistenceModule& m, const PersistenceModule& n);

/// Rank-one constant module with identity maps (the tensor unit).
PersistenceModule unit_module(const FinitePoset& index, FieldSpec field);

/// Interval module on a labeled chain: rank one on [birth, death), zero
/// elsewhere, identity maps inside the interval.
PersistenceModule interval_module(const FinitePoset& chain, const Rat& birth,
                                  const std::optional<Rat>& death, FieldSpec field);

PersistenceModule direct_sum(const PersistenceModule& a, const PersistenceModule& b);

/// Largest chain position whose label is <= value (clamped to the ends).
int snap_down(const FinitePoset& chain, const Rat& value);

/// The range module at shift lambda over a labeled chain: position t
/// carries the image of the composite map t -> (t + lambda snapped down
/// to the grid), with the structure maps induced on images. Shift zero
/// returns a module isomorphic to the input.
PersistenceModule shifted_module(const PersistenceModule& m, const Rat& lambda);

/// True when the persistent ranges at shift `lambda` vanish in every
/// degree other than `degree`, at every grid point. The shift is a label
/// offset; targets are snapped down to the grid.
bool is_good_vertex(const FilteredPair& fp, int degree, const Rat& lambda, FieldSpec field);

struct BarcodeComparison {
    bool equal = false;
    std::optional<Rat> bottleneck;  // nullopt: infinite distance
};

/// Multiset equality plus the exact bottleneck distance (L-infinity
/// matching with diagonal padding, solved over the finite candidate set).
BarcodeComparison compare_barcodes(const Barcode& a, const Barcode& b);

/// Complete isomorphism test for chain modules: pointwise dimensions and
/// the full rank invariant coincide (labels compared 1:1 in chain order).
bool modules_isomorphic_1d(const PersistenceModule& a, const PersistenceModule& b);

}  // namespace ppersist

#endif
