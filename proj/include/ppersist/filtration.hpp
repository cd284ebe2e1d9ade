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

#ifndef PPERSIST_FILTRATION_HPP
#define PPERSIST_FILTRATION_HPP

#include <map>

#include "ppersist/poset.hpp"
#include "ppersist/simplicial.hpp"

namespace ppersist {

/// Points with exact rational coordinates in a common dimension, each
/// carrying a reliability weight in [0, 1]. Scale parameters are squared
/// distances throughout (rational points have rational squared distances).
struct WeightedPointCloud {
    std::vector<std::vector<Rat>> points;
    std::vector<Rat> probs;

    static WeightedPointCloud make(std::vector<std::vector<Rat>> points, std::vector<Rat> probs);

    int size() const { return static_cast<int>(points.size()); }
    int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
    Rat dist2(int i, int j) const;
    Rat max_dist2() const;
};

/// Map of weighted datasets: a point map plus a declared Lipschitz bound.
/// validate() checks the pushforward identity P'_y = sum over the fiber of
/// P_x and the bound on squared distances.
struct DatasetMorphism {
    std::vector<int> vertex_map;  // source point index -> target point index
    Rat lipschitz_k;              // positive declared bound

    void validate(const WeightedPointCloud& source, const WeightedPointCloud& target) const;
};

/// A pair filtered over a finite index poset. Each simplex of X stores the
/// antichain of minimal index elements where it is present (a single entry
/// element on chains and grids; graph families over general reachability
/// posets can need several). Presence is monotone and every sub-pair is a
/// valid pair; both are checked at construction.
class FilteredPair {
  public:
    static FilteredPair make(Pair pair, FinitePoset index,
                             const std::map<Simplex, std::vector<int>>& entry_min);

    const Pair& pair() const { return pair_; }
    const FinitePoset& index() const { return index_; }

    bool present(const Simplex& s, int at) const;
    Pair sub_pair(int at) const;

    /// The unique entry element of a simplex; throws when the entry
    /// antichain is not a singleton.
    int entry(const Simplex& s) const;
    const std::vector<int>& entry_min(const Simplex& s) const;

  private:
    Pair pair_;
    FinitePoset index_;
    std::vector<std::vector<std::vector<int>>> entry_min_;  // [dim][simplex index]
};

/// Full induced subcomplex on the vertices v with f(v) <= s.
SimplicialComplex sublevel_complex(const SimplicialComplex& x, const std::map<int, int>& f,
                                   const FinitePoset& index, int s);

/// Sublevel filtration of a vertex-valued function: a simplex enters once
/// all its vertices have entered.
FilteredPair sublevel_filtration(const Pair& p, const std::map<int, int>& f, FinitePoset index);

/// Vietoris-Rips complex at squared scale t2 and reliability cutoff
/// lambda: vertices of weight >= lambda, a simplex per tuple with all
/// pairwise squared distances <= t2, dimension capped at max_dim.
SimplicialComplex vr_complex(const WeightedPointCloud& cloud, const Rat& t2, const Rat& lambda,
                             int max_dim);

/// The two-parameter Vietoris-Rips filtration over the grid of critical
/// squared distances (all pairwise values plus 0) times the distinct
/// weights with reversed order. entry(s) = (max pairwise d2, min weight).
/// `marked` vertices, when given, span the relative subcomplex Y.
FilteredPair vr_bifiltration(const WeightedPointCloud& cloud, int max_dim,
                             const std::vector<int>& marked = {});

/// One-parameter Rips filtration in t2 at lambda = 0, over the chain of
/// critical values with one sentinel below and one above.
FilteredPair vr_filtration_1d(const WeightedPointCloud& cloud, int max_dim);

struct InducedVrMap {
    VertexMap map;    // on retained source vertices
    Rat t2_out;       // K^2 t^2
    Rat lambda_out;   // lambda (safe) or m*lambda (paper mode)
};

class vr_escape_error : public validation_error {
  public:
    vr_escape_error(int witness, const std::string& what)
        : validation_error(what), witness(witness) {}
    int witness;  // source point whose image drops below the target cutoff
};

/// Simplicial map VR(source, t2, lambda) -> VR(target, K^2 t2, lambda_out)
/// induced by a dataset morphism. The default keeps lambda_out = lambda,
/// which the pushforward identity guarantees; mlambda_mode uses m*lambda
/// with m the minimum fiber cardinality and reports escapes as errors.
InducedVrMap induced_vr_map(const DatasetMorphism& m, const WeightedPointCloud& source,
                            const WeightedPointCloud& target, const Rat& t2, const Rat& lambda,
                            bool mlambda_mode = false);

struct DirectedGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

struct GraphFamily {
    DirectedGraph g;
    DirectedGraph h;
    std::vector<int> label;  // V(g) -> V(h), total
};

class cyclic_base_error : public validation_error {
  public:
    cyclic_base_error(std::vector<int> cycle, const std::string& what)
        : validation_error(what), cycle(std::move(cycle)) {}
    std::vector<int> cycle;
};

/// Family of directed graphs over a base DAG: the index is the
/// reachability poset of h (u <= v iff a directed path runs u to v), and
/// the filtration at v is the 1-complex of the induced subgraph of g on
/// the vertices w with a path label(w) to v. Cycles in h (other than
/// self-loops) make reachability fail antisymmetry and raise
/// cyclic_base_error.
FilteredPair graph_sublevel_family(const GraphFamily& family);

/// Labels where the sub-pair changes, for chain-indexed filtrations:
/// exactly the distinct entry labels, sorted.
std::vector<Rat> critical_values(const FilteredPair& fp);

}  // namespace ppersist

#endif
