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

#ifndef PPERSIST_JSON_IO_HPP
#define PPERSIST_JSON_IO_HPP

#include <istream>
#include <string>

#include <json.hpp>

#include "ppersist/diagram.hpp"
#include "ppersist/semigroup.hpp"

namespace ppersist::io {

using nlohmann::json;

// --- input formats (normative) ---------------------------------------------

/// Point cloud CSV: header x1,...,xd,p then one row per point; rationals
/// as decimals or a/b literals.
WeightedPointCloud read_point_cloud_csv(std::istream& in);

/// Multiplication table CSV: first line n, then n rows of n 0-based ids.
FiniteSemigroup read_semigroup_csv(std::istream& in);

/// {"g": {"vertices": n, "edges": [[u,v],...]},
///  "h": {"vertices": m, "edges": [[u,v],...]},
///  "label": {"0": 0, ...}}
GraphFamily read_graph_family(const json& j);

/// {"simplices": [[0,1],...], "f": {"0": "1/2", ...}, "y": [[0],...]?}
struct SublevelInput {
    Pair pair;
    std::map<int, Rat> values;
};
SublevelInput read_sublevel_complex(const json& j);

/// {"field": "q", "vertices": [{"id": ..., "dim": n}, ...],
///  "edges": [{"id": ..., "source": ..., "target": ...,
///             "matrix": ["a/b", ... row-major], "identity": bool?}, ...]}
/// Vertices without an identity edge get one attached (identity matrix).
struct DiagramInput {
    Diagram diagram;
    DiagramRep rep;
};
DiagramInput read_diagram_rep(const json& j);

/// {"r": 1, "field": "q", "vertices": [{"p":0,"q":0,"dim":1}, ...],
///  "maps": [{"p":0,"q":0,"matrix":[...]}]}: matrix rows x cols are the
/// target/source dims of the arrow out of (p,q); missing maps are zero.
struct SpectralInput {
    SpectralPage page;
    DiagramRep rep;
};
SpectralInput read_spectral_page(const json& j);

/// {"target": "cloud.csv relative or absolute path", "map": [j0, j1, ...],
///  "lipschitz_k": "a/b"} (used by bifiltration-rank --morphism)
struct MorphismInput {
    std::string target_path;
    DatasetMorphism morphism;
};
MorphismInput read_morphism(const json& j);

// --- output formats (normative) ---------------------------------------------

/// {degree, field, bars: [{birth, death ("inf" when unbounded),
///  birth_sqrt_approx when sqrt_scale}]}; bars sorted by (birth, death).
json barcode_json(const Barcode& bc, FieldSpec field, bool sqrt_scale);

json rank_invariant_json(const PersistenceModule& m, const RankInvariant& ri, int degree);

json poset_json(const FinitePoset& p);

json end_ring_json(const Diagram& d, const EndRing& ring);

json spectral_validation_json(const SpectralValidation& v);

json error_json(const std::string& kind, const std::string& message);

/// Horizontal bar plot; x-axis in sqrt(t2) decimals when sqrt_scale,
/// exact rationals in data attributes. Unbounded bars run to the frame.
std::string barcode_svg(const Barcode& bc, bool sqrt_scale);

}  // namespace ppersist::io

#endif
