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

#include "ppersist/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace ppersist::io {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Rat parse_rat_or_throw(const std::string& text, const std::string& context) {
    auto r = parse_rational(text);
    if (!r) throw validation_error(context + ": cannot parse rational '" + text + "'");
    return *r;
}

FieldSpec parse_field_or_throw(const json& j) {
    std::string name = j.value("field", "q");
    auto fs = FieldSpec::parse(name);
    if (!fs) throw validation_error("unknown field '" + name + "'");
    return *fs;
}

}  // namespace

WeightedPointCloud read_point_cloud_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw validation_error("point cloud: empty file");
    auto header = split_csv_line(line);
    if (header.size() < 2 || header.back() != "p")
        throw validation_error("point cloud: header must be x1,...,xd,p");
    size_t d = header.size() - 1;
    for (size_t i = 0; i < d; ++i)
        if (header[i] != "x" + std::to_string(i + 1))
            throw validation_error("point cloud: header must be x1,...,xd,p");

    std::vector<std::vector<Rat>> points;
    std::vector<Rat> probs;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (cells.size() != d + 1)
            throw validation_error("point cloud: row with wrong column count");
        std::vector<Rat> pt;
        for (size_t i = 0; i < d; ++i) pt.push_back(parse_rat_or_throw(cells[i], "point cloud"));
        points.push_back(std::move(pt));
        probs.push_back(parse_rat_or_throw(cells[d], "point cloud"));
    }
    return WeightedPointCloud::make(std::move(points), std::move(probs));
}

FiniteSemigroup read_semigroup_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw validation_error("semigroup: empty file");
    int n = 0;
    try {
        n = std::stoi(line);
    } catch (const std::exception&) {
        throw validation_error("semigroup: first line must be the element count");
    }
    if (n < 1) throw validation_error("semigroup: element count must be >= 1");
    std::vector<std::vector<int>> table;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (static_cast<int>(cells.size()) != n)
            throw validation_error("semigroup: row with wrong column count");
        std::vector<int> row;
        for (const auto& c : cells) {
            try {
                row.push_back(std::stoi(c));
            } catch (const std::exception&) {
                throw validation_error("semigroup: non-integer table entry '" + c + "'");
            }
        }
        table.push_back(std::move(row));
    }
    if (static_cast<int>(table.size()) != n)
        throw validation_error("semigroup: expected " + std::to_string(n) + " rows");
    return FiniteSemigroup::from_table(table);
}

namespace {

DirectedGraph read_graph(const json& j, const std::string& name) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw validation_error("graph family: " + name + " needs vertices and edges");
    DirectedGraph g;
    g.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw validation_error("graph family: edges are [u, v] pairs");
        g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return g;
}

}  // namespace

GraphFamily read_graph_family(const json& j) {
    GraphFamily fam;
    fam.g = read_graph(j.at("g"), "g");
    fam.h = read_graph(j.at("h"), "h");
    fam.label.assign(fam.g.vertices, -1);
    for (const auto& [key, value] : j.at("label").items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= fam.g.vertices)
            throw validation_error("graph family: label key out of range");
        fam.label[v] = value.get<int>();
    }
    for (int v : fam.label)
        if (v < 0) throw validation_error("graph family: label not total on V(g)");
    return fam;
}

SublevelInput read_sublevel_complex(const json& j) {
    std::vector<Simplex> simplices;
    for (const auto& s : j.at("simplices")) {
        Simplex sx;
        for (const auto& v : s) sx.push_back(v.get<int>());
        simplices.push_back(std::move(sx));
    }
    SimplicialComplex x = SimplicialComplex::from_simplices(simplices);
    SimplicialComplex y;
    if (j.contains("y")) {
        std::vector<Simplex> ys;
        for (const auto& s : j.at("y")) {
            Simplex sx;
            for (const auto& v : s) sx.push_back(v.get<int>());
            ys.push_back(std::move(sx));
        }
        if (!ys.empty()) y = SimplicialComplex::from_simplices(ys);
    }
    SublevelInput input{Pair::make(std::move(x), std::move(y)), {}};
    for (const auto& [key, value] : j.at("f").items())
        input.values[std::stoi(key)] =
            parse_rat_or_throw(value.get<std::string>(), "sublevel f");
    return input;
}

namespace {

Matrix read_matrix(const json& entries, int rows, int cols, FieldSpec fs,
                   const std::string& context) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw validation_error(context + ": matrix needs " + std::to_string(rows * cols) +
                               " row-major entries");
    Matrix m(rows, cols, fs);
    int k = 0;
    for (const auto& e : entries) {
        Rat v = parse_rat_or_throw(e.get<std::string>(), context);
        m.set(k / cols, k % cols, v);
        ++k;
    }
    return m;
}

}  // namespace

DiagramInput read_diagram_rep(const json& j) {
    DiagramInput input;
    input.rep.field = parse_field_or_throw(j);
    std::map<std::string, int> vertex_index;
    for (const auto& v : j.at("vertices")) {
        vertex_index[v.at("id").get<std::string>()] =
            static_cast<int>(input.diagram.vertices.size());
        input.diagram.vertices.push_back(v.at("id").get<std::string>());
        input.rep.dims.push_back(v.at("dim").get<int>());
    }
    input.diagram.identity_edge.assign(input.diagram.vertices.size(), -1);
    for (const auto& e : j.at("edges")) {
        std::string sid = e.at("source").get<std::string>();
        std::string tid = e.at("target").get<std::string>();
        if (!vertex_index.count(sid) || !vertex_index.count(tid))
            throw validation_error("diagram: edge references unknown vertex");
        int src = vertex_index[sid], tgt = vertex_index[tid];
        int idx = static_cast<int>(input.diagram.edges.size());
        input.diagram.edges.push_back({e.at("id").get<std::string>(), src, tgt});
        if (e.value("identity", false)) {
            if (src != tgt) throw validation_error("diagram: identity edge must be a loop");
            input.diagram.identity_edge[src] = idx;
            input.rep.edge_maps.push_back(Matrix::identity(input.rep.dims[src], input.rep.field));
            if (e.contains("matrix") &&
                input.rep.edge_maps.back() !=
                    read_matrix(e.at("matrix"), input.rep.dims[tgt], input.rep.dims[src],
                                input.rep.field, "diagram edge " + input.diagram.edges[idx].id))
                throw validation_error("diagram: identity edge carries a non-identity matrix");
        } else {
            input.rep.edge_maps.push_back(
                read_matrix(e.at("matrix"), input.rep.dims[tgt], input.rep.dims[src],
                            input.rep.field, "diagram edge " + input.diagram.edges[idx].id));
        }
    }
    for (size_t v = 0; v < input.diagram.vertices.size(); ++v) {
        if (input.diagram.identity_edge[v] >= 0) continue;
        input.diagram.identity_edge[v] = static_cast<int>(input.diagram.edges.size());
        input.diagram.edges.push_back({"id:" + input.diagram.vertices[v], static_cast<int>(v),
                                       static_cast<int>(v)});
        input.rep.edge_maps.push_back(
            Matrix::identity(input.rep.dims[v], input.rep.field));
    }
    input.diagram.validate();
    input.rep.validate(input.diagram);
    return input;
}

SpectralInput read_spectral_page(const json& j) {
    int r = j.value("r", 1);
    FieldSpec fs = parse_field_or_throw(j);
    std::vector<std::tuple<int, int, int>> dims;  // p, q, dim
    int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
    bool first = true;
    for (const auto& v : j.at("vertices")) {
        int p = v.at("p").get<int>(), q = v.at("q").get<int>();
        dims.push_back({p, q, v.at("dim").get<int>()});
        if (first || p < pmin) pmin = p;
        if (first || p > pmax) pmax = p;
        if (first || q < qmin) qmin = q;
        if (first || q > qmax) qmax = q;
        first = false;
    }
    if (first) throw validation_error("spectral page: no vertices");
    SpectralInput input{build_spectral_page(r, {pmin, pmax}, {qmin, qmax}), {}};
    input.rep.field = fs;
    input.rep.dims.assign(input.page.diagram.vertices.size(), 0);
    for (auto [p, q, dim] : dims) {
        auto v = input.page.vertex_at(p, q);
        if (!v) throw internal_check_error("spectral page: vertex vanished");
        input.rep.dims[*v] = dim;
    }
    input.rep.edge_maps.resize(input.page.diagram.edges.size(), Matrix(0, 0, fs));
    for (size_t e = 0; e < input.page.diagram.edges.size(); ++e) {
        const auto& edge = input.page.diagram.edges[e];
        input.rep.edge_maps[e] = input.page.diagram.is_identity(static_cast<int>(e))
                                     ? Matrix::identity(input.rep.dims[edge.src], fs)
                                     : Matrix::zero(input.rep.dims[edge.tgt],
                                                    input.rep.dims[edge.src], fs);
    }
    if (j.contains("maps"))
        for (const auto& m : j.at("maps")) {
            int p = m.at("p").get<int>(), q = m.at("q").get<int>();
            auto src = input.page.vertex_at(p, q);
            if (!src) throw validation_error("spectral page: map at unknown (p,q)");
            int found = -1;
            for (size_t e = 0; e < input.page.diagram.edges.size(); ++e)
                if (!input.page.diagram.is_identity(static_cast<int>(e)) &&
                    input.page.diagram.edges[e].src == *src)
                    found = static_cast<int>(e);
            if (found < 0)
                throw validation_error("spectral page: no arrow out of that (p,q) in range");
            const auto& edge = input.page.diagram.edges[found];
            input.rep.edge_maps[found] =
                read_matrix(m.at("matrix"), input.rep.dims[edge.tgt], input.rep.dims[edge.src],
                            fs, "spectral map");
        }
    input.rep.validate(input.page.diagram);
    return input;
}

MorphismInput read_morphism(const json& j) {
    MorphismInput input;
    input.target_path = j.at("target").get<std::string>();
    for (const auto& v : j.at("map")) input.morphism.vertex_map.push_back(v.get<int>());
    input.morphism.lipschitz_k =
        parse_rat_or_throw(j.at("lipschitz_k").get<std::string>(), "morphism");
    return input;
}

// ---------------------------------------------------------------------------

json barcode_json(const Barcode& bc, FieldSpec field, bool sqrt_scale) {
    json bars = json::array();
    for (const Bar& b : bc.bars) {
        json bar;
        bar["birth"] = rat_to_string(b.birth);
        bar["death"] = b.death ? rat_to_string(*b.death) : "inf";
        if (sqrt_scale) bar["birth_sqrt_approx"] = sqrt_decimal(b.birth);
        bars.push_back(bar);
    }
    return json{{"degree", bc.degree}, {"field", field.to_string()}, {"bars", bars}};
}

json rank_invariant_json(const PersistenceModule& m, const RankInvariant& ri, int degree) {
    json grid = json::array();
    for (int s = 0; s < m.index.size(); ++s) {
        json labels = json::array();
        for (const Rat& l : m.index.label(s)) labels.push_back(rat_to_string(l));
        grid.push_back(json{
            {"index", s}, {"name", m.index.name(s)}, {"label", labels}, {"dim", m.dims[s]}});
    }
    json ranks = json::array();
    for (const auto& [pair, rank] : ri.ranks)
        ranks.push_back(json{{"from", pair.first}, {"to", pair.second}, {"rank", rank}});
    return json{{"degree", degree},
                {"field", m.field.to_string()},
                {"grid", grid},
                {"ranks", ranks}};
}

json poset_json(const FinitePoset& p) {
    json elements = json::array();
    for (int a = 0; a < p.size(); ++a) elements.push_back(p.name(a));
    json leq = json::array();
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b)) leq.push_back(json::array({a, b}));
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back(json::array({a, b}));
    return json{{"elements", elements}, {"leq", leq}, {"covers", covers}};
}

json end_ring_json(const Diagram& d, const EndRing& ring) {
    json basis = json::array();
    for (const auto& tuple : ring.basis) {
        json blocks = json::object();
        for (size_t v = 0; v < d.vertices.size(); ++v) {
            json entries = json::array();
            for (int i = 0; i < tuple[v].rows(); ++i)
                for (int j = 0; j < tuple[v].cols(); ++j)
                    entries.push_back(rat_to_string(tuple[v].at(i, j)));
            blocks[d.vertices[v]] = entries;
        }
        basis.push_back(blocks);
    }
    json dims = json::object();
    for (size_t v = 0; v < d.vertices.size(); ++v) dims[d.vertices[v]] = ring.dims[v];
    return json{{"field", ring.field.to_string()},
                {"dimension", ring.dimension()},
                {"dims", dims},
                {"basis", basis}};
}

json spectral_validation_json(const SpectralValidation& v) {
    json witnesses = json::array();
    for (auto [p, q] : v.witnesses) witnesses.push_back(json::array({p, q}));
    return json{{"valid", v.valid}, {"witnesses", witnesses}};
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

std::string barcode_svg(const Barcode& bc, bool sqrt_scale) {
    // fixed frame; positions computed in exact arithmetic, then floored
    const int width = 640, bar_height = 14, gap = 6, margin = 48;
    int height = margin * 2 + std::max<int>(1, static_cast<int>(bc.bars.size())) *
                                  (bar_height + gap);

    auto coord = [&](const Rat& value) {
        return sqrt_scale ? Rat(parse_rational(sqrt_decimal(value, 6)).value()) : value;
    };
    Rat lo(0), hi(1);
    bool first = true;
    for (const Bar& b : bc.bars) {
        Rat cb = coord(b.birth);
        if (first || cb < lo) lo = cb;
        Rat cd = b.death ? coord(*b.death) : cb;
        if (first || cd > hi) hi = cd;
        if (first) {
            hi = std::max(cd, Rat(cb + 1));
            first = false;
        }
    }
    if (hi <= lo) hi = lo + 1;

    auto x_of = [&](const Rat& value) {
        Rat frac = (coord(value) - lo) / (hi - lo);
        Rat px = Rat(margin) + Rat(width - 2 * margin) * frac;
        return static_cast<int>(boost::multiprecision::numerator(px) /
                                boost::multiprecision::denominator(px));
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <title>degree " << bc.degree << " barcode</title>\n";
    svg << "  <line x1=\"" << margin << "\" y1=\"" << height - margin / 2 << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin / 2
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    int y = margin;
    for (const Bar& b : bc.bars) {
        int x1 = x_of(b.birth);
        int x2 = b.death ? x_of(*b.death) : width - margin;
        svg << "  <rect x=\"" << x1 << "\" y=\"" << y << "\" width=\""
            << std::max(1, x2 - x1) << "\" height=\"" << bar_height
            << "\" fill=\"" << (b.death ? "#2a6fb0" : "#b03a2a") << "\" data-birth=\""
            << rat_to_string(b.birth) << "\" data-death=\""
            << (b.death ? rat_to_string(*b.death) : std::string("inf")) << "\"";
        if (sqrt_scale) svg << " data-birth-sqrt=\"" << sqrt_decimal(b.birth) << "\"";
        svg << "/>\n";
        y += bar_height + gap;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ppersist::io
