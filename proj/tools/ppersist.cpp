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

// Exact-arithmetic persistent homology over poset indices: Rips and
// sublevel barcodes, bifiltration rank invariants, graph persistence,
// semigroup natural orders, diagram commutants, spectral page checks.
//
// Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.
// Errors go to stderr as JSON. PPERSIST_THREADS caps worker threads.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ppersist/json_io.hpp"
#include "ppersist/parallel.hpp"

using namespace ppersist;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string field = "q";
    std::string out;
    std::string svg;
};

FieldSpec field_of(const CommonOpts& opts) {
    auto fs = FieldSpec::parse(opts.field);
    if (!fs) throw validation_error("unknown field '" + opts.field + "' (use q, f2, fp:<prime>)");
    return *fs;
}

void write_output(const CommonOpts& opts, const json& payload) {
    std::string text = payload.dump(2) + "\n";
    if (opts.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opts.out, std::ios::binary);
        if (!out) throw validation_error("cannot write " + opts.out);
        out << text;
    }
}

void write_svg(const CommonOpts& opts, const Barcode& bc, bool sqrt_scale) {
    if (opts.svg.empty()) return;
    std::ofstream out(opts.svg, std::ios::binary);
    if (!out) throw validation_error("cannot write " + opts.svg);
    out << io::barcode_svg(bc, sqrt_scale);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot read " + path);
    return in;
}

json read_json_file(const std::string& path) {
    auto in = open_input(path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw validation_error(path + ": " + e.what());
    }
    return j;
}

void require_homology_dims(int degree, int max_dim) {
    if (degree < 0) throw validation_error("--degree must be >= 0");
    if (max_dim < degree + 1)
        throw validation_error("--max-dim must be at least degree + 1");
}

Rat parse_shift(const std::string& text) {
    auto r = parse_rational(text);
    if (!r || *r < 0) throw validation_error("--shift must be a nonnegative rational");
    return *r;
}

// Barcode of the module, or of its range module when a shift is given.
Barcode barcode_at_shift(const FilteredPair& fp, int degree, FieldSpec fs, const Rat& shift) {
    auto m = module_from_filtration(fp, degree, fs);
    if (shift != 0) return barcode_1d(shifted_module(m, shift), true, degree);
    Barcode bc = barcode_from_filtration(fp, degree, fs);
    // second route through the module engine, as a consistency check
    if (!compare_barcodes(bc, barcode_1d(m, true, degree)).equal)
        throw internal_check_error("barcode: reduction and rank routes disagree");
    return bc;
}

int run_vr_barcode(const CommonOpts& opts, const std::string& path, int degree, int max_dim,
                   const std::string& shift) {
    require_homology_dims(degree, max_dim);
    auto in = open_input(path);
    auto cloud = io::read_point_cloud_csv(in);
    auto fp = vr_filtration_1d(cloud, max_dim);
    FieldSpec fs = field_of(opts);
    Rat lambda = parse_shift(shift);
    Barcode bc = barcode_at_shift(fp, degree, fs, lambda);
    auto payload = io::barcode_json(bc, fs, /*sqrt_scale=*/true);
    if (lambda != 0) payload["shift"] = rat_to_string(lambda);
    write_output(opts, payload);
    write_svg(opts, bc, true);
    return 0;
}

int run_bifiltration_rank(const CommonOpts& opts, const std::string& path, int degree,
                          int max_dim, const std::string& morphism_path, bool mlambda) {
    require_homology_dims(degree, max_dim);
    auto in = open_input(path);
    auto cloud = io::read_point_cloud_csv(in);
    auto fp = vr_bifiltration(cloud, max_dim);
    FieldSpec fs = field_of(opts);
    auto m = module_from_filtration(fp, degree, fs);
    auto ri = rank_invariant(m);
    json payload = io::rank_invariant_json(m, ri, degree);

    if (!morphism_path.empty()) {
        auto mj = io::read_morphism(read_json_file(morphism_path));
        std::filesystem::path target_path(mj.target_path);
        if (target_path.is_relative())
            target_path = std::filesystem::path(morphism_path).parent_path() / target_path;
        auto tin = open_input(target_path.string());
        auto target = io::read_point_cloud_csv(tin);
        json checks = json::array();
        for (int s = 0; s < fp.index().size(); ++s) {
            const auto& label = fp.index().label(s);
            auto ind = induced_vr_map(mj.morphism, cloud, target, label[0], label[1], mlambda);
            checks.push_back(json{{"t2", rat_to_string(label[0])},
                                  {"lambda", rat_to_string(label[1])},
                                  {"t2_out", rat_to_string(ind.t2_out)},
                                  {"lambda_out", rat_to_string(ind.lambda_out)}});
        }
        payload["morphism"] = json{{"mode", mlambda ? "mlambda" : "safe"}, {"grid", checks}};
    }
    write_output(opts, payload);
    return 0;
}

int run_sublevel_barcode(const CommonOpts& opts, const std::string& path, int degree,
                         const std::string& shift) {
    auto input = io::read_sublevel_complex(read_json_file(path));
    // chain of distinct values with a sentinel on each side
    std::set<Rat> values;
    for (const auto& [v, r] : input.values) values.insert(r);
    if (values.empty()) throw validation_error("sublevel: no vertex values");
    std::vector<Rat> labels;
    labels.push_back(*values.begin() - 1);
    labels.insert(labels.end(), values.begin(), values.end());
    labels.push_back(*values.rbegin() + 1);
    auto chain = FinitePoset::chain(labels);
    std::map<int, int> f;
    for (const auto& [v, r] : input.values) {
        auto at = chain.find_label({r});
        if (!at) throw internal_check_error("sublevel: value missing from chain");
        f[v] = *at;
    }
    auto fp = sublevel_filtration(input.pair, f, chain);
    FieldSpec fs = field_of(opts);
    Rat lambda = parse_shift(shift);
    Barcode bc = barcode_at_shift(fp, degree, fs, lambda);
    auto payload = io::barcode_json(bc, fs, /*sqrt_scale=*/false);
    if (lambda != 0) payload["shift"] = rat_to_string(lambda);
    write_output(opts, payload);
    write_svg(opts, bc, false);
    return 0;
}

int run_graph_persist(const CommonOpts& opts, const std::string& path) {
    auto fam = io::read_graph_family(read_json_file(path));
    auto fp = graph_sublevel_family(fam);
    FieldSpec fs = field_of(opts);
    json payload;
    for (int degree = 0; degree <= 1; ++degree) {
        auto m = module_from_filtration(fp, degree, fs);
        // union-find / cycle-rank cross-check at every index element
        for (int s = 0; s < fp.index().size(); ++s) {
            auto sub = fp.sub_pair(s);
            int v = sub.x.count(0), e = sub.x.count(1);
            std::map<int, int> parent;
            for (const auto& vx : sub.x.simplices(0)) parent[vx[0]] = vx[0];
            std::function<int(int)> find = [&](int a) {
                return parent[a] == a ? a : parent[a] = find(parent[a]);
            };
            for (const auto& ed : sub.x.simplices(1)) parent[find(ed[0])] = find(ed[1]);
            std::set<int> comps;
            for (const auto& vx : sub.x.simplices(0)) comps.insert(find(vx[0]));
            int c = static_cast<int>(comps.size());
            int expect = degree == 0 ? c : e - v + c;
            if (m.dims[s] != expect)
                throw internal_check_error(
                    "graph-persist: homology disagrees with the combinatorial count at " +
                    fp.index().name(s));
        }
        auto ri = rank_invariant(m);
        payload["h" + std::to_string(degree)] = io::rank_invariant_json(m, ri, degree);
    }
    write_output(opts, payload);
    return 0;
}

int run_semigroup_order(const CommonOpts& opts, const std::string& path,
                        const std::string& order_kind) {
    auto in = open_input(path);
    auto s = io::read_semigroup_csv(in);
    FinitePoset order;
    if (order_kind == "mitsch") {
        order = mitsch_order(s);
    } else if (order_kind == "nambooripad") {
        order = nambooripad_order(s);
    } else {
        throw validation_error("--order must be mitsch or nambooripad");
    }
    json payload = io::poset_json(order);
    payload["order"] = order_kind;
    json idem = json::array();
    for (int e : s.idempotents()) idem.push_back(e);
    payload["idempotents"] = idem;
    if (order_kind == "nambooripad") {
        json sublevels = json::object();
        for (int elem = 0; elem < s.size(); ++elem) {
            // downset vs E_S s intersect s E_S; throws exit-2 on mismatch
            auto sub = semigroup_sublevel(s, elem, order, /*cross_check_nambooripad=*/true);
            sublevels[std::to_string(elem)] = sub;
        }
        payload["sublevels"] = sublevels;
    }
    write_output(opts, payload);
    return 0;
}

int run_end_ring(const CommonOpts& opts, const std::string& path) {
    auto input = io::read_diagram_rep(read_json_file(path));
    auto ring = end_ring(input.diagram, input.rep);
    write_output(opts, io::end_ring_json(input.diagram, ring));
    return 0;
}

int run_spectral_check(const CommonOpts& opts, const std::string& path) {
    auto input = io::read_spectral_page(read_json_file(path));
    auto result = validate_spectral_rep(input.page, input.rep);
    write_output(opts, io::spectral_validation_json(result));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact poset-indexed persistent homology"};
    app.require_subcommand(1);
    CommonOpts opts;

    std::string input_path, morphism_path, order_kind = "mitsch", shift = "0";
    int degree = 0, max_dim = 1;
    bool mlambda = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--field", opts.field, "coefficient field: q, f2, fp:<prime>");
        cmd->add_option("--out", opts.out, "output path (default stdout)");
        cmd->add_option("input", input_path, "input file")->required();
    };

    auto* vr = app.add_subcommand("vr-barcode", "Rips barcode of a weighted point cloud");
    add_common(vr);
    vr->add_option("--degree", degree, "homology degree")->required();
    vr->add_option("--max-dim", max_dim, "maximum simplex dimension")->required();
    vr->add_option("--shift", shift, "barcode of the range module at this shift");
    vr->add_option("--emit-svg", opts.svg, "write an SVG bar plot");

    auto* bi = app.add_subcommand("bifiltration-rank",
                                  "rank invariant of the two-parameter Rips filtration");
    add_common(bi);
    bi->add_option("--degree", degree)->required();
    bi->add_option("--max-dim", max_dim)->required();
    bi->add_option("--morphism", morphism_path,
                   "dataset morphism JSON checked across the grid");
    bi->add_flag("--paper-mode-mlambda", mlambda, "use the m*lambda target cutoff");

    auto* sl = app.add_subcommand("sublevel-barcode",
                                  "barcode of a vertex-valued sublevel filtration");
    add_common(sl);
    sl->add_option("--degree", degree)->required();
    sl->add_option("--shift", shift, "barcode of the range module at this shift");
    sl->add_option("--emit-svg", opts.svg);

    auto* gp = app.add_subcommand("graph-persist", "H0/H1 persistence of a graph family");
    add_common(gp);

    auto* sg = app.add_subcommand("semigroup-order",
                                  "natural partial order of a finite semigroup");
    add_common(sg);
    sg->add_option("--order", order_kind, "mitsch (default) or nambooripad");

    auto* er = app.add_subcommand("end-ring", "commutant of a diagram representation");
    add_common(er);

    auto* sc = app.add_subcommand("spectral-check", "validate d after d = 0 on a page");
    add_common(sc);

    CLI11_PARSE(app, argc, argv);

    try {
        if (vr->parsed()) return run_vr_barcode(opts, input_path, degree, max_dim, shift);
        if (bi->parsed())
            return run_bifiltration_rank(opts, input_path, degree, max_dim, morphism_path,
                                         mlambda);
        if (sl->parsed()) return run_sublevel_barcode(opts, input_path, degree, shift);
        if (gp->parsed()) return run_graph_persist(opts, input_path);
        if (sg->parsed()) return run_semigroup_order(opts, input_path, order_kind);
        if (er->parsed()) return run_end_ring(opts, input_path);
        if (sc->parsed()) return run_spectral_check(opts, input_path);
    } catch (const internal_check_error& e) {
        std::cerr << io::error_json("internal", e.what()).dump(2) << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << io::error_json("validation", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << io::error_json("validation", e.what()).dump(2) << "\n";
        return 1;
    }
    return 1;
}
