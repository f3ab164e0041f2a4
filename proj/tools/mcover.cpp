// Copyright (c) mcover contributors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: 0 verified success, 1 error,
// 2 verified invalid, 3 fallback or incomplete.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mcover/cover.hpp"
#include "mcover/generate.hpp"
#include "mcover/graph.hpp"
#include "mcover/grid.hpp"
#include "mcover/io.hpp"
#include "mcover/layers.hpp"
#include "mcover/oracle.hpp"
#include "mcover/simd/bitops.hpp"
#include "mcover/solver4.hpp"
#include "mcover/two_colour.hpp"

namespace {

using namespace mcover;
using nlohmann::json;

enum Exit : int { kOk = 0, kError = 1, kInvalid = 2, kIncomplete = 3 };

Bound parse_bound(const std::string& s) {
    if (s == "inf") return std::nullopt;
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(s, &used);
        if (used == s.size()) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument("bound must be a nonnegative integer or 'inf', got '" + s + "'");
}

std::string bound_text(const Bound& b) { return b ? std::to_string(*b) : "inf"; }

void emit_colouring(const EdgeColouring& col, const std::string& out) {
    if (out.empty() || out == "-")
        write_colouring(std::cout, col);
    else
        save_colouring(out, col);
}

void emit_cover(const Cover& cover, const std::string& out) {
    if (out.empty() || out == "-")
        write_cover(std::cout, cover);
    else
        save_cover(out, cover);
}

void print_report(std::ostream& out, const CoverReport& report) {
    out << "valid " << (report.valid ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < report.parts.size(); ++i) {
        const auto& p = report.parts[i];
        out << "part " << i << " diameter " << (p.diameter.connected() ? std::to_string(p.diameter.value()) : "disconnected")
            << "\n";
    }
    if (!report.valid) out << report.describe() << "\n";
}

std::vector<Vertex> parse_vertices(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<Vertex>(std::stoul(item)));
    }
    return out;
}

json trace_json(const Solution& sol) {
    const auto& t = sol.trace;
    json j;
    j["branch"] = branch_name(t.branch);
    j["colour_pair"] = t.colour_pair ? json::array({t.colour_pair->first, t.colour_pair->second}) : json(nullptr);
    j["seeds"] = t.seeds;
    json ds = json::array();
    for (const auto& p : t.distant_set) ds.push_back({p.x, p.y});
    j["distant_set"] = ds;
    j["layer_route"] = t.layer_route;
    j["recoloured_diameter"] = t.recoloured_diameter ? json(*t.recoloured_diameter) : json(nullptr);
    j["notes"] = t.notes;
    j["diagnostic"] = t.diagnostic;
    json parts = json::array();
    for (std::size_t i = 0; i < sol.cover.parts.size(); ++i) {
        const auto& d = sol.report.parts.at(i).diameter;
        parts.push_back({{"colour", sol.cover.parts[i].colour},
                         {"size", sol.cover.parts[i].set.count()},
                         {"diameter", d.connected() ? json(d.value()) : json(nullptr)}});
    }
    j["parts"] = parts;
    j["claimed_bound"] = sol.cover.claimed_bound ? json(*sol.cover.claimed_bound) : json(nullptr);
    j["valid"] = sol.report.valid;
    return j;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string kind = "random-uniform";
    std::size_t n = 10;
    int k = 4;
    std::uint64_t seed = 1;
    std::string sizes;
    std::string points;
    std::string out;
};

int run_gen(const GenArgs& a) {
    const auto k = static_cast<Colour>(a.k);
    EdgeColouring col;
    if (a.kind == "random-uniform") {
        col = random_uniform(a.n, k, a.seed);
    } else if (a.kind == "random-multipartite") {
        std::vector<std::size_t> sizes;
        for (Vertex v : parse_vertices(a.sizes)) sizes.push_back(v);
        col = random_multipartite(sizes, k, a.seed);
    } else if (a.kind == "layered-adversarial") {
        col = layered_adversarial(a.n, a.seed);
    } else if (a.kind == "twin-path") {
        col = twin_path(a.n, a.seed);
    } else if (a.kind == "component-blowup") {
        col = component_blowup(a.n, a.seed);
    } else if (a.kind == "sharpness-x") {
        col = sharpness_colouring();
    } else if (a.kind == "matching-gap") {
        col = matching_gap_example(a.n, a.seed);
    } else if (a.kind == "from-points") {
        if (a.points.empty()) throw InvalidArgument("from-points needs --points");
        col = colouring_from_points(load_points(a.points));
    } else {
        throw InvalidArgument("unknown generator kind '" + a.kind + "'");
    }
    emit_colouring(col, a.out);
    return kOk;
}

struct SolveArgs {
    std::string input;
    bool k4 = false;
    std::string lemma;
    std::string trace;
    std::string out;
};

int run_solve(const SolveArgs& a) {
    const auto col = load_colouring(a.input);
    if (a.k4 == !a.lemma.empty()) throw InvalidArgument("solve needs exactly one of --k4 or --lemma");
    if (a.k4) {
        const auto sol = solve4(col);
        if (!a.trace.empty()) {
            std::ofstream t(a.trace);
            if (!t) throw InvalidArgument("cannot write " + a.trace);
            t << trace_json(sol).dump(2) << "\n";
        }
        if (!a.out.empty()) save_cover(a.out, sol.cover);
        std::ostream& log = a.out.empty() ? std::cerr : std::cout;
        if (a.out.empty()) write_cover(std::cout, sol.cover);
        log << "branch " << branch_name(sol.trace.branch) << "\n";
        print_report(log, sol.report);
        if (!sol.report.valid) return kInvalid;
        return sol.trace.branch == Branch::ConnectivityFallback ? kIncomplete : kOk;
    }
    const VertexSet all = VertexSet::full(col.n());
    if (a.lemma == "2cols") {
        const Colour c = erdos_rado_cover(col);
        const Cover cover{{{all, c}}, 3};
        emit_cover(cover, a.out);
        return verify_cover(col, cover, 3, 1).valid ? kOk : kInvalid;
    }
    if (a.lemma == "2colsbip") {
        const auto outcome = bipartite_two_colour(col);
        const auto classes = col.host().infer_classes();
        if (!classes) throw InvalidArgument("host graph is not complete multipartite");
        const auto& cls = *classes;
        if (const auto* m = std::get_if<MonoSpanning>(&outcome)) {
            std::cout << "spanning colour " << int(m->colour) << " diameter " << m->diameter << "\n";
        } else {
            const auto& s = std::get<Split>(outcome);
            std::cout << "split colour " << int(s.colour_aa) << "\n"
                      << "a1 " << s.a1.to_string() << "\nb1 " << s.b1.to_string() << "\na2 " << s.a2.to_string()
                      << "\nb2 " << s.b2.to_string() << "\n";
        }
        return check_bipartite_outcome(col, cls[0], cls[1], 1, 2, outcome) ? kOk : kInvalid;
    }
    if (a.lemma == "mult2col") {
        const auto o = multipartite_two_colour(col);
        std::cout << "colour " << int(o.colour) << " diameter " << o.diameter << " bound " << o.bound << " route "
                  << o.route << "\n";
        if (!a.out.empty()) save_cover(a.out, Cover{{{all, o.colour}}, o.bound});
        const auto classes = col.host().infer_classes();
        if (!classes) throw InvalidArgument("host graph is not complete multipartite");
        const auto& cls = *classes;
        const Diameter d = SubgraphView::partite(col, cls).diameter(o.colour);
        return d.connected() && d.value() <= o.bound ? kOk : kInvalid;
    }
    throw InvalidArgument("unknown lemma '" + a.lemma + "' (2cols, 2colsbip, mult2col)");
}

struct VerifyArgs {
    std::string colouring, cover, bound;
    std::size_t parts = 0;
};

int run_verify(const VerifyArgs& a) {
    const auto col = load_colouring(a.colouring);
    const auto cover = load_cover(a.cover, col.n());
    const Bound bound = a.bound.empty() ? cover.claimed_bound : parse_bound(a.bound);
    const std::size_t parts = a.parts ? a.parts : (col.k() > 1 ? col.k() - 1u : 1u);
    const auto report = verify_cover(col, cover, bound, parts);
    std::cout << "bound " << bound_text(bound) << " parts " << parts << "\n";
    print_report(std::cout, report);
    return report.valid ? kOk : kInvalid;
}

struct LayersArgs {
    std::string input;
    int c1 = 1, c2 = 2;
    std::string seeds;
    bool spread = false;
};

int run_layers(const LayersArgs& a) {
    const auto col = load_colouring(a.input);
    const MonoMetrics metrics(col);
    const auto seeds = parse_vertices(a.seeds);
    const auto lm = LayerMapping::build(metrics, static_cast<Colour>(a.c1), static_cast<Colour>(a.c2), seeds,
                                        a.spread ? ValuePolicy::Spread : ValuePolicy::Zero);
    std::cout << "c1 " << int(lm.c1()) << " c2 " << int(lm.c2()) << " reserved " << int(lm.c3()) << " "
              << int(lm.c4()) << "\n";
    std::cout << "layers " << lm.points().size() << " values " << lm.distinct_values(0) << " "
              << lm.distinct_values(1) << "\n";
    std::cout << "D1\tD2\tsize\n";
    for (const auto& p : lm.points()) std::cout << p.x << "\t" << p.y << "\t" << lm.layer(p).count() << "\n";
    if (const auto bad = lm.invariant_violation()) {
        std::cout << "invariant " << *bad << "\n";
        return kInvalid;
    }
    std::cout << "invariants ok\n";
    return kOk;
}

struct GridArgs {
    std::string input;
    std::size_t l = 3, d = 2;
    std::uint32_t m = 3;
    std::string mode = "path";
    std::uint64_t budget = 2'000'000'000ULL;
};

int run_grid_cover(const GridArgs& a) {
    const auto pts = load_points(a.input);
    const auto cover = cover_G3(pts);
    std::cout << "parts " << cover.size() << "\n";
    for (const auto& part : cover) std::cout << describe_grid_part(part) << "\n";
    return kOk;
}

int run_grid_classify(const GridArgs& a) {
    const auto pts = load_points(a.input);
    if (pts.arity() != 3) throw InvalidArgument("classify needs points in G_3");
    if (!independent(pts.points())) throw InvalidArgument("points are not independent in G_3");
    if (pts.size() == 4) {
        const auto tag = classify_independent4(pts.points());
        std::cout << "class " << independent4_name(tag) << "\n";
        return check_independent4(pts.points(), tag) ? kOk : kInvalid;
    }
    if (pts.size() == 5) {
        const auto tag = classify_independent5(pts.points());
        if (const auto* c = std::get_if<Coplanar>(&tag))
            std::cout << "class coplanar axis " << c->axis << " value " << c->value << "\n";
        else
            std::cout << "class three-lines centre " << point_to_string(std::get<ThreeLines>(tag).centre) << "\n";
        return check_independent5(pts.points(), tag) ? kOk : kInvalid;
    }
    throw InvalidArgument("classify takes 4 or 5 points");
}

int run_grid_search(const GridArgs& a) {
    SearchMode mode;
    if (a.mode == "path")
        mode = SearchMode::Path;
    else if (a.mode == "connected")
        mode = SearchMode::AnyConnected;
    else
        throw InvalidArgument("mode must be path or connected");
    const auto r = bounded_degree_search(a.l, a.d, a.m, mode, a.budget);
    std::cout << "best " << r.best_size << "\n"
              << "complete " << (r.complete ? "yes" : "no") << "\n"
              << "steps " << r.steps << "\n"
              << "uses_all_values " << (r.uses_all_values ? "yes" : "no") << "\n";
    for (const auto& p : r.witness) std::cout << point_to_string(p) << "\n";
    return r.complete ? kOk : kIncomplete;
}

struct ConvertArgs {
    std::string input, out;
};

int run_points2col(const ConvertArgs& a) {
    emit_colouring(colouring_from_points(load_points(a.input)), a.out);
    return kOk;
}

int run_col2points(const ConvertArgs& a) {
    const auto pc = points_from_colouring(load_colouring(a.input));
    if (a.out.empty() || a.out == "-")
        write_points(std::cout, pc.points);
    else
        save_points(a.out, pc.points);
    return kOk;
}

struct ScanArgs {
    std::size_t n = 4;
    int k = 2;
    std::string bound = "inf";
    std::size_t parts = 1;
    std::uint64_t random = 0;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::uint64_t budget = 100'000'000;
};

int run_scan(const ScanArgs& a) {
    ScanSpec spec;
    spec.n = a.n;
    spec.k = static_cast<Colour>(a.k);
    spec.bound = parse_bound(a.bound);
    spec.max_parts = a.parts;
    spec.sampler = a.random ? Sampler::Random : Sampler::Exhaustive;
    spec.count = a.random;
    spec.seed = a.seed;
    spec.threads = a.threads;
    spec.budget = a.budget;
    const auto r = exhaustive_colouring_scan(spec);
    std::cout << "n\tk\tbound\tparts\tsampler\tchecked\tworst\twitnesses\tfallbacks\tcomplete\n";
    std::cout << spec.n << "\t" << int(spec.k) << "\t" << bound_text(spec.bound) << "\t" << spec.max_parts << "\t"
              << (a.random ? "random" : "exhaustive") << "\t" << r.instances_checked << "\t"
              << (r.worst_bound_needed ? std::to_string(*r.worst_bound_needed) : "none") << "\t" << r.witness_count
              << "\t" << r.fallbacks << "\t" << (r.complete ? "yes" : "no") << "\n";
    for (const auto& w : r.witnesses) {
        std::cout << "# witness\n";
        write_colouring(std::cout, w);
    }
    if (r.witness_count > 0) return kInvalid;
    return r.complete && r.fallbacks == 0 ? kOk : kIncomplete;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monochromatic bounded-diameter covers of edge-coloured complete graphs"};
    app.require_subcommand(1);
    int code = kOk;

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated colouring");
    g->add_option("--kind", gen.kind,
                  "random-uniform | random-multipartite | layered-adversarial | twin-path | component-blowup | "
                  "sharpness-x | matching-gap | from-points")
        ->capture_default_str();
    g->add_option("--n", gen.n, "Vertices (matching-gap: number of extra vertices)")->capture_default_str();
    g->add_option("--k", gen.k, "Colours")->capture_default_str()->check(CLI::Range(1, 255));
    g->add_option("--seed", gen.seed)->capture_default_str();
    g->add_option("--sizes", gen.sizes, "Class sizes, comma separated (random-multipartite)");
    g->add_option("--points", gen.points, "Point-set file (from-points)");
    g->add_option("-o,--output", gen.out);
    g->callback([&] { code = run_gen(gen); });

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Cover a colouring");
    s->add_option("input", solve.input)->required();
    s->add_flag("--k4", solve.k4, "Run the 4-colour solver");
    s->add_option("--lemma", solve.lemma, "2cols | 2colsbip | mult2col");
    s->add_option("--trace", solve.trace, "Write the solve trace as JSON");
    s->add_option("-o,--output", solve.out, "Cover file");
    s->callback([&] { code = run_solve(solve); });

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check a cover against a colouring");
    v->add_option("colouring", verify.colouring)->required();
    v->add_option("cover", verify.cover)->required();
    v->add_option("--bound", verify.bound, "Diameter bound or 'inf' (default: the cover's own)");
    v->add_option("--parts", verify.parts, "Maximum parts (default: k - 1)");
    v->callback([&] { code = run_verify(verify); });

    LayersArgs layers;
    auto* ly = app.add_subcommand("layers", "Layer mappings");
    ly->require_subcommand(1);
    auto* lb = ly->add_subcommand("build", "Print the layer table");
    lb->add_option("input", layers.input)->required();
    lb->add_option("--c1", layers.c1)->capture_default_str()->check(CLI::Range(1, 4));
    lb->add_option("--c2", layers.c2)->capture_default_str()->check(CLI::Range(1, 4));
    lb->add_option("--seed", layers.seeds, "Seed vertices v0[,v1...]");
    lb->add_flag("--spread", layers.spread, "Spread values of new components apart");
    lb->callback([&] { code = run_layers(layers); });

    GridArgs grid;
    auto* gr = app.add_subcommand("grid", "Point sets in G_l");
    gr->require_subcommand(1);
    auto* gc = gr->add_subcommand("cover", "Cover a G_3 point set by <= 3 parts");
    gc->add_option("input", grid.input)->required();
    gc->callback([&] { code = run_grid_cover(grid); });
    auto* gk = gr->add_subcommand("classify", "Classify an independent 4- or 5-set");
    gk->add_option("input", grid.input)->required();
    gk->callback([&] { code = run_grid_classify(grid); });
    auto* gs = gr->add_subcommand("search", "Largest bounded-degree induced subgraph");
    gs->add_option("--l", grid.l)->capture_default_str();
    gs->add_option("--d", grid.d)->capture_default_str();
    gs->add_option("--m", grid.m)->capture_default_str();
    gs->add_option("--mode", grid.mode, "path | connected")->capture_default_str();
    gs->add_option("--budget", grid.budget)->capture_default_str();
    gs->callback([&] { code = run_grid_search(grid); });

    ConvertArgs conv;
    auto* cv = app.add_subcommand("convert", "Colourings <-> point sets");
    cv->require_subcommand(1);
    auto* p2c = cv->add_subcommand("points2col");
    p2c->add_option("input", conv.input)->required();
    p2c->add_option("-o,--output", conv.out);
    p2c->callback([&] { code = run_points2col(conv); });
    auto* c2p = cv->add_subcommand("col2points");
    c2p->add_option("input", conv.input)->required();
    c2p->add_option("-o,--output", conv.out);
    c2p->callback([&] { code = run_col2points(conv); });

    ScanArgs scan;
    auto* orc = app.add_subcommand("oracle", "Brute-force checks");
    orc->require_subcommand(1);
    auto* sc = orc->add_subcommand("scan", "Scan colourings of K_n for covers");
    sc->add_option("--n", scan.n)->capture_default_str();
    sc->add_option("--k", scan.k)->capture_default_str()->check(CLI::Range(1, 255));
    sc->add_option("--bound", scan.bound, "Diameter bound or 'inf'")->capture_default_str();
    sc->add_option("--parts", scan.parts)->capture_default_str();
    sc->add_option("--random", scan.random, "Sample this many random colourings instead");
    sc->add_option("--seed", scan.seed)->capture_default_str();
    sc->add_option("--threads", scan.threads, "0: hardware concurrency")->capture_default_str();
    sc->add_option("--budget", scan.budget)->capture_default_str();
    sc->callback([&] { code = run_scan(scan); });

    app.add_flag_callback(
        "--scalar", [] { simd::set_backend(simd::Backend::Scalar); }, "Force the scalar bitset kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    } catch (const ImpossibleByLemma& e) {
        std::cerr << "error: " << e.what() << "\n" << e.witness();
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return code;
}
