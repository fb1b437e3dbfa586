// cak: command-line front end. Reads JSON from a file or "-" (stdin), writes
// JSON or SVG to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 1 negative result, 2 invalid input, 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "cak/combinatorics.hpp"
#include "cak/error.hpp"
#include "cak/geometry.hpp"
#include "cak/io.hpp"
#include "cak/order_types.hpp"
#include "cak/realization.hpp"
#include "cak/svg.hpp"

using namespace cak;
using io::json;

namespace {

constexpr int kNegative = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

// Any of the four encodings that determine a swap pair.
SwapPair load_swap_pair(const json& j) {
    if (j.contains("rho")) return io::swap_pair_from_json(j);
    if (j.contains("bodies")) return swap_pair_of(io::arrangement_from_json(j));
    if (j.contains("points")) {
        Arrangement a;
        for (const auto& [l, p] : io::point_set_from_json(j)) a.bodies.emplace(l, validate_polygon({p}));
        return swap_pair_of(a);
    }
    if (j.contains("order") && j.contains("rows")) return swap_pair_of(io::tableau_from_json(j));
    if (j.contains("canonical")) return swap_pair_of(io::tableau_from_json(j.at("canonical")));
    fail(ErrorKind::InvalidInput, "expected a swap pair, arrangement, point set or tableau");
}

Arrangement load_arrangement(const json& j) {
    if (j.contains("bodies")) return io::arrangement_from_json(j);
    if (j.contains("points")) {
        Arrangement a;
        for (const auto& [l, p] : io::point_set_from_json(j)) a.bodies.emplace(l, validate_polygon({p}));
        return a;
    }
    fail(ErrorKind::InvalidInput, "expected an arrangement or point set");
}

Chirotope load_chirotope(const json& j) {
    if (j.contains("triples")) return io::chirotope_from_json(j);
    if (j.contains("points")) return chirotope_of_points(io::point_set_from_json(j));
    return chirotope_of(load_swap_pair(j));
}

bool orientable(const SwapPair& sp) {
    for (size_t a = 0; a < sp.n(); ++a)
        for (size_t b = a + 1; b < sp.n(); ++b)
            for (size_t c = b + 1; c < sp.n(); ++c)
                if (triple_type(sp, sp.rho[a], sp.rho[b], sp.rho[c]) == TripleType::NonOrientable) return false;
    return true;
}

json type_json(const SwapPair& sp) {
    return {{"swap_pair", io::to_json(sp)}, {"type", io::to_json(canonical_form(sp))}};
}

int report(const Error& e) {
    json diag{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (!e.detail().empty()) diag["detail"] = e.detail();
    std::cerr << diag.dump() << "\n";
    return e.kind() == ErrorKind::Internal ? kInternal : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial types of arrangements of convex bodies"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned seed = 1;
    app.add_option("--seed", seed, "Seed for randomized generation");

    std::string in, in2, out, svg_out, theta = "1/2", first, kind = "primal", radius_scale = "1";
    std::vector<std::string> triple;
    int max_retries = 3, width = 640, height = 480, margin = 24;
    unsigned color_seed = 1, jobs = 1;
    size_t n = 3, N = 6, pair_crossings = 0;
    bool only_orientable = false, no_labels = false;

    auto input = [&](CLI::App* c, std::string& target, const char* name = "input") {
        c->add_option(name, target, "JSON file, or - for standard input")->required();
    };

    auto* ct = app.add_subcommand("ct", "Swap pair and canonical type of an arrangement");
    input(ct, in);
    auto* eq = app.add_subcommand("eq", "Do two inputs have the same combinatorial type (exit 1 if not)");
    input(eq, in, "a");
    input(eq, in2, "b");
    auto* realize = app.add_subcommand("realize", "Arrangement of N-gons realizing a swap pair");
    input(realize, in);
    realize->add_option("--radius-scale", radius_scale, "Multiplier on the base radius (rational, >= 1)");
    realize->add_option("--max-retries", max_retries, "Radius escalations before giving up");
    realize->add_option("--svg", svg_out, "Also render the arrangement to this file");
    auto* orient_cmd = app.add_subcommand("orient", "Chirotope of an orientable type, or one triple type (exit 1 if non-orientable)");
    input(orient_cmd, in);
    orient_cmd->add_option("--triple", triple, "Three labels")->expected(3);
    auto* cc = app.add_subcommand("cc", "Check the CC-system axioms (exit 1 on a violation)");
    input(cc, in);
    auto* layers_cmd = app.add_subcommand("layers", "Layer partition and depth");
    input(layers_cmd, in);
    auto* period = app.add_subcommand("period", "Periodicity of the tableau");
    input(period, in);
    auto* standard = app.add_subcommand("standard", "Standard configuration of a type at a base angle");
    input(standard, in);
    standard->add_option("--theta", theta, "Base angle in turns, rational");
    auto* udual = app.add_subcommand("universal-dual", "cyclecat(L1 U ... Lk U) from {\"systems\": [...]}");
    input(udual, in);
    auto* uprimal = app.add_subcommand("universal-primal", "k-gon arrangement from {\"point_sets\": [...]}");
    input(uprimal, in);
    auto* points2ct = app.add_subcommand("points2ct", "Swap pair, type and chirotope of a point set");
    input(points2ct, in);
    auto* wiring = app.add_subcommand("wiring", "Allowable sequence of a point set");
    input(wiring, in);
    wiring->add_option("--first", first, "Rotate so this boundary point's path is topmost and crosses first");
    auto* enumerate = app.add_subcommand("enumerate", "All canonical types with n labels and N crossings");
    enumerate->add_option("-n,--labels", n, "Number of labels (<= 4)");
    enumerate->add_option("-N,--crossings", N, "Number of crossings (<= 12)");
    enumerate->add_option("--pair-crossings", pair_crossings, "Keep types where every pair crosses this often");
    enumerate->add_flag("--orientable", only_orientable, "Keep orientable types only");
    enumerate->add_option("--jobs", jobs, "Worker threads");
    auto* render = app.add_subcommand("render", "SVG of an arrangement (primal, dual) or a swap pair (wiring)");
    input(render, in);
    render->add_option("--kind", kind, "primal, dual or wiring")->check(CLI::IsMember({"primal", "dual", "wiring"}));
    render->add_option("-o,--output", out, "Output file (default stdout)");
    render->add_option("--width", width);
    render->add_option("--height", height);
    render->add_option("--margin", margin);
    render->add_option("--color-seed", color_seed);
    render->add_flag("--no-labels", no_labels);
    auto* random = app.add_subcommand("random", "Random generic point set with n points (uses --seed)");
    random->add_option("-n,--labels", n, "Number of points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInvalid;
    }

    try {
        if (*ct) {
            emit(type_json(load_swap_pair(io::read_json(in))));
        } else if (*eq) {
            const bool same = equivalent(load_swap_pair(io::read_json(in)), load_swap_pair(io::read_json(in2)));
            emit({{"equivalent", same}});
            return same ? 0 : kNegative;
        } else if (*realize) {
            RealizeOptions o;
            o.radius_scale = parse_rational(radius_scale);
            o.max_retries = max_retries;
            int retries = 0;
            const Arrangement a = realize_ngons(load_swap_pair(io::read_json(in)), o, &retries);
            log(LogLevel::Info, "realized after " + std::to_string(retries) + " escalations");
            if (!svg_out.empty()) write_text(svg_out, render_arrangement(a));
            emit(io::to_json(a));
        } else if (*orient_cmd) {
            const SwapPair sp = load_swap_pair(io::read_json(in));
            if (!triple.empty()) {
                const TripleType t = triple_type(sp, triple[0], triple[1], triple[2]);
                emit({{"triple", triple}, {"type", std::string(to_string(t))}});
                return t == TripleType::NonOrientable ? kNegative : 0;
            }
            try {
                emit({{"orientable", true}, {"chirotope", io::to_json(chirotope_of(sp))}});
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::Inconsistent) throw;
                emit({{"orientable", false}, {"detail", e.detail()}});
                return kNegative;
            }
        } else if (*cc) {
            const CCResult r = cc_check(load_chirotope(io::read_json(in)));
            json j{{"ok", r.ok}};
            if (!r.ok) j["axiom"] = r.axiom, j["witness"] = r.witness;
            emit(j);
            return r.ok ? 0 : kNegative;
        } else if (*layers_cmd) {
            const Layers l = layers(load_swap_pair(io::read_json(in)));
            emit({{"partition", l.partition}, {"depth", l.depth}});
        } else if (*period) {
            const Periodicity p = periodicity(tableau_of(load_swap_pair(io::read_json(in))));
            emit({{"p", p.p}, {"period", io::to_json(p.period)}});
        } else if (*standard) {
            const json j = io::read_json(in);
            const CombinatorialType t = j.contains("canonical") ? io::combinatorial_type_from_json(j) : canonical_form(load_swap_pair(j));
            emit(io::to_json(standard_configuration(t, Turn(parse_rational(theta)))));
        } else if (*udual) {
            const json j = io::read_json(in);
            std::vector<PathSystem> systems;
            for (const auto& s : j.contains("systems") ? j.at("systems") : j) systems.push_back(io::path_system_from_json(s));
            emit(io::to_json(universal_dual(systems)));
        } else if (*uprimal) {
            const json j = io::read_json(in);
            std::vector<PointSet> sets;
            for (const auto& s : j.contains("point_sets") ? j.at("point_sets") : j) sets.push_back(io::point_set_from_json(s));
            emit(io::to_json(universal_primal(sets)));
        } else if (*points2ct) {
            const json j = io::read_json(in);
            const PointSet pts = io::point_set_from_json(j);
            const Chirotope chi = chirotope_of_points(pts);
            json r = type_json(load_swap_pair(j));
            r["chirotope"] = io::to_json(chi);
            emit(r);
        } else if (*wiring) {
            const PointSet pts = io::point_set_from_json(io::read_json(in));
            emit(io::to_json(first.empty() ? allowable_sequence(pts) : firstpath_representation(pts, first)));
        } else if (*enumerate) {
            EnumerateOptions o;
            o.jobs = jobs;
            if (pair_crossings > 0) o.pair_crossings = pair_crossings;
            json types = json::array();
            for (const auto& t : enumerate_canonical(n, N, o))
                if (!only_orientable || orientable(swap_pair_of(t.canonical))) types.push_back(io::to_json(t));
            emit({{"count", types.size()}, {"types", types}});
        } else if (*render) {
            RenderSpec spec;
            spec.width = width;
            spec.height = height;
            spec.margin = margin;
            spec.color_seed = color_seed;
            spec.show_labels = !no_labels;
            const json j = io::read_json(in);
            if (kind == "wiring")
                write_text(out, render_wiring(load_swap_pair(j), spec));
            else if (kind == "dual")
                write_text(out, render_dual(load_arrangement(j), spec));
            else
                write_text(out, render_arrangement(load_arrangement(j), spec));
        } else if (*random) {
            if (n < 1) fail(ErrorKind::InvalidInput, "need at least one point");
            std::mt19937 rng(seed);
            std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
            for (;;) {
                PointSet pts;
                for (size_t i = 0; i < n; ++i)
                    pts[std::to_string(i + 1)] = Point2{make_rational(Integer(num(rng)), Integer(den(rng))),
                                                        make_rational(Integer(num(rng)), Integer(den(rng)))};
                try {
                    if (n >= 2) allowable_sequence(pts);
                } catch (const Error&) {
                    continue;
                }
                emit(io::to_json(pts));
                break;
            }
        }
    } catch (const Error& e) {
        return report(e);
    } catch (const json::exception& e) {
        return report(Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what()));
    }
    return 0;
}
