#include "tgeo/chart.hpp"
#include "tgeo/error.hpp"
#include "tgeo/gamma.hpp"
#include "tgeo/json_io.hpp"
#include "tgeo/plane_model.hpp"
#include "tgeo/render.hpp"
#include "tgeo/sampling.hpp"
#include "tgeo/scenario.hpp"
#include "tgeo/ternary.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace tgeo;

u64 env_seed() {
    const char* s = std::getenv("TERNARYGEO_SEED");
    if (!s || !*s)
        return 0;
    return std::strtoull(s, nullptr, 10);
}

// JSON goes to --out when given (stdout then carries the summary), to
// stdout otherwise (summary moves to stderr so stdout stays parseable).
void emit(const Json& j, const std::string& out_path, const std::string& summary) {
    if (!out_path.empty()) {
        write_text_file(out_path, json_dump(j));
        if (!summary.empty())
            std::cout << summary << "\n";
    } else {
        std::cout << json_dump(j);
        if (!summary.empty())
            std::cerr << summary << "\n";
    }
}

Json load_inline_or_file(const std::string& file, const std::string& inline_text,
                         const char* what) {
    if (!inline_text.empty())
        return parse_json_text(inline_text, what);
    if (!file.empty())
        return load_json_file(file);
    throw ParseError(std::string(what) + ": give --scenario FILE or --inline TEXT");
}

// ---------------------------------------------------------------- ternary

int ternary_eval(const std::string& file, const std::string& inline_text,
                 const std::string& out_path) {
    Json in = load_inline_or_file(file, inline_text, "ternary eval");
    emit(ternary_eval_json(in), out_path, "");
    return 0;
}

int ternary_sweep(u32 p, bool exhaustive, u64 trials, u64 seed, const std::string& out_path) {
    // p = 2 is out: in the fano plane every pair of distinct lines leaves a
    // two-point carrier whose joining line passes through a & b, so the
    // collinear case has no auxiliary point
    if (p != 3 && p != 5 && p != 7)
        throw Precondition("sweep supports p in {3, 5, 7}");
    if (exhaustive && p > 3)
        throw Precondition("the exhaustive sweep is sized for p <= 3; use sampled mode");

    PlaneModel pm(p);
    u64 tuples = 0, disagreements = 0, lattice_checked = 0;
    Json first_bad;

    auto check = [&](int a, int b, const LatticeChart& lc, int xi, int yi, int zi,
                     bool also_lattice) {
        int w_plane = pm.ternary(xi, yi, zi, a, b);
        const Subspace &xs = pm.points()[xi], &ys = pm.points()[yi], &zs = pm.points()[zi];
        ChartPoint cw = chart_formula(lc.embed(xs), lc.embed(ys), lc.embed(zs), lc.cfg());
        bool ok = (pm.point_index(lc.lift(cw)) == w_plane);
        if (ok && also_lattice) {
            Subspace wl = ternary_lattice(xs, ys, zs, pm.lines()[a], pm.lines()[b]);
            ok = (pm.point_index(wl) == w_plane);
            ++lattice_checked;
        }
        ++tuples;
        if (!ok) {
            ++disagreements;
            if (first_bad.is_null())
                first_bad = Json{{"a", a}, {"b", b}, {"x", xi}, {"y", yi}, {"z", zi}};
        }
    };

    if (exhaustive) {
        for (int a = 0; a < pm.nlines(); ++a)
            for (int b = 0; b < pm.nlines(); ++b) {
                LatticeChart lc(pm.lines()[a], pm.lines()[b]);
                auto car = pm.carrier(a, b);
                bool also_lattice = (a == 0 && b == 1);
                for (int xi : car)
                    for (int yi : car)
                        for (int zi : car)
                            check(a, b, lc, xi, yi, zi, also_lattice);
            }
    } else {
        Rng rng(derive_seed(seed, "ternary-sweep"));
        for (u64 t = 0; t < trials; ++t) {
            int a = static_cast<int>(rng.below(pm.nlines()));
            int b = static_cast<int>(rng.below(pm.nlines()));
            LatticeChart lc(pm.lines()[a], pm.lines()[b]);
            auto car = pm.carrier(a, b);
            int xi = car[rng.below(car.size())];
            int yi = car[rng.below(car.size())];
            int zi = car[rng.below(car.size())];
            check(a, b, lc, xi, yi, zi, t % 8 == 0);
        }
    }

    bool pass = (disagreements == 0);
    Json out{{"law", "ternary_routes_agree"},
             {"structure", "pg(2, " + std::to_string(p) + ")"},
             {"mode", exhaustive ? "exhaustive" : "sampled"},
             {"trials", tuples},
             {"lattice_route_checked", lattice_checked},
             {"failures", disagreements},
             {"pass", pass},
             {"seed", seed}};
    if (!first_bad.is_null())
        out["first_disagreement"] = first_bad;
    emit(out, out_path,
         std::string(pass ? "pass" : "FAIL") + ": plane, chart and lattice routes on pg(2, " +
             std::to_string(p) + "), " + std::to_string(tuples) + " triples");
    return pass ? 0 : 1;
}

// ------------------------------------------------------------------ gamma

int gamma_eval(const std::string& file, const std::string& inline_text,
               const std::string& method, const std::string& out_path) {
    Json in = load_inline_or_file(file, inline_text, "gamma eval");
    emit(gamma_eval_json(in, method), out_path, "");
    return 0;
}

int gamma_sweep(u32 p, u32 n, bool exhaustive, u64 trials, u64 seed,
                const std::string& out_path) {
    GammaWorld w(p, n);
    const int ns = w.nsubs();
    u64 tuples = 0, equal = 0, contains_violations = 0, gp_sufficient_violations = 0,
        middle_only_disagreements = 0;
    Json first_bad;

    auto check = [&](int x, int a, int y, int b, int z) {
        int g = w.gamma_brute(x, a, y, b, z);
        int l = w.gamma_generic(x, a, y, b, z);
        ++tuples;
        if (g == l)
            ++equal;
        if (!w.leq_i(g, l))
            ++contains_violations;
        if (w.general_position_sufficient_i(x, y, z) && g != l) {
            ++gp_sufficient_violations;
            if (first_bad.is_null())
                first_bad = Json{{"x", x}, {"a", a}, {"y", y}, {"b", b}, {"z", z}};
        }
        if (g != l && w.general_position_i(x, y, z) &&
            !w.general_position_sufficient_i(x, y, z))
            ++middle_only_disagreements;
    };

    if (exhaustive) {
        u64 total = 1;
        for (int i = 0; i < 5; ++i)
            total *= static_cast<u64>(ns);
        if (total > 2000000)
            throw Precondition("exhaustive gamma sweep is sized for at most 2e6 tuples; "
                               "this lattice has " + std::to_string(ns) + "^5");
        for (int x = 0; x < ns; ++x)
            for (int a = 0; a < ns; ++a)
                for (int y = 0; y < ns; ++y)
                    for (int b = 0; b < ns; ++b)
                        for (int z = 0; z < ns; ++z)
                            check(x, a, y, b, z);
    } else {
        Rng rng(derive_seed(seed, "gamma-sweep"));
        for (u64 t = 0; t < trials; ++t)
            check(static_cast<int>(rng.below(ns)), static_cast<int>(rng.below(ns)),
                  static_cast<int>(rng.below(ns)), static_cast<int>(rng.below(ns)),
                  static_cast<int>(rng.below(ns)));
    }

    bool pass = (contains_violations == 0 && gp_sufficient_violations == 0);
    Json out{{"structure", "subspaces of gf(" + std::to_string(p) + ")^" + std::to_string(n)},
             {"mode", exhaustive ? "exhaustive" : "sampled"},
             {"tuples", tuples},
             {"equal", equal},
             {"contains_violations", contains_violations},
             {"gp_sufficient_violations", gp_sufficient_violations},
             {"middle_only_disagreements", middle_only_disagreements},
             {"pass", pass},
             {"seed", seed}};
    if (!first_bad.is_null())
        out["first_violation"] = first_bad;
    emit(out, out_path,
         std::string(pass ? "pass" : "FAIL") + ": gamma sweep over gf(" + std::to_string(p) +
             ")^" + std::to_string(n) + ", " + std::to_string(tuples) + " tuples");
    return pass ? 0 : 1;
}

// ------------------------------------------------------------------- laws

int laws_check(const std::string& file, const std::string& inline_text,
               const std::string& laws_csv, std::optional<u64> trials, u64 seed, bool as_json,
               const std::string& out_path) {
    Json loaded = load_inline_or_file(file, inline_text, "laws check");
    Json item;
    if (loaded.contains("structure"))
        item = loaded;
    else
        item = Json{{"structure", loaded}};
    if (!laws_csv.empty()) {
        Json laws = Json::array();
        std::string cur;
        std::istringstream ss(laws_csv);
        while (std::getline(ss, cur, ',')) {
            if (cur == "moufang")
                cur = "suite";
            if (!cur.empty())
                laws.push_back(cur);
        }
        item["laws"] = std::move(laws);
    }
    if (!item.contains("laws"))
        throw ParseError("laws check: give --laws or a file with a \"laws\" list");

    ScenarioResult res = run_laws_item(item, seed, trials);
    if (as_json || !out_path.empty()) {
        emit(res.output, out_path, res.ok ? "ok" : "NOT ok");
    } else {
        for (const auto& it : res.output.at("items")) {
            if (it.contains("error"))
                std::cout << "error: " << it.at("error").get<std::string>() << "\n";
            for (const auto& r : it.at("reports")) {
                bool ok = r.at("ok").get<bool>();
                bool expected_fail = r.at("expect").get<std::string>() == "fail";
                std::cout << (ok ? "pass" : "FAIL") << "  " << r.at("law").get<std::string>()
                          << "  on " << r.at("structure").get<std::string>() << "  ["
                          << r.at("mode").get<std::string>() << ", trials=" << r.at("trials")
                          << ", failures=" << r.at("failures") << "]"
                          << (expected_fail ? "  (failure expected)" : "") << "\n";
            }
        }
        std::cout << (res.ok ? "ok" : "NOT ok") << "\n";
    }
    return res.ok ? 0 : 1;
}

// ----------------------------------------------------------------- render

ChartPoint parse_render_point(const std::string& text, const char* tag) {
    ChartPoint p;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ','))
        p.coords.push_back(Scalar::rat(parse_rational(cur)));
    if (p.coords.size() != 2)
        throw ParseError(std::string(tag) + ": expected two comma-separated rationals");
    return p;
}

int render_cmd(const std::string& xs, const std::string& ys, const std::string& zs,
               const std::string& view, bool coincident, int width, int height,
               const std::string& out_path, bool as_json) {
    RenderSpec spec = default_render_spec();
    if (!xs.empty())
        spec.x = parse_render_point(xs, "--x");
    if (!ys.empty())
        spec.y = parse_render_point(ys, "--y");
    if (!zs.empty())
        spec.z = parse_render_point(zs, "--z");
    spec.view = view;
    spec.coincident = coincident;
    spec.width = width;
    spec.height = height;

    RenderResult res = render_construction(spec);
    std::string path = out_path.empty() ? "construction.svg" : out_path;
    write_text_file(path, res.svg);
    if (as_json) {
        std::cout << json_dump(Json{{"w", point_to_json(res.w)},
                                    {"out", path},
                                    {"bytes", res.svg.size()}});
    } else {
        std::cout << "(x y z) = " << res.w.str() << "\n";
        std::cout << "wrote " << path << " (" << res.svg.size() << " bytes)\n";
    }
    return 0;
}

// -------------------------------------------------------------------- run

int run_cmd(const std::string& file, std::optional<u64> seed, std::optional<u64> trials,
            const std::string& out_path) {
    Json in = load_json_file(file);
    ScenarioResult res = run_scenario(in, seed, trials);
    std::ostringstream summary;
    for (const auto& it : res.output.at("items")) {
        summary << (it.at("ok").get<bool>() ? "ok   " : "FAIL ")
                << it.at("name").get<std::string>() << " ("
                << it.at("reports").size() << " reports)";
        if (it.contains("error"))
            summary << "  error: " << it.at("error").get<std::string>();
        summary << "\n";
    }
    summary << (res.ok ? "ok" : "NOT ok") << ": "
            << res.output.at("name").get<std::string>();
    emit(res.output, out_path, summary.str());
    return res.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact models of the two-hyperplane ternary operation on projective "
                 "spaces: subspace-lattice and chart evaluators, the five-slot submodule "
                 "map, torsor and Moufang law checkers, and an SVG construction figure.\n"
                 "The TERNARYGEO_SEED environment variable supplies the default seed."};
    app.require_subcommand(1);

    u64 seed = env_seed();
    bool seed_given = false;
    u64 trials = 0;
    bool trials_given = false;

    std::string scenario_file, inline_text, out_path;

    // ternary
    auto* t = app.add_subcommand("ternary", "Evaluate (x y z) or sweep route agreement");
    t->require_subcommand(1);
    auto* te = t->add_subcommand("eval", "Evaluate one triple from a JSON description");
    te->add_option("--scenario", scenario_file, "JSON file with the evaluation inputs");
    te->add_option("--inline", inline_text, "the same JSON given inline");
    te->add_option("--out", out_path, "write the result JSON here");
    auto* ts = t->add_subcommand("sweep", "Compare plane, chart and lattice routes");
    u32 sweep_p = 3;
    bool exhaustive = false;
    ts->add_option("--p", sweep_p, "field size (3, 5 or 7)");
    ts->add_flag("--exhaustive", exhaustive, "every line pair and carrier triple (p <= 3)");
    ts->add_option("--trials", trials, "sampled tuples (default 2000)")
        ->each([&](const std::string&) { trials_given = true; });
    ts->add_option("--seed", seed, "root seed")->each([&](const std::string&) { seed_given = true; });
    ts->add_option("--out", out_path, "write the report JSON here");

    // gamma
    auto* g = app.add_subcommand("gamma", "The five-slot submodule map");
    g->require_subcommand(1);
    auto* ge = g->add_subcommand("eval", "Evaluate one five-tuple of subspaces");
    std::string method;
    ge->add_option("--scenario", scenario_file, "JSON file with x, a, y, b, z (u for collinear)");
    ge->add_option("--inline", inline_text, "the same JSON given inline");
    ge->add_option("--method", method, "brute | lattice | collinear (default: both + compare)");
    ge->add_option("--out", out_path, "write the result JSON here");
    auto* gs = g->add_subcommand("sweep", "Witness-set vs lattice expression over a whole lattice");
    u32 gp_p = 2, gp_n = 3;
    gs->add_option("--p", gp_p, "field size");
    gs->add_option("--n", gp_n, "dimension (p^n <= 64)");
    gs->add_flag("--exhaustive", exhaustive, "all five-tuples of subspaces");
    gs->add_option("--trials", trials, "sampled tuples (default 2000)")
        ->each([&](const std::string&) { trials_given = true; });
    gs->add_option("--seed", seed, "root seed")->each([&](const std::string&) { seed_given = true; });
    gs->add_option("--out", out_path, "write the report JSON here");

    // laws
    auto* l = app.add_subcommand("laws", "Law checks on one structure");
    l->require_subcommand(1);
    auto* lc = l->add_subcommand("check", "Run named laws against a structure description");
    std::string structure_file, laws_csv;
    bool as_json = false;
    lc->add_option("--structure", structure_file, "JSON file: a structure or a full item");
    lc->add_option("--inline", inline_text, "the same JSON given inline");
    lc->add_option("--laws", laws_csv,
                   "comma list: T0,T1,MT0,MT1,MT2,MT1m,MT2m,beta_hom, bundles torsor,MT,MTm, "
                   "loop-level suite (alias moufang), chain, roundtrip, commutative, associative");
    lc->add_option("--trials", trials, "sampled tuples per law")
        ->each([&](const std::string&) { trials_given = true; });
    lc->add_option("--seed", seed, "root seed")->each([&](const std::string&) { seed_given = true; });
    lc->add_flag("--json", as_json, "print the full report JSON instead of summary lines");
    lc->add_option("--out", out_path, "write the report JSON here");

    // render
    auto* r = app.add_subcommand("render", "SVG figure of the two-line construction");
    std::string rx, ry, rz, view = "none";
    bool coincident = false;
    int width = 640, height = 480;
    r->add_option("--x", rx, "chart point, e.g. 3,2 or 1/2,-3");
    r->add_option("--y", ry, "chart point");
    r->add_option("--z", rz, "chart point");
    r->add_option("--view", view, "a | b | none: which distinguished line sits at infinity");
    r->add_flag("--coincident", coincident, "draw the b = a chart (true parallelogram)");
    r->add_option("--width", width, "canvas width");
    r->add_option("--height", height, "canvas height");
    r->add_option("--out", out_path, "SVG path (default construction.svg)");
    r->add_flag("--json", as_json, "print result JSON instead of text");

    // run
    auto* rn = app.add_subcommand("run", "Execute a scenario file of law checks");
    rn->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    rn->add_option("--seed", seed, "override the scenario seed")
        ->each([&](const std::string&) { seed_given = true; });
    rn->add_option("--trials", trials, "override every trial count")
        ->each([&](const std::string&) { trials_given = true; });
    rn->add_option("--out", out_path, "write the output JSON here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (te->parsed())
            return ternary_eval(scenario_file, inline_text, out_path);
        if (ts->parsed())
            return ternary_sweep(sweep_p, exhaustive, trials_given ? trials : 2000, seed, out_path);
        if (ge->parsed())
            return gamma_eval(scenario_file, inline_text, method, out_path);
        if (gs->parsed())
            return gamma_sweep(gp_p, gp_n, exhaustive, trials_given ? trials : 2000, seed, out_path);
        if (lc->parsed())
            return laws_check(structure_file, inline_text, laws_csv,
                              trials_given ? std::optional<u64>(trials) : std::nullopt, seed,
                              as_json, out_path);
        if (r->parsed())
            return render_cmd(rx, ry, rz, view, coincident, width, height, out_path, as_json);
        if (rn->parsed())
            return run_cmd(scenario_file,
                           seed_given ? std::optional<u64>(seed) : std::nullopt,
                           trials_given ? std::optional<u64>(trials) : std::nullopt, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
