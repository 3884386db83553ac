#include "tgeo/scenario.hpp"

#include "tgeo/error.hpp"
#include "tgeo/gamma.hpp"
#include "tgeo/ternary.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <set>

namespace tgeo {

namespace {

struct LawEntry {
    std::string name;
    bool expect_pass = true;
};

struct Built {
    // keep-alive pools; reports only carry strings
    std::vector<std::unique_ptr<LoopStructure>> loops;
    std::vector<std::unique_ptr<TernaryStructure>> terns;
    std::string type;
    ChartTernary* chart = nullptr; // when type == "chart"
};

const std::set<std::string> kTernaryLaws = {"T0", "T1", "MT0", "MT1", "MT2", "MT1m", "MT2m"};
const std::set<std::string> kSuiteLaws = {"neutral",
                                          "inverses",
                                          "left_inverse_property",
                                          "right_inverse_property",
                                          "moufang_M1",
                                          "moufang_M2",
                                          "moufang_N1",
                                          "moufang_N2",
                                          "right_bol",
                                          "left_alternative"};
const std::set<std::string> kChainLaws = {"prod_inv_via_ternary", "double_inv_prod",
                                          "inv_inv_left_cancel", "inv_inv_slot_cancel",
                                          "right_inv_inv_cancel", "inv_involutive",
                                          "neutral_self_inverse", "ternary_via_prod"};
const std::set<std::string> kRoundtripLaws = {"roundtrip_product", "roundtrip_inverse"};

bool is_loop_law(const std::string& n) {
    return n == "suite" || n == "chain" || n == "roundtrip" || n == "commutative" ||
           n == "associative" || kSuiteLaws.count(n) || kChainLaws.count(n) ||
           kRoundtripLaws.count(n);
}

std::vector<LawEntry> parse_laws(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("\"laws\" must be a non-empty array");
    std::vector<LawEntry> out;
    for (const auto& e : j) {
        LawEntry entry;
        if (e.is_string()) {
            entry.name = e.get<std::string>();
        } else if (e.is_object()) {
            entry.name = e.at("law").get<std::string>();
            if (e.contains("expect")) {
                std::string x = e.at("expect").get<std::string>();
                if (x != "pass" && x != "fail")
                    throw ParseError("\"expect\" must be \"pass\" or \"fail\"");
                entry.expect_pass = (x == "pass");
            }
        } else {
            throw ParseError("law entries are names or {\"law\": .., \"expect\": ..}");
        }
        // bundles expand here so one expectation covers every member
        if (entry.name == "torsor") {
            out.push_back({"T0", entry.expect_pass});
            out.push_back({"T1", entry.expect_pass});
        } else if (entry.name == "MT") {
            out.push_back({"MT0", entry.expect_pass});
            out.push_back({"MT1", entry.expect_pass});
            out.push_back({"MT2", entry.expect_pass});
        } else if (entry.name == "MTm") {
            out.push_back({"MT0", entry.expect_pass});
            out.push_back({"MT1m", entry.expect_pass});
            out.push_back({"MT2m", entry.expect_pass});
        } else if (kTernaryLaws.count(entry.name) || entry.name == "beta_hom" ||
                   is_loop_law(entry.name)) {
            out.push_back(std::move(entry));
        } else {
            throw ParseError("unknown law '" + entry.name + "'");
        }
    }
    return out;
}

ChartConfig chart_config_from_json(const ScalarKind& kind, u32 m, const Json& beta) {
    if (beta.is_string() && beta.get<std::string>() == "pr1")
        return ChartConfig::pr1(kind, m);
    if (beta.is_string() && beta.get<std::string>() == "zero")
        return ChartConfig::coincident(kind, m);
    if (beta.is_array()) {
        std::vector<Scalar> coeffs;
        for (const auto& c : beta)
            coeffs.push_back(scalar_from_json(c, kind));
        return ChartConfig(kind, m, std::move(coeffs));
    }
    throw ParseError("chart \"beta\" is \"pr1\", \"zero\" or a coefficient array");
}

Built build_structure(const Json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ParseError("\"structure\" must be an object with \"type\"");
    Built b;
    b.type = j.at("type").get<std::string>();
    if (b.type == "zmod") {
        u32 n = j.at("n").get<u32>();
        if (n == 0)
            throw ParseError("zmod needs n >= 1");
        b.terns.push_back(std::make_unique<TernaryTable>(zmod_torsor_table(n)));
    } else if (b.type == "table") {
        u32 n = j.at("n").get<u32>();
        auto values = j.at("values").get<std::vector<u32>>();
        if (values.size() != static_cast<size_t>(n) * n * n)
            throw ParseError("table needs exactly n^3 values");
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j.at("labels").get<std::vector<std::string>>();
        std::string name = j.value("name", std::string("table"));
        b.terns.push_back(std::make_unique<TernaryTable>(name, n, std::move(values), std::move(labels)));
    } else if (b.type == "plane") {
        u32 p = j.at("p").get<u32>();
        PlaneModel pm(p);
        int a = j.at("a").get<int>();
        int bl = j.at("b").get<int>();
        if (a < 0 || a >= pm.nlines() || bl < 0 || bl >= pm.nlines())
            throw ParseError("plane line index out of range");
        b.terns.push_back(std::make_unique<TernaryTable>(table_from_plane(pm, a, bl)));
    } else if (b.type == "plane_all_pairs") {
        u32 p = j.at("p").get<u32>();
        PlaneModel pm(p);
        for (int a = 0; a < pm.nlines(); ++a)
            for (int bl = 0; bl < pm.nlines(); ++bl)
                b.terns.push_back(std::make_unique<TernaryTable>(table_from_plane(pm, a, bl)));
    } else if (b.type == "chart") {
        ScalarKind kind = kind_from_json(j.at("kind"));
        u32 m = j.at("m").get<u32>();
        ChartConfig cfg = chart_config_from_json(kind, m, j.value("beta", Json("pr1")));
        auto ct = std::make_unique<ChartTernary>(cfg);
        b.chart = ct.get();
        b.terns.push_back(std::move(ct));
    } else if (b.type == "units") {
        ScalarKind kind = kind_from_json(j.at("kind"));
        auto ul = std::make_unique<UnitLoop>(kind);
        b.terns.push_back(std::make_unique<TernaryOfLoop>(*ul));
        b.loops.push_back(std::move(ul));
    } else {
        throw ParseError("unknown structure type '" + b.type + "'");
    }
    return b;
}

Elem parse_origin(const Json& j, const Built& b, const TernaryStructure& t) {
    if (b.type == "chart") {
        ChartPoint pt = point_from_json(j, b.chart->cfg().kind(), b.chart->cfg().m());
        if (!b.chart->cfg().admissible(pt))
            throw Precondition("origin is not an admissible chart point");
        return pt;
    }
    if (b.type == "units") {
        Scalar s = scalar_from_json(j, static_cast<const UnitLoop&>(*b.loops.front()).kind());
        if (s.is_zero())
            throw Precondition("origin must be an invertible scalar");
        return s;
    }
    if (!j.is_number_unsigned())
        throw ParseError("table origins are element indices");
    u64 i = j.get<u64>();
    if (i >= t.size())
        throw ParseError("origin index out of range");
    return t.at(i);
}

Elem default_origin(const TernaryStructure& t) {
    auto structured = t.structured();
    if (!structured.empty())
        return structured.front();
    if (t.finite() && t.size() > 0)
        return t.at(0);
    throw Precondition("structure has no canonical origin; give \"origins\"");
}

// Reports from one law entry on one structure. Loop-level laws run once per
// origin on the origin's derived loop.
std::vector<CheckReport> run_entry(const TernaryStructure& t, const Built& b,
                                   const LawEntry& entry, const std::vector<Elem>& origins,
                                   const CheckOptions& opt) {
    std::vector<CheckReport> out;
    if (kTernaryLaws.count(entry.name)) {
        Law law = [&]() {
            if (entry.name == "T0") return law_T0(t);
            if (entry.name == "T1") return law_T1(t);
            if (entry.name == "MT0") return law_MT0(t);
            if (entry.name == "MT1") return law_MT1(t);
            if (entry.name == "MT2") return law_MT2(t);
            if (entry.name == "MT1m") return law_MT1_mirror(t);
            return law_MT2_mirror(t);
        }();
        out.push_back(run_law(t, law, opt));
        return out;
    }
    if (entry.name == "beta_hom") {
        if (!b.chart)
            throw ParseError("beta_hom needs a chart structure");
        out.push_back(run_law(*b.chart, law_beta_hom(*b.chart), opt));
        return out;
    }
    for (const Elem& origin : origins) {
        DerivedLoop d(t, origin);
        std::vector<Law> laws;
        if (entry.name == "suite" || kSuiteLaws.count(entry.name)) {
            for (auto& law : loop_suite(d))
                if (entry.name == "suite" || law.name == entry.name)
                    laws.push_back(std::move(law));
        } else if (entry.name == "chain" || kChainLaws.count(entry.name)) {
            for (auto& law : construction_chain(d))
                if (entry.name == "chain" || law.name == entry.name)
                    laws.push_back(std::move(law));
        } else if (entry.name == "roundtrip" || kRoundtripLaws.count(entry.name)) {
            for (auto& law : loop_roundtrip(d))
                if (entry.name == "roundtrip" || law.name == entry.name)
                    laws.push_back(std::move(law));
        } else if (entry.name == "commutative") {
            laws.push_back(law_commutative(d));
        } else {
            laws.push_back(law_associative(d));
        }
        for (const auto& law : laws)
            out.push_back(run_law(d, law, opt));
    }
    return out;
}

// An expected failure must actually fail AND its first witness must survive
// re-evaluation; an expected pass must pass.
bool report_ok(const TernaryStructure& t, const LawEntry& entry,
               const std::vector<Elem>& origins, const CheckReport& r) {
    if (entry.expect_pass)
        return r.pass;
    if (r.pass || r.typed.empty())
        return false;
    // rebuild the law the witness came from against the same structure
    std::vector<Law> candidates;
    if (kTernaryLaws.count(r.law)) {
        if (r.law == "T0") candidates.push_back(law_T0(t));
        if (r.law == "T1") candidates.push_back(law_T1(t));
        if (r.law == "MT0") candidates.push_back(law_MT0(t));
        if (r.law == "MT1") candidates.push_back(law_MT1(t));
        if (r.law == "MT2") candidates.push_back(law_MT2(t));
        if (r.law == "MT1m") candidates.push_back(law_MT1_mirror(t));
        if (r.law == "MT2m") candidates.push_back(law_MT2_mirror(t));
        return !candidates.empty() && revalidate(candidates.front(), r.typed.front());
    }
    for (const Elem& origin : origins) {
        DerivedLoop d(t, origin);
        if (d.name() != r.structure)
            continue;
        for (auto& law : loop_suite(d)) candidates.push_back(std::move(law));
        for (auto& law : construction_chain(d)) candidates.push_back(std::move(law));
        for (auto& law : loop_roundtrip(d)) candidates.push_back(std::move(law));
        candidates.push_back(law_commutative(d));
        candidates.push_back(law_associative(d));
        for (const auto& law : candidates)
            if (law.name == r.law)
                return revalidate(law, r.typed.front());
        return false;
    }
    return false;
}

// One item end to end. Structure problems (bad references, precondition
// violations) become a failed item with an "error" field rather than
// aborting the other items.
std::pair<Json, bool> run_item(const Json& item, u64 seed, u64 trials) {
    std::string name = item.value("name", std::string("item"));
    try {
        Built built = build_structure(item.at("structure"));
        auto entries = parse_laws(item.at("laws"));

        CheckOptions opt;
        opt.seed = seed;
        opt.trials = trials;
        // keep the structured-first phase proportionate: pool^arity explodes
        // for the arity-5 laws while the known structured witnesses all sit
        // within the first few hundred tuples
        opt.structured_cap = item.value("structured_cap", std::max<u64>(trials, 1000));
        opt.exhaustive_cap = item.value("exhaustive_cap", opt.exhaustive_cap);

        bool item_ok = true;
        Json reports = Json::array();
        for (const auto& tern_ptr : built.terns) {
            const TernaryStructure& t = *tern_ptr;
            std::vector<Elem> origins;
            if (item.contains("origins")) {
                for (const auto& oj : item.at("origins"))
                    origins.push_back(parse_origin(oj, built, t));
            }
            bool needs_origin =
                std::any_of(entries.begin(), entries.end(),
                            [](const LawEntry& e) { return is_loop_law(e.name); });
            if (origins.empty() && needs_origin)
                origins.push_back(default_origin(t));

            for (const auto& entry : entries) {
                for (const auto& r : run_entry(t, built, entry, origins, opt)) {
                    bool ok = report_ok(t, entry, origins, r);
                    item_ok = item_ok && ok;
                    Json rj = report_to_json(r);
                    rj["expect"] = entry.expect_pass ? "pass" : "fail";
                    rj["ok"] = ok;
                    reports.push_back(std::move(rj));
                }
            }
        }

        Json ij{{"name", name}, {"ok", item_ok}, {"reports", std::move(reports)}};
        if (item.contains("note"))
            ij["note"] = item.at("note");
        return {std::move(ij), item_ok};
    } catch (const Error& e) {
        Json ij{{"name", name}, {"ok", false}, {"error", e.what()}, {"reports", Json::array()}};
        return {std::move(ij), false};
    }
}

} // namespace

ScenarioResult run_scenario(const Json& input, std::optional<u64> seed_override,
                            std::optional<u64> trials_override) {
    if (!input.is_object())
        throw ParseError("scenario must be a JSON object");
    if (input.value("schema", 0) != 1)
        throw ParseError("scenario needs \"schema\": 1");
    if (!input.contains("items"))
        throw ParseError("scenario needs \"items\"");

    u64 seed = seed_override.value_or(input.value("seed", u64{0}));
    u64 default_trials = trials_override.value_or(input.value("trials", u64{10000}));

    // Items are independent; run them concurrently but emit in input order.
    std::vector<std::future<std::pair<Json, bool>>> futures;
    for (const auto& item : input.at("items")) {
        u64 trials = trials_override.value_or(item.value("trials", default_trials));
        futures.push_back(std::async(std::launch::async,
                                     [item, seed, trials] { return run_item(item, seed, trials); }));
    }

    ScenarioResult result;
    result.ok = true;
    Json items_out = Json::array();
    for (auto& f : futures) {
        auto [ij, ok] = f.get();
        items_out.push_back(std::move(ij));
        result.ok = result.ok && ok;
    }

    result.output = Json{{"schema", 1},
                         {"name", input.value("name", std::string("scenario"))},
                         {"seed", seed},
                         {"ok", result.ok},
                         {"items", std::move(items_out)}};
    return result;
}

ScenarioResult run_laws_item(const Json& item, std::optional<u64> seed_override,
                             std::optional<u64> trials_override) {
    Json scenario{{"schema", 1},
                  {"name", item.value("name", std::string("laws"))},
                  {"items", Json::array({item})}};
    return run_scenario(scenario, seed_override, trials_override);
}

Json ternary_eval_json(const Json& in) {
    std::string geom = in.value("geometry", std::string("lattice"));
    if (geom == "lattice") {
        Subspace a = subspace_from_json(in.at("a"));
        Subspace b = subspace_from_json(in.at("b"));
        Subspace x = subspace_from_json(in.at("x"));
        Subspace y = subspace_from_json(in.at("y"));
        Subspace z = subspace_from_json(in.at("z"));
        std::optional<Subspace> u;
        if (in.contains("u"))
            u = subspace_from_json(in.at("u"));
        Subspace w = ternary_lattice(x, y, z, a, b, u);
        bool col = collinear_triple(x, y, z);
        Json out{{"geometry", "lattice"}, {"w", subspace_to_json(w)}, {"collinear", col}};
        if (col && x != y)
            out["two_step_agrees"] = (ternary_collinear_two_step(x, y, z, a, b, u) == w);
        u32 n = a.ambient();
        if (a.rank() == n - 1 && b.rank() == n - 1 && x.rank() == 1 && y.rank() == 1 &&
            z.rank() == 1) {
            LatticeChart lc(a, b);
            ChartPoint cw = chart_formula(lc.embed(x), lc.embed(y), lc.embed(z), lc.cfg());
            out["chart"] = Json{{"w", point_to_json(cw)}, {"agrees", lc.lift(cw) == w}};
        }
        return out;
    }
    if (geom == "chart") {
        ScalarKind kind = kind_from_json(in.at("kind"));
        u32 m = in.at("m").get<u32>();
        ChartConfig cfg = chart_config_from_json(kind, m, in.value("beta", Json("pr1")));
        ChartPoint x = point_from_json(in.at("x"), kind, m);
        ChartPoint y = point_from_json(in.at("y"), kind, m);
        ChartPoint z = point_from_json(in.at("z"), kind, m);
        ChartPoint w = chart_formula(x, y, z, cfg);
        Json out{{"geometry", "chart"}, {"w", point_to_json(w)}};
        if (!cfg.beta_zero())
            out["beta_w"] = scalar_to_json(beta_of_ternary(x, y, z, cfg));
        return out;
    }
    throw ParseError("\"geometry\" must be \"lattice\" or \"chart\"");
}

Json gamma_eval_json(const Json& in, const std::string& method) {
    Subspace x = subspace_from_json(in.at("x"));
    Subspace a = subspace_from_json(in.at("a"));
    Subspace y = subspace_from_json(in.at("y"));
    Subspace b = subspace_from_json(in.at("b"));
    Subspace z = subspace_from_json(in.at("z"));

    if (method == "brute")
        return Json{{"method", "brute"},
                    {"result", subspace_to_json(gamma_bruteforce(x, a, y, b, z))}};
    if (method == "lattice")
        return Json{{"method", "lattice"},
                    {"result", subspace_to_json(gamma_lattice_generic(x, a, y, b, z))}};
    if (method == "collinear") {
        if (!in.contains("u"))
            throw ParseError("collinear gamma evaluation needs \"u\"");
        Subspace u = subspace_from_json(in.at("u"));
        Subspace p2 = gamma_collinear_part2(x, a, y, b, z, u);
        Json out{{"method", "collinear"}, {"part2", subspace_to_json(p2)}};
        u32 n = a.ambient();
        if (a.rank() == n - 1 && b.rank() == n - 1 && x.rank() == 1 && y.rank() == 1 &&
            z.rank() == 1 && x != y) {
            Subspace p3 = gamma_collinear_part3(x, a, y, b, z, u);
            out["part3"] = subspace_to_json(p3);
            out["parts_agree"] = (p2 == p3);
        }
        return out;
    }
    if (method.empty()) {
        Subspace g = gamma_bruteforce(x, a, y, b, z);
        Subspace l = gamma_lattice_generic(x, a, y, b, z);
        return Json{{"brute", subspace_to_json(g)},
                    {"lattice", subspace_to_json(l)},
                    {"equal", g == l},
                    {"lattice_contains_brute", g.leq(l)},
                    {"general_position", general_position(x, y, z)},
                    {"general_position_sufficient", general_position_sufficient(x, y, z)}};
    }
    throw ParseError("gamma method is \"brute\", \"lattice\" or \"collinear\"");
}

} // namespace tgeo
