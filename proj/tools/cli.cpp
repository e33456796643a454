#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptdt/bijections.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/io.hpp"
#include "ptdt/oracle.hpp"
#include "ptdt/render.hpp"
#include "ptdt/series.hpp"
#include "ptdt/toggle.hpp"
#include "ptdt/verify.hpp"

namespace ptdt::cli {

namespace {

using nlohmann::json;

// Deterministic part of a run; wall time is reported separately on stderr.
struct Report {
    std::string command;
    std::uint64_t digest = 1469598103934665603ull;  // FNV-1a offset basis
    std::vector<std::pair<std::string, std::string>> lines;
    json outputs = json::object();
    std::vector<CheckResult> checks;

    void absorb(const std::string& bytes) {
        for (unsigned char ch : bytes) {
            digest ^= ch;
            digest *= 1099511628211ull;
        }
    }
    void add(std::string key, std::string text, json value) {
        outputs[key] = std::move(value);
        lines.emplace_back(std::move(key), std::move(text));
    }
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

std::string hex(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

void print(const Report& r, bool as_json, std::ostream& out) {
    if (as_json) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
        json doc{{"command", r.command},
                 {"inputs_digest", hex(r.digest)},
                 {"outputs", r.outputs},
                 {"checks", checks},
                 {"passed", r.passed()}};
        out << doc.dump(2) << '\n';
        return;
    }
    out << "command: " << r.command << '\n' << "inputs: " << hex(r.digest) << '\n';
    for (const auto& [k, v] : r.lines) {
        if (v.find('\n') != std::string::npos) out << k << ":\n" << v;
        else out << k << ": " << v << '\n';
    }
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.detail.empty()) out << (c.passed ? ": " : ": counterexample ") << c.detail;
        out << '\n';
    }
    if (!r.checks.empty()) out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

std::string read_input(const std::string& path, Report& r) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw domain_error("cannot read " + path);
        buf << in.rdbuf();
    }
    r.absorb(buf.str());
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write " + path);
    out << text;
}

Partition parse_partition(const std::string& s) {
    if (s == "∅" || s == "-") return Partition{};
    return Partition::parse(s);
}

std::pair<Partition, Partition> parse_legs(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw domain_error("two-leg legs are written λ/µ, e.g. 2,2/3,1");
    return {parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1))};
}

std::string coefficient_list(const TruncatedSeries& s) {
    try {
        std::string out;
        for (const auto& c : s.integer_coefficients()) out += (out.empty() ? "" : ",") + c.str();
        return out;
    } catch (const domain_error&) {
        return "";
    }
}

void add_series(Report& r, const std::string& key, const TruncatedSeries& s) {
    r.add(key, s.to_string(), io::to_json(s));
    std::string coeffs = coefficient_list(s);
    if (!coeffs.empty()) r.lines.emplace_back("coefficients", coeffs);
}

CheckResult series_check(const std::string& name, const TruncatedSeries& a, const TruncatedSeries& b) {
    CheckResult c{name, a == b, 1, ""};
    c.detail = "residual " + (a - b).to_string();
    return c;
}

std::optional<ToggleSchedule> make_schedule(const std::string& spec, const Partition& start, int box) {
    if (spec.empty() || spec == "off-diagonal") return std::nullopt;
    if (spec == "lexicographic") return lexicographic_schedule(start, box);
    if (spec.rfind("seeded:", 0) == 0) {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(spec.substr(7));
        } catch (const std::exception&) {
            throw domain_error("bad schedule seed in '" + spec + "'");
        }
        return random_schedule(start, box, seed);
    }
    throw domain_error("unknown schedule '" + spec + "'");
}

template <class T>
T expect(const Configuration& c, const char* type) {
    if (!std::holds_alternative<T>(c)) throw domain_error("expected a " + std::string(type) + ", got " + type_name(c));
    return std::get<T>(c);
}

int cell_extent(const CellMap& m) {
    int e = 0;
    for (const auto& [c, v] : m) e = std::max({e, c.row, c.col});
    return e;
}

// ---- verbs ----

struct Globals {
    bool json = false;
    std::uint64_t seed = 0;
    std::string degree;
};

HalfInteger degree_or(const Globals& g, int fallback) {
    return g.degree.empty() ? HalfInteger::from_int(fallback) : HalfInteger::parse(g.degree);
}

struct SeriesArgs {
    bool macmahon = false;
    std::string one_leg, two_leg;
    bool rpp = false, product = false, cross_check = false;
};

void cmd_series(const SeriesArgs& a, const Globals& g, Report& r) {
    const HalfInteger d = degree_or(g, 6);
    const int chosen = a.macmahon + !a.one_leg.empty() + !a.two_leg.empty();
    if (chosen != 1) throw domain_error("choose exactly one of --macmahon, --one-leg, --two-leg");
    const bool small = d.is_integer() && d >= HalfInteger{} && d.floor() <= max_single_weight;
    if (a.macmahon) {
        TruncatedSeries m = a.product ? hook_product(ProductRegion::plane, {}, d)
                                      : evaluate_shape({ShapeKind::one_leg, {}, {}}, d);
        add_series(r, "series", m);
        if (a.cross_check) {
            r.checks.push_back(series_check("operator word equals hook product", evaluate_shape({ShapeKind::one_leg, {}, {}}, d),
                                            hook_product(ProductRegion::plane, {}, d)));
            if (!small) throw domain_error("--cross-check needs an integer degree of at most 12");
            r.checks.push_back(series_check("series equals plane-partition census", m,
                                            census_series(take_census({Family::plane, {}, {}}, static_cast<int>(d.floor())))));
        }
    } else if (!a.one_leg.empty()) {
        Partition l = parse_partition(a.one_leg);
        TruncatedSeries v = a.product ? hook_product(ProductRegion::outside, l, d)
                                      : evaluate_shape({ShapeKind::one_leg, l, {}}, d);
        add_series(r, "series", v);
        if (a.cross_check) {
            if (!small) throw domain_error("--cross-check needs an integer degree of at most 12");
            const int deg = static_cast<int>(d.floor());
            TruncatedSeries census = census_series(take_census({Family::one_leg_spp, l, {}}, deg));
            r.checks.push_back(series_check("series equals one-leg SPP census", v, census));
            TruncatedSeries mw = series_mul(census_series(take_census({Family::plane, {}, {}}, deg)),
                                            census_series(take_census({Family::one_leg_rpp, l, {}}, deg)));
            r.checks.push_back(series_check("V = M·W", v, mw));
        }
    } else {
        auto [l, mu] = parse_legs(a.two_leg);
        TruncatedSeries v = evaluate_shape({ShapeKind::two_leg_spp, l, mu}, d);
        TruncatedSeries w = evaluate_shape({ShapeKind::two_leg_rpp, l, mu}, d);
        add_series(r, "series", a.rpp ? w : v);
        r.add("lowest", (a.rpp ? minimal_weight_rpp(l, mu) : minimal_weight_spp(l, mu)).to_string(),
              io::to_json(a.rpp ? minimal_weight_rpp(l, mu) : minimal_weight_spp(l, mu)));
        if (a.cross_check)
            r.checks.push_back(series_check("V = M·W", v, series_mul(hook_product(ProductRegion::plane, {}, d), w)));
    }
}

struct BijectArgs {
    std::string kind, direction = "forward", input, output, schedule, lambda, legs;
    bool round_trip = false, random = false;
    int weight = 6;
};

Configuration random_config(const BijectArgs& a, const Globals& g) {
    FamilyDescriptor f;
    if (a.kind == "plane") {
        f.kind = Family::plane;
    } else if (a.kind == "one-leg") {
        f = {Family::one_leg_spp, parse_partition(a.lambda.empty() ? "2,1" : a.lambda), {}};
    } else {
        auto [l, mu] = parse_legs(a.legs.empty() ? "2/1" : a.legs);
        f = {Family::two_leg_spp, l, mu};
    }
    auto all = enum_configs(f, a.weight);
    std::mt19937_64 rng(g.seed);
    return all[rng() % all.size()];
}

void cmd_biject(const BijectArgs& a, const Globals& g, Report& r) {
    if (a.kind != "plane" && a.kind != "one-leg" && a.kind != "two-leg")
        throw domain_error("biject takes plane, one-leg or two-leg");
    if (a.direction != "forward" && a.direction != "inverse") throw domain_error("--direction is forward or inverse");
    if (a.random == !a.input.empty()) throw domain_error("give exactly one of --input and --random");
    if (a.random && a.direction == "inverse") throw domain_error("--random generates forward inputs only");
    if (!a.schedule.empty() && a.kind == "two-leg") throw domain_error("--schedule applies to plane and one-leg maps");

    json doc = a.random ? io::to_json(random_config(a, g)) : io::parse(read_input(a.input, r));
    if (a.random) r.absorb(doc.dump());
    json result;
    std::vector<CheckResult> checks;
    // A throwing inverse is a failed check, not a usage error.
    auto check = [&](const std::string& name, auto&& holds, const std::string& detail) {
        bool ok = false;
        std::string why = detail;
        try {
            ok = holds();
        } catch (const std::exception& e) {
            why += ": " + std::string(e.what());
        }
        checks.push_back({name, ok, 1, ok ? "" : why});
    };
    auto weight_line = [&](const std::vector<std::pair<std::string, HalfInteger>>& ws) {
        std::string s;
        for (const auto& [k, w] : ws) s += (s.empty() ? "" : ", ") + k + " " + w.to_string();
        json j = json::object();
        for (const auto& [k, w] : ws) j[k] = io::to_json(w);
        r.add("weights", s, j);
    };

    if (a.kind == "plane") {
        if (a.direction == "forward") {
            auto pi = expect<PlanePartition>(io::configuration_from_json(doc), "plane_partition");
            HookTableau t = pp_to_tableau(pi, make_schedule(a.schedule, {}, std::max(1, cell_extent(pi.entries))));
            result = {{"tableau", io::to_json(t)}};
            weight_line({{"pi", weight(pi)}, {"tableau", weight(t)}});
            if (a.round_trip) {
                check("inverse undoes forward", [&] { return tableau_to_pp(t) == pi; }, io::to_json(pi).dump());
                check("weight identity", [&] { return weight(t) == weight(pi); }, io::to_json(pi).dump());
            }
        } else {
            const json& tj = doc.contains("tableau") ? doc.at("tableau") : doc;
            auto t = expect<HookTableau>(io::configuration_from_json(tj), "hook_tableau");
            if (t.region != TableauRegion::plane) throw domain_error("expected a tableau on the plane");
            PlanePartition pi = tableau_to_pp(t);
            result = io::to_json(pi);
            weight_line({{"tableau", weight(t)}, {"pi", weight(pi)}});
            if (a.round_trip) check("forward undoes inverse", [&] { return pp_to_tableau(pi) == t; }, tj.dump());
        }
    } else if (a.kind == "one-leg") {
        if (a.direction == "forward") {
            auto sigma = expect<OneLegSPP>(io::configuration_from_json(doc), "one_leg_spp");
            const Partition& l = sigma.shape;
            const int box = std::max({1, cell_extent(sigma.entries), l.largest(), l.length()});
            OneLegImage img = one_leg_forward(sigma, make_schedule(a.schedule, l, box));
            result = {{"rho", io::to_json(img.rho)}, {"pi", io::to_json(img.pi)}};
            weight_line({{"sigma", weight(sigma)}, {"rho", weight(img.rho)}, {"pi", weight(img.pi)}});
            if (a.round_trip) {
                check("inverse undoes forward", [&] { return one_leg_inverse(img.rho, img.pi) == sigma; }, doc.dump());
                check("weight identity", [&] { return weight(sigma) == weight(img.rho) + weight(img.pi); }, doc.dump());
            }
        } else {
            auto rho = expect<OneLegRPP>(io::configuration_from_json(doc.at("rho")), "one_leg_rpp");
            auto pi = expect<PlanePartition>(io::configuration_from_json(doc.at("pi")), "plane_partition");
            OneLegSPP sigma = one_leg_inverse(rho, pi);
            result = io::to_json(sigma);
            weight_line({{"rho", weight(rho)}, {"pi", weight(pi)}, {"sigma", weight(sigma)}});
            if (a.round_trip) check("forward undoes inverse", [&] { return one_leg_forward(sigma) == OneLegImage{rho, pi}; }, doc.dump());
        }
    } else {
        if (a.direction == "forward") {
            auto sigma = expect<TwoLegSPP>(io::configuration_from_json(doc), "two_leg_spp");
            TwoLegImage img = two_leg_forward(sigma);
            result = {{"rho", io::to_json(img.rho)}, {"pi", io::to_json(img.pi)}};
            r.add("stabilization_index", std::to_string(stabilization_index(sigma)), stabilization_index(sigma));
            weight_line({{"sigma", weight(sigma)}, {"rho", weight(img.rho)}, {"pi", weight(img.pi)}});
            if (a.round_trip) {
                check("inverse undoes forward", [&] { return two_leg_inverse(img.rho, img.pi) == sigma; }, doc.dump());
                check("weight identity", [&] { return weight(sigma) == weight(img.rho) + weight(img.pi); }, doc.dump());
            }
        } else {
            auto rho = expect<TwoLegRPP>(io::configuration_from_json(doc.at("rho")), "two_leg_rpp");
            auto pi = expect<PlanePartition>(io::configuration_from_json(doc.at("pi")), "plane_partition");
            TwoLegSPP sigma = two_leg_inverse(rho, pi);
            result = io::to_json(sigma);
            weight_line({{"rho", weight(rho)}, {"pi", weight(pi)}, {"sigma", weight(sigma)}});
            if (a.round_trip) check("forward undoes inverse", [&] { return two_leg_forward(sigma) == TwoLegImage{rho, pi}; }, doc.dump());
        }
    }
    if (a.random) r.add("input", doc.dump(), doc);
    if (!a.output.empty()) write_file(a.output, result.dump(2) + "\n");
    r.add("output", result.dump(), result);
    for (auto& c : checks) r.checks.push_back(std::move(c));
}

struct EnumerateArgs {
    std::string family, lambda, legs, output;
    int budget = 0;
    bool cross_check = false;
};

void cmd_enumerate(const EnumerateArgs& a, const Globals&, Report& r) {
    std::string name = a.family;
    std::replace(name.begin(), name.end(), '-', '_');
    FamilyDescriptor f{parse_family(name), {}, {}};
    if (f.kind == Family::one_leg_spp || f.kind == Family::one_leg_rpp) f.lambda = parse_partition(a.lambda);
    if (f.kind == Family::two_leg_spp || f.kind == Family::two_leg_rpp) std::tie(f.lambda, f.mu) = parse_legs(a.legs);
    auto configs = enum_configs(f, a.budget);
    WeightCensus census = census_of(f, a.budget, configs);
    r.add("family", io::to_json(f).dump(), io::to_json(f));
    r.add("bound", census.bound.to_string(), io::to_json(census.bound));
    r.add("total", std::to_string(configs.size()), configs.size());
    std::string counts;
    json cj = json::array();
    for (const auto& [w, n] : census.counts) {
        counts += "  q^" + w.to_string() + "  " + std::to_string(n) + "\n";
        cj.push_back({w.doubled, n});
    }
    r.add("counts", counts, cj);
    if (a.cross_check) {
        const bool sat = census_saturated(f, a.budget);
        r.checks.push_back({"census is saturated in its bounding box", sat, 1, sat ? "" : "box grown by one finds more"});
    }
    if (!a.output.empty()) {
        std::ostringstream s;
        io::write_census(s, f, a.budget, configs);
        write_file(a.output, s.str());
    }
}

struct ToggleArgs {
    std::string mode, lambda, nu, mu;
    int n = 0;
};

void cmd_toggle(const ToggleArgs& a, const Globals&, Report& r) {
    const Partition l = parse_partition(a.lambda), nu = parse_partition(a.nu), mu = parse_partition(a.mu);
    r.absorb(a.mode + l.to_string() + nu.to_string() + mu.to_string() + std::to_string(a.n));
    if (a.mode == "between") {
        Partition t = toggle_between(l, nu, mu);
        r.add("toggled", t.to_string(), io::to_json(t));
        r.checks.push_back({"toggling again restores ν", toggle_between(l, t, mu) == nu, 1, ""});
    } else if (a.mode == "pop") {
        ToggleResult t = toggle_pop(l, nu, mu);
        r.add("toggled", t.toggled.to_string(), io::to_json(t.toggled));
        r.add("popped", std::to_string(*t.popped), *t.popped);
        r.checks.push_back({"push restores ν", toggle_push(l, t.toggled, mu, *t.popped) == nu, 1, ""});
    } else if (a.mode == "push") {
        Partition t = toggle_push(l, nu, mu, a.n);
        r.add("toggled", t.to_string(), io::to_json(t));
        r.checks.push_back({"pop restores ν and n", toggle_pop(l, t, mu) == ToggleResult{nu, a.n}, 1, ""});
    } else {
        throw domain_error("toggle mode is between, pop or push");
    }
}

struct VerifyArgs {
    std::string suite, census, lambda, legs;
    int max_part = -1, max_length = -1, max_weight = -1, max_hook = -1, max_coord = -1, max_leg = -1, budget = -1,
        seeds = -1;
};

void cmd_verify(const VerifyArgs& a, const Globals& g, Report& r) {
    if (a.suite.empty() == a.census.empty()) throw domain_error("give exactly one of --suite and --census");
    if (!a.census.empty()) {
        std::istringstream in(read_input(a.census, r));
        io::CensusFile file = io::read_census(in);
        r.add("family", io::to_json(file.family).dump(), io::to_json(file.family));
        WeightCensus got = census_of(file.family, file.budget, file.configs);
        auto fresh = enum_configs(file.family, file.budget);
        WeightCensus want = census_of(file.family, file.budget, fresh);
        CheckResult c{"census file matches a fresh enumeration", fresh == file.configs,
                      static_cast<std::int64_t>(file.configs.size()), ""};
        if (!c.passed) {
            c.detail = "counts " + census_series(got).to_string() + " vs " + census_series(want).to_string();
            for (std::size_t k = 0; k < std::min(fresh.size(), file.configs.size()); ++k)
                if (!(fresh[k] == file.configs[k])) {
                    c.detail += "; first difference at record " + std::to_string(k + 1);
                    break;
                }
        }
        r.checks.push_back(c);
        return;
    }
    SuiteOptions o;
    auto set = [](std::optional<int>& field, int v) {
        if (v >= 0) field = v;
    };
    set(o.max_part, a.max_part);
    set(o.max_length, a.max_length);
    set(o.max_weight, a.max_weight);
    set(o.max_hook, a.max_hook);
    set(o.max_coord, a.max_coord);
    set(o.max_leg, a.max_leg);
    set(o.budget, a.budget);
    set(o.seeds, a.seeds);
    if (!g.degree.empty()) o.degree = HalfInteger::parse(g.degree);
    if (!a.lambda.empty()) o.lambda = parse_partition(a.lambda);
    if (!a.legs.empty()) std::tie(o.lambda, o.mu) = parse_legs(a.legs);
    o.seed = g.seed;
    r.add("suite", a.suite, a.suite);
    r.checks = run_suite(a.suite, o);
    if (r.checks.empty()) r.lines.emplace_back("result", "PASS (no checks)");
}

struct RenderArgs {
    std::string input, format = "ascii", output;
};

void cmd_render(const RenderArgs& a, const Globals&, Report& r) {
    json doc = io::parse(read_input(a.input, r));
    Configuration c = io::configuration_from_json(doc);
    if (a.format == "ascii") {
        std::string text = render_ascii(c);
        if (!a.output.empty()) write_file(a.output, text);
        r.add("grid", text, text);
    } else if (a.format == "svg") {
        if (a.output.empty()) throw domain_error("--render svg needs --output");
        write_file(a.output, render_svg(c));
        r.add("written", a.output, a.output);
    } else {
        throw domain_error("--render is ascii or svg");
    }
    r.add("weight", weight(c).to_string(), io::to_json(weight(c)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Toggle bijections, vertex-operator series and enumeration checks", "ptdt"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Print the report as JSON");
    app.add_option("--seed", g.seed, "Seed for random inputs and schedules");
    app.add_option("--degree", g.degree, "Degree bound, e.g. 6 or 13/2");

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "Evaluate a generating function");
    series->add_flag("--macmahon", sa.macmahon, "Plane partitions");
    series->add_option("--one-leg", sa.one_leg, "One-leg SPPs of shape λ");
    series->add_option("--two-leg", sa.two_leg, "Two-leg SPPs with legs λ/µ");
    series->add_flag("--rpp", sa.rpp, "Two-leg RPP series instead");
    series->add_flag("--product", sa.product, "Use the hook product instead of the operator word");
    series->add_flag("--cross-check", sa.cross_check, "Compare against the enumeration oracle or V = M·W");

    BijectArgs ba;
    auto* biject = app.add_subcommand("biject", "Run a bijection on a configuration");
    biject->add_option("kind", ba.kind, "plane, one-leg or two-leg")->required();
    biject->add_option("--direction", ba.direction, "forward or inverse");
    biject->add_option("--input", ba.input, "JSON file, or - for stdin");
    biject->add_option("--output", ba.output, "Write the result JSON here");
    biject->add_option("--schedule", ba.schedule, "off-diagonal, lexicographic or seeded:<n>");
    biject->add_option("--lambda", ba.lambda, "Shape for --random one-leg inputs");
    biject->add_option("--legs", ba.legs, "Legs λ/µ for --random two-leg inputs");
    biject->add_option("--weight", ba.weight, "Weight or excess bound for --random");
    biject->add_flag("--random", ba.random, "Use a seeded random input from the oracle");
    biject->add_flag("--round-trip", ba.round_trip, "Check the inverse and the weight identity");

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate a configuration family");
    enumerate->add_option("family", ea.family, "plane, one_leg_spp, one_leg_rpp, two_leg_spp, two_leg_rpp")->required();
    enumerate->add_option("--lambda", ea.lambda, "One-leg shape");
    enumerate->add_option("--legs", ea.legs, "Two-leg legs λ/µ");
    enumerate->add_option("--budget", ea.budget, "Weight bound, or excess/deficit bound for two-leg")->required();
    enumerate->add_option("--output", ea.output, "Write a JSON-lines census file");
    enumerate->add_flag("--cross-check", ea.cross_check, "Check that the bounding box is saturated");

    ToggleArgs ta;
    auto* toggle = app.add_subcommand("toggle", "Toggle one partition between two neighbours");
    toggle->add_option("mode", ta.mode, "between, pop or push")->required();
    toggle->add_option("--lambda", ta.lambda, "Left neighbour")->required();
    toggle->add_option("--nu", ta.nu, "Partition to toggle")->required();
    toggle->add_option("--mu", ta.mu, "Right neighbour")->required();
    toggle->add_option("--n", ta.n, "Value pushed by push");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run invariant suites or check a census file");
    verify->add_option("--suite", va.suite, "toggles, hooks, macmahon, ptdt-one-leg, ptdt-two-leg, bijections, schedules, none");
    verify->add_option("--census", va.census, "JSON-lines census file to re-check");
    verify->add_option("--max-part", va.max_part);
    verify->add_option("--max-length", va.max_length);
    verify->add_option("--max-weight", va.max_weight);
    verify->add_option("--max-hook", va.max_hook);
    verify->add_option("--max-coord", va.max_coord);
    verify->add_option("--max-leg", va.max_leg);
    verify->add_option("--budget", va.budget);
    verify->add_option("--seeds", va.seeds);
    verify->add_option("--lambda", va.lambda);
    verify->add_option("--legs", va.legs);

    RenderArgs ra;
    auto* render = app.add_subcommand("render", "Draw a configuration");
    render->add_option("--input", ra.input, "JSON file, or - for stdin")->required();
    render->add_option("--render", ra.format, "ascii or svg");
    render->add_option("--output", ra.output, "Output file (required for svg)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? ok : usage;
    }

    Report r;
    for (const auto& a : args) r.command += (r.command.empty() ? "" : " ") + a;
    r.absorb(r.command);
    int code = ok;
    try {
        if (*series) cmd_series(sa, g, r);
        else if (*biject) cmd_biject(ba, g, r);
        else if (*enumerate) cmd_enumerate(ea, g, r);
        else if (*toggle) cmd_toggle(ta, g, r);
        else if (*verify) cmd_verify(va, g, r);
        else if (*render) cmd_render(ra, g, r);
        if (!r.passed()) code = invariant_failure;
        print(r, g.json, out);
    } catch (const convergence_error& e) {
        err << "error: " << e.what() << '\n';
        code = no_convergence;
    } catch (const std::exception& e) {
        // Malformed input, schedules and resource limits are all usage errors.
        err << "error: " << e.what() << '\n';
        code = usage;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "wall time: " << std::fixed << std::setprecision(3) << secs << " s\n";
    return code;
}

}  // namespace ptdt::cli
