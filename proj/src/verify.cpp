#include "ptdt/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ptdt/bijections.hpp"
#include "ptdt/boundary.hpp"
#include "ptdt/configurations.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/io.hpp"
#include "ptdt/oracle.hpp"
#include "ptdt/series.hpp"
#include "ptdt/toggle.hpp"

namespace ptdt {

namespace {

HalfInteger I(std::int64_t n) { return HalfInteger::from_int(n); }

// Counts cases and keeps the first failure.
class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }

    template <class Describe>
    bool check(bool ok, Describe describe) {
        ++r_.cases;
        if (!ok && r_.passed) {
            r_.passed = false;
            r_.detail = describe();
        }
        return ok;
    }
    // Records an exception from the checked code as a failure.
    template <class Body, class Describe>
    void guard(Body body, Describe describe) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return describe() + ": " + e.what(); });
        }
    }
    void note(std::string detail) {
        if (r_.passed) r_.detail = std::move(detail);
    }
    CheckResult result() const { return r_; }

private:
    CheckResult r_;
};

std::string str(const Partition& p) { return p.to_string(); }
std::string str(const Configuration& c) { return io::to_json(c).dump(); }
std::string str(const TruncatedSeries& s) { return s.to_string(); }

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = 1; p <= cap; ++p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    rec(cols);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : enum_partitions(k)) out.push_back(std::move(p));
    return out;
}

int integer_degree(HalfInteger d) {
    if (!d.is_integer() || d < HalfInteger{}) throw domain_error("degree must be a nonnegative integer");
    return static_cast<int>(d.floor());
}

std::string diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    return "residual " + str(a - b);
}

// Same terms under a new bound; used where terms past the old bound cannot contribute.
TruncatedSeries rebound(const TruncatedSeries& s, HalfInteger bound) {
    TruncatedSeries out(bound);
    for (const auto& [e, c] : s.terms()) out.add_term(e, c);
    return out;
}

int extent(const CellMap& m) {
    int e = 0;
    for (const auto& [c, v] : m) e = std::max({e, c.row, c.col});
    return e;
}

// ---- toggles ----

std::vector<CheckResult> toggles_suite(const SuiteOptions& o) {
    const auto parts = partitions_in_box(o.max_length.value_or(4), o.max_part.value_or(4));
    Tally between_inv("toggle_between is an involution"), between_weight("same-sign weight law"),
        between_lace("toggle_between output interlaces"), pop_push("push undoes pop"), pop_weight("opposite-sign weight law"),
        pop_lace("toggle_pop output interlaces"), push_pop("pop undoes push");
    auto triple = [](const Partition& l, const Partition& nu, const Partition& mu) {
        return "λ=" + str(l) + " ν=" + str(nu) + " µ=" + str(mu);
    };
    for (const auto& l : parts)
        for (const auto& nu : parts)
            for (const auto& mu : parts) {
                if (interlaces(l, nu) && interlaces(nu, mu)) {
                    Partition t = toggle_between(l, nu, mu);
                    between_weight.check(t.weight() == l.weight() + mu.weight() - nu.weight(), [&] { return triple(l, nu, mu); });
                    between_lace.check(interlaces(l, t) && interlaces(t, mu), [&] { return triple(l, nu, mu); });
                    between_inv.check(toggle_between(l, t, mu) == nu, [&] { return triple(l, nu, mu); });
                }
                if (interlaces(nu, l) && interlaces(nu, mu)) {
                    ToggleResult r = toggle_pop(l, nu, mu);
                    const int n = r.popped.value_or(-1);
                    pop_lace.check(r.popped && n >= 0 && interlaces(l, r.toggled) && interlaces(mu, r.toggled),
                                   [&] { return triple(l, nu, mu); });
                    pop_weight.check(r.toggled.weight() == l.weight() + mu.weight() - nu.weight() + n,
                                     [&] { return triple(l, nu, mu); });
                    pop_push.check(n >= 0 && toggle_push(l, r.toggled, mu, n) == nu, [&] { return triple(l, nu, mu); });
                }
                // Here nu plays the role of the toggled partition under both neighbours.
                if (interlaces(l, nu) && interlaces(mu, nu)) {
                    for (int n = 0; n <= 2; ++n) {
                        Partition up = toggle_push(l, nu, mu, n);
                        push_pop.check(toggle_pop(l, up, mu) == ToggleResult{nu, n},
                                       [&] { return triple(l, nu, mu) + " n=" + std::to_string(n); });
                    }
                }
            }

    Tally corner("corner removal lemma"), hook_edge("hook-edge identity");
    const int w = o.max_weight.value_or(10);
    for (const auto& l : partitions_up_to(w)) {
        for (Cell c : inner_corners(l)) {
            const std::int64_t k = c.col - c.row;
            corner.check(edge_power(remove_cell(l, c), k - 1) == edge_power(l, k) + I(1),
                         [&] { return "λ=" + str(l) + " corner (" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; });
        }
        for (int i = 1; i <= 10; ++i)
            for (int j = 1; j <= 10; ++j) {
                HookEdges e = hook_edges(l, {i, j});
                HalfInteger sum = edge_power(l, e.vertical) + edge_power(l, e.horizontal);
                HalfInteger want = contains(l, {i, j}) ? I(-hook_length(l, {i, j}, HookRegion::inside))
                                                       : I(hook_length(l, {i, j}, HookRegion::outside));
                hook_edge.check(sum == want, [&] {
                    return "λ=" + str(l) + " cell (" + std::to_string(i) + "," + std::to_string(j) + ")";
                });
            }
    }
    return {between_inv.result(), between_weight.result(), between_lace.result(), pop_push.result(),
            push_pop.result(),    pop_weight.result(),     pop_lace.result(),     corner.result(),
            hook_edge.result()};
}

// ---- hooks ----

std::vector<CheckResult> hooks_suite(const SuiteOptions& o) {
    const int w = o.max_weight.value_or(10), max_n = o.max_hook.value_or(8), coord = o.max_coord.value_or(30);
    Tally census("n-hooks outside λ number n plus those inside"), preserve("phi preserves hook length"),
        injective("phi is injective"), onto("phi reaches every target pivot"), inverse("phi_inverse undoes phi");
    for (const auto& l : partitions_up_to(w))
        for (int n = 1; n <= max_n; ++n) {
            auto where = [&] { return "λ=" + str(l) + " n=" + std::to_string(n); };
            std::set<std::pair<int, Cell>> images;
            int outside = 0;
            for (int i = 1; i <= coord; ++i)
                for (int j = 1; j <= coord; ++j) {
                    Cell b{i, j};
                    if (contains(l, b) || hook_length(l, b, HookRegion::outside) != n) continue;
                    ++outside;
                    PhiTarget t = phi(l, b);
                    const bool in_plane = t.region == PhiRegion::in_plane;
                    const int h = in_plane ? t.cell.row + t.cell.col - 1
                                           : (contains(l, t.cell) ? hook_length(l, t.cell, HookRegion::inside) : -1);
                    preserve.check(h == n && t.cell.row >= 1 && t.cell.col >= 1, [&] {
                        return where() + " pivot (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    });
                    images.insert({static_cast<int>(t.region), t.cell});
                    bool back = false;
                    try {
                        back = phi_inverse(l, t) == b;
                    } catch (const std::exception&) {
                    }
                    inverse.check(back, [&] { return where() + " pivot (" + std::to_string(i) + "," + std::to_string(j) + ")"; });
                }
            int inside = 0;
            for (Cell c : cells(l)) inside += hook_length(l, c, HookRegion::inside) == n;
            census.check(outside == n + inside, [&] {
                return where() + ": " + std::to_string(outside) + " outside vs " + std::to_string(inside) + " inside";
            });
            injective.check(static_cast<int>(images.size()) == outside, where);
            // Targets are the n pivots of ℕ² on the n-th antidiagonal plus the n-hooks of λ.
            onto.check(static_cast<int>(images.size()) == n + inside, where);
        }
    return {census.result(), preserve.result(), injective.result(), onto.result(), inverse.result()};
}

// ---- series identities ----

TruncatedSeries macmahon_word(HalfInteger d) { return evaluate_shape({ShapeKind::one_leg, {}, {}}, d); }

std::vector<CheckResult> macmahon_suite(const SuiteOptions& o) {
    const HalfInteger d = o.degree.value_or(I(12));
    const int deg = integer_degree(d);
    const TruncatedSeries word = macmahon_word(d);
    const TruncatedSeries product = hook_product(ProductRegion::plane, {}, d);
    const WeightCensus census = take_census({Family::plane, {}, {}}, deg);
    const TruncatedSeries counted = census_series(census);
    Tally a("operator word equals hook product"), b("hook product equals plane-partition census"),
        c("word coefficients equal weight-class counts");
    a.check(word == product, [&] { return diff(word, product); });
    b.check(product == counted, [&] { return diff(product, counted); });
    for (int k = 0; k <= deg; ++k) {
        auto it = census.counts.find(I(k));
        const std::int64_t count = it == census.counts.end() ? 0 : it->second;
        c.check(word.coefficient(I(k)) == count, [&] {
            return "q^" + std::to_string(k) + ": word " + word.coefficient(I(k)).str() + " vs count " + std::to_string(count);
        });
    }
    a.note(word.to_string());
    return {a.result(), b.result(), c.result()};
}

std::vector<CheckResult> one_leg_suite(const SuiteOptions& o) {
    const HalfInteger d = o.degree.value_or(I(10));
    const int deg = integer_degree(d);
    std::vector<Partition> shapes;
    if (o.lambda) shapes = {*o.lambda};
    else shapes = {Partition({1}), Partition({2, 1}), Partition({2, 2}), Partition({3, 1}), Partition({3, 2, 1})};
    const TruncatedSeries m = census_series(take_census({Family::plane, {}, {}}, deg));
    Tally census("SPP census equals M times RPP census"), word("SPP census equals the one-leg operator word");
    for (const auto& l : shapes) {
        TruncatedSeries v = census_series(take_census({Family::one_leg_spp, l, {}}, deg));
        TruncatedSeries w = census_series(take_census({Family::one_leg_rpp, l, {}}, deg));
        TruncatedSeries mw = series_mul(m, w);
        census.check(v == mw, [&] { return "λ=" + str(l) + " " + diff(v, mw); });
        TruncatedSeries e = evaluate_shape({ShapeKind::one_leg, l, {}}, d);
        word.check(v == e, [&] { return "λ=" + str(l) + " " + diff(v, e); });
    }
    return {census.result(), word.result()};
}

std::vector<std::pair<Partition, Partition>> leg_pairs(const SuiteOptions& o, int max_leg) {
    if (o.lambda || o.mu) return {{o.lambda.value_or(Partition{}), o.mu.value_or(Partition{})}};
    auto legs = partitions_up_to(max_leg);
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& l : legs)
        for (const auto& mu : legs) out.emplace_back(l, mu);
    return out;
}

std::vector<CheckResult> two_leg_suite(const SuiteOptions& o) {
    const HalfInteger d = o.degree.value_or(I(6));
    const int budget = o.budget.value_or(5);
    Tally identity("V = M·W"), spp("two-leg SPP census matches V"), rpp("two-leg RPP census matches W");
    for (const auto& [l, mu] : leg_pairs(o, o.max_leg.value_or(3))) {
        auto where = [&] { return "legs " + str(l) + "/" + str(mu); };
        const TruncatedSeries v = evaluate_shape({ShapeKind::two_leg_spp, l, mu}, d);
        const TruncatedSeries w = evaluate_shape({ShapeKind::two_leg_rpp, l, mu}, d);
        const TruncatedSeries mw = series_mul(hook_product(ProductRegion::plane, {}, d), w);
        identity.check(v == mw, [&] { return where() + " " + diff(v, mw); });

        const TruncatedSeries sc = census_series(take_census({Family::two_leg_spp, l, mu}, budget));
        const TruncatedSeries sv = evaluate_shape({ShapeKind::two_leg_spp, l, mu}, sc.bound());
        spp.check(sc == sv, [&] { return where() + " " + diff(sc, sv); });
        const TruncatedSeries rc = census_series(take_census({Family::two_leg_rpp, l, mu}, budget));
        const TruncatedSeries rw = evaluate_shape({ShapeKind::two_leg_rpp, l, mu}, rc.bound());
        rpp.check(rc == rw, [&] { return where() + " " + diff(rc, rw); });
    }
    return {identity.result(), spp.result(), rpp.result()};
}

// ---- bijections ----

// Image weight classes against the product of the two target censuses.
void check_class_counts(Tally& t, const std::map<HalfInteger, std::int64_t>& image, const TruncatedSeries& expected,
                        const std::string& where) {
    TruncatedSeries got(expected.bound());
    for (const auto& [w, n] : image) got.add_term(w, n);
    t.check(got == expected, [&] { return where + " " + diff(got, expected); });
}

std::vector<CheckResult> bijections_suite(const SuiteOptions& o) {
    const int w = o.max_weight.value_or(8);
    const int budget = o.budget.value_or(5);
    const Partition one_leg = o.lambda.value_or(Partition({2, 1}));
    const Partition two_l = o.lambda.value_or(Partition({2})), two_mu = o.mu.value_or(Partition({1}));

    Tally round("inverse undoes forward"), weight_law("weight is conserved"), valid("images are valid"),
        injective("forward map is injective"), classes("weight classes match the product census");

    // Plane partitions ↔ hook tableaux on ℕ².
    {
        std::set<CellMap> seen;
        std::map<HalfInteger, std::int64_t> image;
        const auto all = enum_configs({Family::plane, {}, {}}, w);
        for (const auto& c : all) {
            const auto& pi = std::get<PlanePartition>(c);
            round.guard(
                [&] {
                    HookTableau t = pp_to_tableau(pi);
                    weight_law.check(weight(t) == weight(pi), [&] { return str(c); });
                    round.check(tableau_to_pp(t) == pi, [&] { return str(c); });
                    seen.insert(t.values);
                    ++image[weight(t)];
                },
                [&] { return str(c); });
        }
        injective.check(seen.size() == all.size(), [] { return std::string("plane partitions"); });
        check_class_counts(classes, image, hook_product(ProductRegion::plane, {}, I(w)), "plane partitions");
    }

    // One-leg SPPs ↔ (RPP, plane partition).
    {
        std::set<std::pair<CellMap, CellMap>> seen;
        std::map<HalfInteger, std::int64_t> image;
        const auto all = enum_configs({Family::one_leg_spp, one_leg, {}}, w);
        for (const auto& c : all) {
            const auto& sigma = std::get<OneLegSPP>(c);
            round.guard(
                [&] {
                    OneLegImage img = one_leg_forward(sigma);
                    bool ok = true;
                    try {
                        validate(img.rho);
                        validate(img.pi);
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    valid.check(ok && img.rho.shape == one_leg, [&] { return str(c); });
                    HalfInteger total = weight(img.rho) + weight(img.pi);
                    weight_law.check(total == weight(sigma), [&] { return str(c); });
                    round.check(one_leg_inverse(img.rho, img.pi) == sigma, [&] { return str(c); });
                    seen.insert({img.rho.entries, img.pi.entries});
                    ++image[total];
                },
                [&] { return str(c); });
        }
        injective.check(seen.size() == all.size(), [&] { return "one-leg " + str(one_leg); });
        TruncatedSeries expected =
            series_mul(census_series(take_census({Family::one_leg_rpp, one_leg, {}}, w)),
                       census_series(take_census({Family::plane, {}, {}}, w)));
        check_class_counts(classes, image, expected, "one-leg " + str(one_leg));
    }

    // Two-leg SPPs ↔ (two-leg RPP, plane partition).
    {
        const FamilyDescriptor spp{Family::two_leg_spp, two_l, two_mu};
        const HalfInteger bound = base_weight(spp) + I(budget);
        const HalfInteger w0 = minimal_weight_rpp(two_l, two_mu);
        const int rest = static_cast<int>((bound - w0).floor());
        std::set<std::pair<CellMap, CellMap>> seen;
        std::map<HalfInteger, std::int64_t> image;
        const auto all = enum_configs(spp, budget);
        for (const auto& c : all) {
            const auto& sigma = std::get<TwoLegSPP>(c);
            round.guard(
                [&] {
                    TwoLegImage img = two_leg_forward(sigma);
                    bool ok = true;
                    try {
                        validate(img.rho);
                        validate(img.pi);
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    valid.check(ok && img.rho.lambda == two_l && img.rho.mu == two_mu, [&] { return str(c); });
                    HalfInteger total = weight(img.rho) + weight(img.pi);
                    weight_law.check(total == weight(sigma), [&] { return str(c); });
                    round.check(two_leg_inverse(img.rho, img.pi) == sigma, [&] { return str(c); });
                    seen.insert({img.rho.deficit, img.pi.entries});
                    ++image[total];
                },
                [&] { return str(c); });
        }
        const std::string where = "two-leg " + str(two_l) + "/" + str(two_mu);
        injective.check(seen.size() == all.size(), [&] { return where; });
        // Plane parts heavier than `rest` push the pair past the bound.
        const HalfInteger exact = w0 + I(rest);
        TruncatedSeries expected =
            series_mul(census_series(take_census({Family::two_leg_rpp, two_l, two_mu}, rest)),
                       rebound(census_series(take_census({Family::plane, {}, {}}, rest)), exact));
        if (exact < bound) throw domain_error("two-leg class counts need W_0 of the RPP side at most V_0");
        check_class_counts(classes, image, expected, where);
    }
    return {round.result(), weight_law.result(), valid.result(), injective.result(), classes.result()};
}

// ---- schedules ----

std::vector<CheckResult> schedules_suite(const SuiteOptions& o) {
    const int w = o.max_weight.value_or(8);
    const int seeds = o.seeds.value_or(20);
    const Partition one_leg = o.lambda.value_or(Partition({2, 1}));
    Tally plane("plane-partition tableau is schedule independent"), spp("one-leg image is schedule independent");

    auto schedules = [&](const Partition& start, int box) {
        std::vector<ToggleSchedule> out{off_diagonal_schedule(start, box), lexicographic_schedule(start, box)};
        for (int k = 0; k < seeds; ++k) out.push_back(random_schedule(start, box, o.seed + static_cast<std::uint64_t>(k)));
        return out;
    };
    for (const auto& c : enum_configs({Family::plane, {}, {}}, w)) {
        const auto& pi = std::get<PlanePartition>(c);
        const HookTableau ref = pp_to_tableau(pi);
        for (const auto& s : schedules({}, std::max(1, extent(pi.entries))))
            plane.guard([&] { plane.check(pp_to_tableau(pi, s) == ref, [&] { return str(c); }); },
                        [&] { return str(c); });
    }
    for (const auto& c : enum_configs({Family::one_leg_spp, one_leg, {}}, w)) {
        const auto& sigma = std::get<OneLegSPP>(c);
        const OneLegImage ref = one_leg_forward(sigma);
        const int box = std::max({1, extent(sigma.entries), one_leg.largest(), one_leg.length()});
        for (const auto& s : schedules(one_leg, box))
            spp.guard([&] { spp.check(one_leg_forward(sigma, s) == ref, [&] { return str(c); }); },
                      [&] { return str(c); });
    }
    return {plane.result(), spp.result()};
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"toggles", "hooks", "macmahon", "ptdt-one-leg", "ptdt-two-leg", "bijections", "schedules", "none"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options) {
    if (suite == "toggles") return toggles_suite(options);
    if (suite == "hooks") return hooks_suite(options);
    if (suite == "macmahon") return macmahon_suite(options);
    if (suite == "ptdt-one-leg") return one_leg_suite(options);
    if (suite == "ptdt-two-leg") return two_leg_suite(options);
    if (suite == "bijections") return bijections_suite(options);
    if (suite == "schedules") return schedules_suite(options);
    if (suite == "none") return {};
    throw domain_error("unknown suite '" + suite + "'");
}

}  // namespace ptdt
