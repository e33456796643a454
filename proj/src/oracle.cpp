#include "ptdt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ptdt/errors.hpp"

namespace ptdt {

namespace {

constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::max() / 4;

// One cell of a fill. Its value v costs |v - base| and moves away from base in
// direction dir. Neighbours already filled bound v from above (upper) or below.
struct Slot {
    Cell cell;
    std::int64_t base = 0;
    int dir = +1;
    bool upper = true;
    std::vector<std::size_t> filled;     // indices of earlier slots
    std::vector<std::int64_t> constant;  // neighbours outside the box
};

class Filler {
public:
    Filler(std::vector<Slot> slots, int budget) : slots_(std::move(slots)), budget_(budget), values_(slots_.size()) {}

    std::vector<CellMap> run() {
        rec(0, budget_);
        return std::move(out_);
    }

private:
    void rec(std::size_t k, std::int64_t remaining) {
        if (k == slots_.size()) {
            CellMap m;
            for (std::size_t i = 0; i < slots_.size(); ++i) {
                std::int64_t cost = (values_[i] - slots_[i].base) * slots_[i].dir;
                if (cost != 0) m[slots_[i].cell] = cost;
            }
            out_.push_back(std::move(m));
            return;
        }
        const Slot& s = slots_[k];
        std::int64_t bound = s.upper ? unbounded : 0;
        auto fold = [&](std::int64_t v) { bound = s.upper ? std::min(bound, v) : std::max(bound, v); };
        for (std::size_t i : s.filled) fold(values_[i]);
        for (std::int64_t v : s.constant) fold(v);
        for (std::int64_t cost = 0; cost <= remaining; ++cost) {
            std::int64_t v = s.base + s.dir * cost;
            if (v < 0) break;
            bool ok = s.upper ? v <= bound : v >= bound;
            if (!ok) {
                // Moving further from base only helps when it moves toward the bound.
                if ((s.upper && s.dir > 0) || (!s.upper && s.dir < 0)) break;
                continue;
            }
            values_[k] = v;
            rec(k + 1, remaining - cost);
        }
    }

    std::vector<Slot> slots_;
    int budget_;
    std::vector<std::int64_t> values_;
    std::vector<CellMap> out_;
};

// Row-major slots over a rectangle, reading up and left neighbours; cells
// rejected by `keep` are skipped and act through `outside`.
template <class Keep, class Base, class Outside>
std::vector<Slot> forward_slots(int rows, int cols, bool upper, Keep keep, Base base, Outside outside) {
    std::vector<Slot> slots;
    std::map<Cell, std::size_t> index;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            Cell c{i, j};
            if (!keep(c)) continue;
            Slot s{c, base(c), +1, upper, {}, {}};
            for (Cell nb : {Cell{i - 1, j}, Cell{i, j - 1}}) {
                auto it = index.find(nb);
                if (it != index.end()) s.filled.push_back(it->second);
                else s.constant.push_back(outside(nb));
            }
            index[c] = slots.size();
            slots.push_back(std::move(s));
        }
    return slots;
}

void check_budget(const FamilyDescriptor& f, int budget) {
    const bool two_leg = f.kind == Family::two_leg_spp || f.kind == Family::two_leg_rpp;
    const int limit = two_leg ? max_two_leg_budget : max_single_weight;
    if (budget > limit)
        throw resource_error("enumeration budget " + std::to_string(budget) + " exceeds " + std::to_string(limit) +
                             " for " + family_name(f.kind));
}

std::vector<Slot> family_slots(const FamilyDescriptor& f, int budget, int slack) {
    const Partition& lambda = f.lambda;
    const Partition& mu = f.mu;
    const int W = budget + slack;
    switch (f.kind) {
        case Family::plane:
            return forward_slots(W, W, true, [](Cell) { return true; }, [](Cell) { return 0; },
                                 [](Cell) { return unbounded; });
        case Family::one_leg_spp: {
            // An entry in row i > λ'_1 forces i - λ'_1 positive entries above it.
            const int rows = conjugate(lambda).largest() + W;
            const int cols = lambda.largest() + W;
            return forward_slots(rows, cols, true, [&](Cell c) { return !contains(lambda, c); },
                                 [](Cell) { return 0; }, [](Cell) { return unbounded; });
        }
        case Family::one_leg_rpp:
            return forward_slots(lambda.length(), lambda.largest(), false,
                                 [&](Cell c) { return contains(lambda, c); }, [](Cell) { return 0; },
                                 [](Cell) { return std::int64_t{0}; });
        case Family::two_leg_spp: {
            auto base = [&](Cell c) { return std::int64_t{std::max(lambda.part(c.col), mu.part(c.row))}; };
            return forward_slots(mu.length() + W, lambda.length() + W, true, [](Cell) { return true; }, base,
                                 [](Cell) { return unbounded; });
        }
        case Family::two_leg_rpp: {
            // A deficit at (i, j) with i <= 0 forces deficits at (i..0, j), so i >= 1 - budget.
            TwoLegRPP cap_of{lambda, mu, {}};
            const int lo = 1 - W;
            const int rows = mu.length() + slack;
            const int cols = lambda.length() + slack;
            auto in_box = [&](Cell c) {
                return TwoLegRPP::in_domain(c) && c.row >= lo && c.row <= rows && c.col >= lo && c.col <= cols;
            };
            std::vector<Slot> slots;
            std::map<Cell, std::size_t> index;
            for (int i = rows; i >= lo; --i)
                for (int j = cols; j >= lo; --j) {
                    Cell c{i, j};
                    if (!in_box(c)) continue;
                    Slot s{c, cap_of.cap(c), -1, false, {}, {}};
                    for (Cell nb : {Cell{i + 1, j}, Cell{i, j + 1}}) {
                        if (!TwoLegRPP::in_domain(nb)) continue;
                        auto it = index.find(nb);
                        if (it != index.end()) s.filled.push_back(it->second);
                        else s.constant.push_back(cap_of.cap(nb));
                    }
                    index[c] = slots.size();
                    slots.push_back(std::move(s));
                }
            return slots;
        }
    }
    return {};
}

Configuration make_config(const FamilyDescriptor& f, CellMap m) {
    switch (f.kind) {
        case Family::plane: return PlanePartition{std::move(m)};
        case Family::one_leg_spp: return OneLegSPP{f.lambda, std::move(m)};
        case Family::one_leg_rpp: return OneLegRPP{f.lambda, std::move(m)};
        case Family::two_leg_spp: return TwoLegSPP{f.lambda, f.mu, std::move(m)};
        case Family::two_leg_rpp: return TwoLegRPP{f.lambda, f.mu, std::move(m)};
    }
    return PlanePartition{};
}

std::int64_t total(const CellMap& m) {
    std::int64_t t = 0;
    for (const auto& [c, v] : m) t += v;
    return t;
}

// The cost map of the fill: entries for plane and one-leg families, excess or deficit otherwise.
const CellMap& cost_map(const Configuration& c) {
    return std::visit(
        [](const auto& x) -> const CellMap& {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TwoLegSPP>) return x.excess;
            else if constexpr (std::is_same_v<T, TwoLegRPP>) return x.deficit;
            else if constexpr (std::is_same_v<T, HookTableau>) return x.values;
            else return x.entries;
        },
        c);
}

bool belongs(const FamilyDescriptor& f, const Configuration& c) {
    switch (f.kind) {
        case Family::plane: return std::holds_alternative<PlanePartition>(c);
        case Family::one_leg_spp:
            return std::holds_alternative<OneLegSPP>(c) && std::get<OneLegSPP>(c).shape == f.lambda;
        case Family::one_leg_rpp:
            return std::holds_alternative<OneLegRPP>(c) && std::get<OneLegRPP>(c).shape == f.lambda;
        case Family::two_leg_spp: {
            auto* s = std::get_if<TwoLegSPP>(&c);
            return s && s->lambda == f.lambda && s->mu == f.mu;
        }
        case Family::two_leg_rpp: {
            auto* r = std::get_if<TwoLegRPP>(&c);
            return r && r->lambda == f.lambda && r->mu == f.mu;
        }
    }
    return false;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::plane: return "plane";
        case Family::one_leg_spp: return "one_leg_spp";
        case Family::one_leg_rpp: return "one_leg_rpp";
        case Family::two_leg_spp: return "two_leg_spp";
        case Family::two_leg_rpp: return "two_leg_rpp";
    }
    return "";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::plane, Family::one_leg_spp, Family::one_leg_rpp, Family::two_leg_spp,
                     Family::two_leg_rpp})
        if (family_name(f) == name) return f;
    throw domain_error("unknown family '" + name + "'");
}

std::vector<Partition> enum_partitions(int n) {
    if (n < 0) throw domain_error("cannot enumerate partitions of a negative number");
    if (n > max_partition_weight)
        throw resource_error("partition enumeration is limited to weight " + std::to_string(max_partition_weight));
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            raw.push_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(left, cap); ++p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(raw.begin(), raw.end());
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

HalfInteger base_weight(const FamilyDescriptor& family) {
    switch (family.kind) {
        case Family::two_leg_spp: return minimal_weight_spp(family.lambda, family.mu);
        case Family::two_leg_rpp: return minimal_weight_rpp(family.lambda, family.mu);
        default: return HalfInteger{};
    }
}

std::vector<Configuration> enum_configs(const FamilyDescriptor& family, int budget, int slack) {
    check_budget(family, budget);
    if (budget < 0) return {};
    std::vector<CellMap> maps = Filler(family_slots(family, budget, slack), budget).run();
    std::sort(maps.begin(), maps.end(), [](const CellMap& a, const CellMap& b) {
        std::int64_t ta = total(a), tb = total(b);
        return ta != tb ? ta < tb : a < b;
    });
    std::vector<Configuration> out;
    out.reserve(maps.size());
    for (auto& m : maps) out.push_back(make_config(family, std::move(m)));
    return out;
}

WeightCensus census_of(const FamilyDescriptor& family, int budget, const std::vector<Configuration>& configs) {
    WeightCensus c{family, budget, base_weight(family) + HalfInteger::from_int(budget), {}};
    const HalfInteger base = c.bound - HalfInteger::from_int(budget);
    for (const Configuration& x : configs) {
        if (!belongs(family, x)) throw domain_error("configuration of type " + type_name(x) + " is not in the family");
        std::int64_t t = total(cost_map(x));
        if (t > budget) throw domain_error("configuration exceeds the census budget");
        ++c.counts[base + HalfInteger::from_int(t)];
    }
    return c;
}

WeightCensus take_census(const FamilyDescriptor& family, int budget) {
    return census_of(family, budget, enum_configs(family, budget));
}

TruncatedSeries census_series(const WeightCensus& census) {
    TruncatedSeries s(census.bound);
    for (const auto& [w, n] : census.counts) s.add_term(w, n);
    return s;
}

bool census_saturated(const FamilyDescriptor& family, int budget) {
    return enum_configs(family, budget).size() == enum_configs(family, budget, 1).size();
}

}  // namespace ptdt
