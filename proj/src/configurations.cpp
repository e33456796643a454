#include "ptdt/configurations.hpp"

#include <algorithm>
#include <limits>

#include "ptdt/errors.hpp"
#include "ptdt/series.hpp"

namespace ptdt {

namespace {

std::int64_t lookup(const CellMap& m, Cell c) {
    auto it = m.find(c);
    return it == m.end() ? 0 : it->second;
}

std::string cell_str(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

void require_positive(const CellMap& m, const char* what) {
    for (const auto& [c, v] : m)
        if (v <= 0) throw domain_error(std::string(what) + " at " + cell_str(c) + " must be positive");
}

void require_quadrant(const CellMap& m, const char* what) {
    for (const auto& [c, v] : m)
        if (c.row < 1 || c.col < 1) throw domain_error(std::string(what) + " at " + cell_str(c) + " is outside ℕ²");
}

std::int64_t sum_values(const CellMap& m) {
    std::int64_t s = 0;
    for (const auto& [c, v] : m) s += v;
    return s;
}

// Largest |row| or |col| among stored cells.
int extent(const CellMap& m) {
    int e = 0;
    for (const auto& [c, v] : m) e = std::max({e, std::abs(c.row), std::abs(c.col)});
    return e;
}

Partition read_decreasing(std::int64_t start_row, std::int64_t n, const auto& value_at) {
    std::vector<int> parts;
    for (std::int64_t i = start_row;; ++i) {
        std::int64_t v = value_at(Cell{static_cast<int>(i), static_cast<int>(i + n)});
        if (v == 0) break;
        parts.push_back(static_cast<int>(v));
    }
    return Partition(std::move(parts));
}

HalfInteger minimal_weight(ShapeKind kind, const Partition& lambda, const Partition& mu) {
    Shape shape{kind, lambda, mu};
    const int cutoff = minimal_cutoff(shape);
    OperatorWord word = shape_word(shape, cutoff);
    std::vector<Partition> states;
    if (kind == ShapeKind::two_leg_spp) {
        TwoLegSPP s{lambda, mu, {}};
        for (int d = -cutoff; d <= cutoff + 1; ++d) states.push_back(diagonal(s, d));
    } else {
        TwoLegRPP r{lambda, mu, {}};
        for (int d = -cutoff; d <= cutoff + 1; ++d) states.push_back(diagonal(r, d));
    }
    return word_exponent(word, states);
}

}  // namespace

CellMap without_zeros(CellMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}

std::int64_t PlanePartition::value(Cell c) const { return lookup(entries, c); }

PlanePartition PlanePartition::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    PlanePartition p;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0) p.entries[{static_cast<int>(i + 1), static_cast<int>(j + 1)}] = rows[i][j];
    return p;
}

std::int64_t OneLegSPP::value(Cell c) const { return lookup(entries, c); }
std::int64_t OneLegRPP::value(Cell c) const { return lookup(entries, c); }

std::int64_t TwoLegSPP::minimal_value(Cell c) const { return std::max(lambda.part(c.col), mu.part(c.row)); }
std::int64_t TwoLegSPP::value(Cell c) const { return minimal_value(c) + lookup(excess, c); }

std::int64_t TwoLegRPP::cap(Cell c) const {
    if (!in_domain(c)) throw domain_error("cell " + cell_str(c) + " is outside the two-leg RPP domain");
    if (c.row <= 0) return lambda.part(c.col);
    if (c.col <= 0) return mu.part(c.row);
    return std::min(lambda.part(c.col), mu.part(c.row));
}
std::int64_t TwoLegRPP::value(Cell c) const { return cap(c) - lookup(deficit, c); }

int HookTableau::hook(Cell c) const {
    switch (region) {
        case TableauRegion::plane:
            if (c.row < 1 || c.col < 1) throw domain_error("cell " + cell_str(c) + " is outside ℕ²");
            return c.row + c.col - 1;
        case TableauRegion::inside:
            return hook_length(shape, c, HookRegion::inside);
        case TableauRegion::outside:
            return hook_length(shape, c, HookRegion::outside);
    }
    return 0;
}

void validate(const PlanePartition& p) {
    require_positive(p.entries, "entry");
    require_quadrant(p.entries, "entry");
    for (const auto& [c, v] : p.entries) {
        if (c.row > 1 && p.value({c.row - 1, c.col}) < v)
            throw domain_error("entry at " + cell_str(c) + " exceeds the entry above it");
        if (c.col > 1 && p.value({c.row, c.col - 1}) < v)
            throw domain_error("entry at " + cell_str(c) + " exceeds the entry left of it");
    }
}

void validate(const OneLegSPP& s) {
    require_positive(s.entries, "entry");
    require_quadrant(s.entries, "entry");
    for (const auto& [c, v] : s.entries) {
        if (contains(s.shape, c)) throw domain_error("entry at " + cell_str(c) + " lies inside the shape");
        Cell up{c.row - 1, c.col}, left{c.row, c.col - 1};
        if (up.row >= 1 && !contains(s.shape, up) && s.value(up) < v)
            throw domain_error("entry at " + cell_str(c) + " exceeds the entry above it");
        if (left.col >= 1 && !contains(s.shape, left) && s.value(left) < v)
            throw domain_error("entry at " + cell_str(c) + " exceeds the entry left of it");
    }
}

void validate(const OneLegRPP& r) {
    require_positive(r.entries, "entry");
    for (const auto& [c, v] : r.entries)
        if (!contains(r.shape, c)) throw domain_error("entry at " + cell_str(c) + " lies outside the shape");
    for (Cell c : cells(r.shape)) {
        if (c.row > 1 && r.value({c.row - 1, c.col}) > r.value(c))
            throw domain_error("entry at " + cell_str(c) + " is below the entry above it");
        if (c.col > 1 && r.value({c.row, c.col - 1}) > r.value(c))
            throw domain_error("entry at " + cell_str(c) + " is below the entry left of it");
    }
}

void validate(const TwoLegSPP& s) {
    require_positive(s.excess, "excess");
    require_quadrant(s.excess, "excess");
    const int box = std::max({extent(s.excess), s.lambda.length(), s.mu.length()}) + 1;
    for (int i = 1; i <= box; ++i)
        for (int j = 1; j <= box; ++j) {
            if (s.value({i, j}) < s.value({i + 1, j}) || s.value({i, j}) < s.value({i, j + 1}))
                throw domain_error("plane partition inequality fails at " + cell_str({i, j}));
        }
}

void validate(const TwoLegRPP& r) {
    require_positive(r.deficit, "deficit");
    for (const auto& [c, v] : r.deficit) {
        if (!TwoLegRPP::in_domain(c)) throw domain_error("deficit at " + cell_str(c) + " is outside the domain");
        if (v > r.cap(c)) throw domain_error("deficit at " + cell_str(c) + " makes the entry negative");
    }
    const int e = extent(r.deficit) + 1;
    const int rows = std::max(e, r.mu.length() + 1);
    const int cols = std::max(e, r.lambda.length() + 1);
    for (int i = -e; i <= rows; ++i)
        for (int j = -e; j <= cols; ++j) {
            Cell c{i, j};
            if (!TwoLegRPP::in_domain(c)) continue;
            Cell down{i + 1, j}, right{i, j + 1};
            if (TwoLegRPP::in_domain(down) && r.value(c) < r.value(down))
                throw domain_error("entry at " + cell_str(c) + " is smaller than the entry below it");
            if (TwoLegRPP::in_domain(right) && r.value(c) < r.value(right))
                throw domain_error("entry at " + cell_str(c) + " is smaller than the entry right of it");
        }
}

void validate(const HookTableau& t) {
    require_positive(t.values, "value");
    require_quadrant(t.values, "value");
    for (const auto& [c, v] : t.values) {
        if (t.region == TableauRegion::inside && !contains(t.shape, c))
            throw domain_error("value at " + cell_str(c) + " lies outside the shape");
        if (t.region == TableauRegion::outside && contains(t.shape, c))
            throw domain_error("value at " + cell_str(c) + " lies inside the shape");
    }
}

void validate(const Configuration& c) {
    std::visit([](const auto& x) { validate(x); }, c);
}

Partition diagonal(const PlanePartition& p, std::int64_t n) {
    return read_decreasing(std::max<std::int64_t>(1, 1 - n), n, [&](Cell c) { return p.value(c); });
}

Partition diagonal(const OneLegSPP& s, std::int64_t n) {
    std::int64_t i = std::max<std::int64_t>(1, 1 - n);
    while (contains(s.shape, {static_cast<int>(i), static_cast<int>(i + n)})) ++i;
    return read_decreasing(i, n, [&](Cell c) { return s.value(c); });
}

Partition diagonal(const OneLegRPP& r, std::int64_t n) {
    std::vector<int> parts;
    for (std::int64_t i = std::max<std::int64_t>(1, 1 - n);; ++i) {
        Cell c{static_cast<int>(i), static_cast<int>(i + n)};
        if (!contains(r.shape, c)) break;
        parts.push_back(static_cast<int>(r.value(c)));
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

Partition diagonal(const TwoLegSPP& s, std::int64_t n) {
    return read_decreasing(std::max<std::int64_t>(1, 1 - n), n, [&](Cell c) { return s.value(c); });
}

Partition diagonal(const TwoLegRPP& r, std::int64_t n) {
    return read_decreasing(std::min<std::int64_t>(1, 1 - n), n, [&](Cell c) { return r.value(c); });
}

Partition diagonal(const Configuration& c, std::int64_t n) {
    return std::visit(
        [n](const auto& x) -> Partition {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, HookTableau>) {
                throw domain_error("a hook tableau has no diagonal partitions");
            } else {
                return diagonal(x, n);
            }
        },
        c);
}

HalfInteger minimal_weight_spp(const Partition& lambda, const Partition& mu) {
    return minimal_weight(ShapeKind::two_leg_spp, lambda, mu);
}

HalfInteger minimal_weight_rpp(const Partition& lambda, const Partition& mu) {
    return minimal_weight(ShapeKind::two_leg_rpp, lambda, mu);
}

HalfInteger weight(const PlanePartition& p) { return HalfInteger::from_int(sum_values(p.entries)); }
HalfInteger weight(const OneLegSPP& s) { return HalfInteger::from_int(sum_values(s.entries)); }
HalfInteger weight(const OneLegRPP& r) { return HalfInteger::from_int(sum_values(r.entries)); }
HalfInteger weight(const TwoLegSPP& s) {
    return minimal_weight_spp(s.lambda, s.mu) + HalfInteger::from_int(sum_values(s.excess));
}
HalfInteger weight(const TwoLegRPP& r) {
    return minimal_weight_rpp(r.lambda, r.mu) + HalfInteger::from_int(sum_values(r.deficit));
}
HalfInteger weight(const HookTableau& t) {
    std::int64_t total = 0;
    for (const auto& [c, v] : t.values) total += v * t.hook(c);
    return HalfInteger::from_int(total);
}
HalfInteger weight(const Configuration& c) {
    return std::visit([](const auto& x) { return weight(x); }, c);
}

MinimalConfig minimal_config(TwoLegKind kind, const Partition& lambda, const Partition& mu) {
    if (kind == TwoLegKind::spp) return {TwoLegSPP{lambda, mu, {}}, minimal_weight_spp(lambda, mu)};
    return {TwoLegRPP{lambda, mu, {}}, minimal_weight_rpp(lambda, mu)};
}

CellMap entries_in(const TwoLegSPP& s, int rows, int cols) {
    CellMap out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) out[{i, j}] = s.value({i, j});
    return out;
}

CellMap entries_in(const TwoLegRPP& r, int lo, int rows, int cols) {
    CellMap out;
    for (int i = lo; i <= rows; ++i)
        for (int j = lo; j <= cols; ++j)
            if (TwoLegRPP::in_domain({i, j})) out[{i, j}] = r.value({i, j});
    return out;
}

TwoLegSPP two_leg_spp_from_entries(const Partition& lambda, const Partition& mu, const CellMap& entries) {
    TwoLegSPP s{lambda, mu, {}};
    for (const auto& [c, v] : entries) {
        if (c.row < 1 || c.col < 1) throw domain_error("entry at " + cell_str(c) + " is outside ℕ²");
        const std::int64_t ex = v - s.minimal_value(c);
        if (ex < 0) throw domain_error("entry at " + cell_str(c) + " is below max(λ_j, µ_i)");
        if (ex > 0) s.excess[c] = ex;
    }
    return s;
}

TwoLegRPP two_leg_rpp_from_entries(const Partition& lambda, const Partition& mu, const CellMap& entries) {
    TwoLegRPP r{lambda, mu, {}};
    for (const auto& [c, v] : entries) {
        const std::int64_t d = r.cap(c) - v;
        if (d < 0) throw domain_error("entry at " + cell_str(c) + " is above min(λ_j, µ_i)");
        if (d > 0) r.deficit[c] = d;
    }
    return r;
}

TwoLegRPP transpose(const TwoLegRPP& r) {
    TwoLegRPP out{r.mu, r.lambda, {}};
    for (const auto& [c, v] : r.deficit) out.deficit[{c.col, c.row}] = v;
    return out;
}

DiagonalWindow support_window(const Configuration& c) {
    return std::visit(
        [](const auto& x) -> DiagonalWindow {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PlanePartition>) {
                int e = extent(x.entries);
                return {-e, e};
            } else if constexpr (std::is_same_v<T, OneLegSPP> || std::is_same_v<T, OneLegRPP>) {
                int e = extent(x.entries);
                return {-e - conjugate(x.shape).largest(), e + x.shape.largest()};
            } else if constexpr (std::is_same_v<T, TwoLegSPP>) {
                int e = extent(x.excess) + x.lambda.length() + x.mu.length() + 1;
                return {-e, e};
            } else if constexpr (std::is_same_v<T, TwoLegRPP>) {
                int e = extent(x.deficit) + x.lambda.length() + x.mu.length() + 1;
                return {-e, e};
            } else {
                int e = extent(x.values);
                return {-e, e};
            }
        },
        c);
}

std::string type_name(const Configuration& c) {
    static const char* names[] = {"plane_partition", "one_leg_spp", "one_leg_rpp",
                                  "two_leg_spp",     "two_leg_rpp", "hook_tableau"};
    return names[c.index()];
}

}  // namespace ptdt
