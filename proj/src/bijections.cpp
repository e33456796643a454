#include "ptdt/bijections.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ptdt/boundary.hpp"
#include "ptdt/errors.hpp"
#include "ptdt/toggle.hpp"

namespace ptdt {

namespace {

std::string cell_str(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

Partition rectangle(int rows, int cols) { return Partition(std::vector<int>(std::max(rows, 0), cols)); }

int extent(const CellMap& m) {
    int e = 0;
    for (const auto& [c, v] : m) e = std::max({e, std::abs(c.row), std::abs(c.col)});
    return e;
}

int extent(const std::vector<Cell>& cs) {
    int e = 0;
    for (Cell c : cs) e = std::max({e, c.row, c.col});
    return e;
}

// Cells of the rows × cols rectangle outside `start`, sorted by (i+j, i).
std::vector<Cell> off_diagonal_cells(const Partition& start, int rows, int cols) {
    std::vector<Cell> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            if (!contains(start, {i, j})) out.push_back({i, j});
    std::stable_sort(out.begin(), out.end(), [](Cell a, Cell b) {
        return std::pair(a.row + a.col, a.row) < std::pair(b.row + b.col, b.row);
    });
    return out;
}

template <class Config>
ToggleMachine machine_for(const Config& cfg, const Partition& removed, int reach, Partition left, Partition right) {
    std::vector<Partition> diags;
    for (int d = -reach; d <= reach; ++d) diags.push_back(diagonal(cfg, d));
    return ToggleMachine(removed, -reach, std::move(diags), std::move(left), std::move(right));
}

ToggleMachine empty_machine(const Partition& removed, int reach) {
    return ToggleMachine(removed, -reach, std::vector<Partition>(2 * reach + 1), {}, {});
}

HookTableau run_pops(ToggleMachine& m, const std::vector<Cell>& order, TableauRegion region, const Partition& shape) {
    HookTableau t{region, shape, {}};
    for (Cell c : order) {
        int v = m.pop(c);
        if (v != 0) t.values[c] = v;
    }
    return t;
}

void run_pushes(ToggleMachine& m, const std::vector<Cell>& order, const CellMap& values) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto v = values.find(*it);
        m.push(*it, v == values.end() ? 0 : static_cast<int>(v->second));
    }
}

void require_covered(const CellMap& values, const std::vector<Cell>& order) {
    std::set<Cell> cover(order.begin(), order.end());
    for (const auto& [c, v] : values)
        if (!cover.count(c)) throw schedule_error("schedule does not reach cell " + cell_str(c));
}

// 180° rotation of the a × b rectangle.
Cell rotate(Cell c, int a, int b) { return {a + 1 - c.row, b + 1 - c.col}; }

Partition complement(const Partition& lambda) {
    const int a = lambda.length(), b = lambda.largest();
    std::vector<int> parts(a);
    for (int i = 1; i <= a; ++i) parts[i - 1] = b - lambda.part(a + 1 - i);
    return Partition(std::move(parts));
}

}  // namespace

ToggleSchedule off_diagonal_schedule(const Partition& start, int box) {
    return {off_diagonal_cells(start, box, box), ScheduleKind::off_diagonal};
}

ToggleSchedule lexicographic_schedule(const Partition& start, int box) {
    std::vector<Cell> out;
    for (int i = 1; i <= box; ++i)
        for (int j = 1; j <= box; ++j)
            if (!contains(start, {i, j})) out.push_back({i, j});
    return {out, ScheduleKind::lexicographic};
}

ToggleSchedule random_schedule(const Partition& start, int box, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Partition shape = start;
    ToggleSchedule s{{}, ScheduleKind::custom};
    while (true) {
        std::vector<Cell> options;
        for (Cell c : outer_corners(shape))
            if (c.row <= box && c.col <= box) options.push_back(c);
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        Cell c = options[pick(rng)];
        s.cells.push_back(c);
        shape = add_cell(shape, c);
    }
    return s;
}

ToggleSchedule layer_schedule(int box) {
    ToggleSchedule s{{}, ScheduleKind::custom};
    for (int n = 1; n <= box; ++n) {
        for (int i = 1; i < n; ++i) s.cells.push_back({i, n});
        for (int j = 1; j <= n; ++j) s.cells.push_back({n, j});
    }
    return s;
}

ToggleMachine::ToggleMachine(Partition removed, std::int64_t lo, std::vector<Partition> diagonals,
                             Partition left_limit, Partition right_limit)
    : removed_(std::move(removed)),
      lo_(lo),
      diagonals_(std::move(diagonals)),
      left_limit_(std::move(left_limit)),
      right_limit_(std::move(right_limit)) {}

const Partition& ToggleMachine::at(std::int64_t d) const {
    if (d < lo()) return left_limit_;
    if (d > hi()) return right_limit_;
    return diagonals_[static_cast<std::size_t>(d - lo_)];
}

void ToggleMachine::set(std::int64_t d, Partition p) {
    if (d < lo() || d > hi()) throw schedule_error("diagonal " + std::to_string(d) + " is outside the toggle window");
    diagonals_[static_cast<std::size_t>(d - lo_)] = std::move(p);
}

int ToggleMachine::pop(Cell c) {
    if (c.row < 1 || c.col < 1 || removed_.part(c.row) != c.col - 1 ||
        (c.row > 1 && removed_.part(c.row - 1) < c.col))
        throw schedule_error("cell " + cell_str(c) + " is not a corner available for popping");
    const std::int64_t d = c.col - c.row;
    ToggleResult r = toggle_pop(at(d - 1), at(d), at(d + 1));
    set(d, std::move(r.toggled));
    removed_ = add_cell(removed_, c);
    return *r.popped;
}

void ToggleMachine::push(Cell c, int n) {
    if (c.row < 1 || c.col < 1 || removed_.part(c.row) != c.col || removed_.part(c.row + 1) >= c.col)
        throw schedule_error("cell " + cell_str(c) + " is not a corner available for pushing");
    const std::int64_t d = c.col - c.row;
    set(d, toggle_push(at(d - 1), at(d), at(d + 1), n));
    removed_ = remove_cell(removed_, c);
}

CellMap ToggleMachine::entries() const {
    CellMap out;
    for (std::int64_t d = lo(); d <= hi(); ++d) {
        int i = static_cast<int>(std::max<std::int64_t>(1, 1 - d));
        while (contains(removed_, {i, static_cast<int>(i + d)})) ++i;
        const Partition& p = at(d);
        for (int k = 1; k <= p.length(); ++k) out[{i + k - 1, static_cast<int>(i + k - 1 + d)}] = p.part(k);
    }
    return out;
}

HookTableau pp_to_tableau(const PlanePartition& pi, const std::optional<ToggleSchedule>& schedule) {
    validate(pi);
    const int box = std::max(1, extent(pi.entries));
    ToggleSchedule s = schedule ? *schedule : off_diagonal_schedule({}, box);
    const int reach = std::max(box, extent(s.cells)) + 1;
    ToggleMachine m = machine_for(pi, {}, reach, {}, {});
    HookTableau t = run_pops(m, s.cells, TableauRegion::plane, {});
    if (!m.entries().empty()) throw schedule_error("schedule leaves entries of the plane partition unpopped");
    return t;
}

PlanePartition tableau_to_pp(const HookTableau& t) {
    if (t.region != TableauRegion::plane) throw domain_error("tableau_to_pp needs a tableau on ℕ²");
    validate(t);
    const int box = std::max(1, extent(t.values));
    ToggleMachine m = empty_machine(rectangle(box, box), box + 1);
    run_pushes(m, off_diagonal_cells({}, box, box), t.values);
    return PlanePartition{m.entries()};
}

HookTableau spp_to_tableau(const OneLegSPP& sigma, const std::optional<ToggleSchedule>& schedule) {
    validate(sigma);
    const Partition& l = sigma.shape;
    const int box = std::max({1, extent(sigma.entries), l.largest(), l.length()});
    ToggleSchedule s = schedule ? *schedule : off_diagonal_schedule(l, box);
    const int reach = std::max(box, extent(s.cells)) + 1;
    ToggleMachine m = machine_for(sigma, l, reach, {}, {});
    HookTableau t = run_pops(m, s.cells, TableauRegion::outside, l);
    if (!m.entries().empty()) throw schedule_error("schedule leaves entries of the SPP unpopped");
    return t;
}

OneLegSPP tableau_to_spp(const HookTableau& t) {
    if (t.region != TableauRegion::outside) throw domain_error("tableau_to_spp needs a tableau on ℕ²∖λ");
    validate(t);
    const Partition& l = t.shape;
    const int box = std::max({1, extent(t.values), l.largest(), l.length()});
    ToggleMachine m = empty_machine(rectangle(box, box), box + 1);
    run_pushes(m, off_diagonal_cells(l, box, box), t.values);
    return OneLegSPP{l, m.entries()};
}

PhiSplit phi_split(const HookTableau& outside) {
    if (outside.region != TableauRegion::outside) throw domain_error("phi_split needs a tableau on ℕ²∖λ");
    PhiSplit out{{TableauRegion::inside, outside.shape, {}}, {TableauRegion::plane, {}, {}}};
    for (const auto& [c, v] : outside.values) {
        PhiTarget t = phi(outside.shape, c);
        (t.region == PhiRegion::in_lambda ? out.inside : out.plane).values[t.cell] = v;
    }
    return out;
}

HookTableau phi_merge(const PhiSplit& parts) {
    HookTableau out{TableauRegion::outside, parts.inside.shape, {}};
    for (const auto& [c, v] : parts.inside.values)
        out.values[phi_inverse(out.shape, {PhiRegion::in_lambda, c})] = v;
    for (const auto& [c, v] : parts.plane.values)
        out.values[phi_inverse(out.shape, {PhiRegion::in_plane, c})] = v;
    return out;
}

HookTableau rpp_to_tableau(const OneLegRPP& rho) {
    validate(rho);
    const Partition& l = rho.shape;
    const int a = l.length(), b = l.largest();
    HookTableau out{TableauRegion::inside, l, {}};
    if (l.empty()) return out;
    OneLegSPP rotated{complement(l), {}};
    for (const auto& [c, v] : rho.entries) rotated.entries[rotate(c, a, b)] = v;
    const int reach = std::max(a, b) + 1;
    ToggleMachine m = machine_for(rotated, rotated.shape, reach, {}, {});
    HookTableau t = run_pops(m, off_diagonal_cells(rotated.shape, a, b), TableauRegion::outside, rotated.shape);
    if (!m.entries().empty()) throw domain_error("rotated RPP left entries outside its rectangle");
    for (const auto& [c, v] : t.values) out.values[rotate(c, a, b)] = v;
    return out;
}

OneLegRPP tableau_to_rpp(const HookTableau& t) {
    if (t.region != TableauRegion::inside) throw domain_error("tableau_to_rpp needs a tableau on λ");
    validate(t);
    const Partition& l = t.shape;
    const int a = l.length(), b = l.largest();
    OneLegRPP out{l, {}};
    if (l.empty()) return out;
    const Partition mu = complement(l);
    CellMap rotated;
    for (const auto& [c, v] : t.values) rotated[rotate(c, a, b)] = v;
    ToggleMachine m = empty_machine(rectangle(a, b), std::max(a, b) + 1);
    run_pushes(m, off_diagonal_cells(mu, a, b), rotated);
    if (m.removed() != mu) throw domain_error("untoggling did not return to the complement shape");
    for (const auto& [c, v] : m.entries()) {
        if (c.row > a || c.col > b) throw domain_error("untoggled SPP left the bounding rectangle");
        out.entries[rotate(c, a, b)] = v;
    }
    return out;
}

OneLegImage one_leg_forward(const OneLegSPP& sigma, const std::optional<ToggleSchedule>& schedule) {
    PhiSplit split = phi_split(spp_to_tableau(sigma, schedule));
    return {tableau_to_rpp(split.inside), tableau_to_pp(split.plane)};
}

OneLegSPP one_leg_inverse(const OneLegRPP& rho, const PlanePartition& pi) {
    PhiSplit split{rpp_to_tableau(rho), pp_to_tableau(pi)};
    return tableau_to_spp(phi_merge(split));
}

namespace {

int two_leg_reach(const TwoLegSPP& s, int K) {
    return std::max(K, extent(s.excess) + s.lambda.length() + s.mu.length()) + 2;
}

ToggleMachine two_leg_machine(const TwoLegSPP& s, int K) {
    return machine_for(s, {}, two_leg_reach(s, K), s.lambda, s.mu);
}

// Adjacent same-sign swaps reversing Γ_+(a_1..a_K) and Γ_-(b_K..b_1); each entry is the
// index of the toggled state and whether the block is Γ_+ (states decrease left to right).
struct Swap {
    int state;
    bool plus_block;
};

std::vector<Swap> palindromic_swaps(int K) {
    std::vector<Swap> out;
    // Γ_-(b_{r+1}) travels from the right end to slot K + r.
    for (int r = 0; r + 1 < K; ++r)
        for (int p = 2 * K - 2; p >= K + r; --p) out.push_back({p + 1, false});
    // Γ_+(a_{r+1}) travels from the left end to slot K - 1 - r.
    for (int r = 0; r + 1 < K; ++r)
        for (int p = 0; p <= K - 2 - r; ++p) out.push_back({p + 1, true});
    return out;
}

void apply_swap(std::vector<Partition>& S, const Swap& s) {
    const int p = s.state;
    if (s.plus_block) {
        S[p] = toggle_between(S[p - 1], S[p], S[p + 1]);
    } else {
        S[p] = toggle_between(S[p + 1], S[p], S[p - 1]);
    }
}

// RPP with column leg `cols` and row leg `rows` whose diagonal p-K is S[p]; diagonals
// beyond ±K are minimal.
TwoLegRPP decode_rpp(const Partition& cols, const Partition& rows, const std::vector<Partition>& S, int K) {
    TwoLegRPP r{cols, rows, {}};
    for (int d = -K; d <= K; ++d) {
        const Partition& p = S[d + K];
        const Partition cap = diagonal(TwoLegRPP{cols, rows, {}}, d);
        if (p.length() > cap.length()) throw domain_error("diagonal " + std::to_string(d) + " exceeds the two-leg cap");
        const int start = std::min(1, 1 - d);
        for (int k = 1; k <= cap.length(); ++k) {
            std::int64_t def = cap.part(k) - p.part(k);
            if (def < 0) throw domain_error("diagonal " + std::to_string(d) + " exceeds the two-leg cap");
            if (def > 0) r.deficit[{start + k - 1, start + k - 1 + d}] = def;
        }
    }
    validate(r);
    return r;
}

TwoLegImage forward_at(const TwoLegSPP& sigma, int K) {
    TwoLegRemnant rem = two_leg_remnant(sigma, K);
    if (rem.states.front() != sigma.lambda || rem.states.back() != sigma.mu)
        throw domain_error("remnant has not stabilised at K = " + std::to_string(K));
    for (const Swap& s : palindromic_swaps(K)) apply_swap(rem.states, s);
    TwoLegRPP flipped = decode_rpp(sigma.mu, sigma.lambda, rem.states, K);
    return {transpose(flipped), tableau_to_pp(rem.popped)};
}

TwoLegSPP inverse_at(const TwoLegRPP& rho, const HookTableau& tab, int K) {
    const TwoLegRPP flipped = transpose(rho);
    std::vector<Partition> S;
    for (int d = -K; d <= K; ++d) S.push_back(diagonal(flipped, d));
    auto swaps = palindromic_swaps(K);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) apply_swap(S, *it);
    // rho has legs (λ, µ): λ is the left limit, µ the right one.
    const int reach = std::max(K, extent(rho.deficit) + rho.lambda.length() + rho.mu.length()) + 2;
    std::vector<Partition> diags;
    for (int d = -reach; d <= reach; ++d)
        diags.push_back(d < -K ? rho.lambda : d > K ? rho.mu : S[d + K]);
    ToggleMachine m(rectangle(K, K), -reach, std::move(diags), rho.lambda, rho.mu);
    run_pushes(m, off_diagonal_cells({}, K, K), tab.values);
    TwoLegSPP out{rho.lambda, rho.mu, {}};
    for (const auto& [c, v] : m.entries()) {
        std::int64_t ex = v - out.minimal_value(c);
        if (ex < 0) throw domain_error("untoggled entry at " + cell_str(c) + " is below the two-leg minimum");
        if (ex > 0) out.excess[c] = ex;
    }
    // Cells on the window edge read as zero when a diagonal is shorter than the minimal one.
    for (int d = -reach; d <= reach; ++d) {
        Partition got = diagonal(out, d);
        if (got != m.at(d)) throw domain_error("untoggled diagonal " + std::to_string(d) + " is not a two-leg SPP diagonal");
    }
    validate(out);
    return out;
}

}  // namespace

int stabilization_index(const TwoLegSPP& sigma) {
    validate(sigma);
    const int base = std::max({1, sigma.lambda.length(), sigma.mu.length(), extent(sigma.excess)});
    const HalfInteger floor_weight = minimal_weight_rpp(sigma.lambda, sigma.mu);
    HalfInteger remaining = weight(sigma);
    int last_nonzero = 0;
    for (int n = 1;; ++n) {
        ToggleMachine m = two_leg_machine(sigma, n);
        // Popping [1,n]² in layer order; earlier layers repeat, which keeps this simple.
        remaining = weight(sigma);
        for (Cell c : layer_schedule(n).cells) {
            int v = m.pop(c);
            if (v != 0) {
                remaining -= HalfInteger::from_int(static_cast<std::int64_t>(v) * (c.row + c.col - 1));
                last_nonzero = std::max({last_nonzero, c.row, c.col});
            }
        }
        // Any later nonzero pop has hook >= n+1 and the remnant weight never drops below W_0.
        if (n >= base && remaining - floor_weight < HalfInteger::from_int(n + 1)) break;
    }
    return std::max(base, last_nonzero);
}

TwoLegRemnant two_leg_remnant(const TwoLegSPP& sigma, int K) {
    validate(sigma);
    if (K < 1) throw domain_error("remnant size must be positive");
    ToggleMachine m = two_leg_machine(sigma, K);
    TwoLegRemnant rem{sigma.lambda, sigma.mu, K, {}, {}};
    rem.popped = run_pops(m, off_diagonal_cells({}, K, K), TableauRegion::plane, {});
    for (int d = -K; d <= K; ++d) rem.states.push_back(m.at(d));
    return rem;
}

TwoLegImage two_leg_forward(const TwoLegSPP& sigma, int K) {
    if (K == 0) K = stabilization_index(sigma);
    return forward_at(sigma, K);
}

TwoLegSPP two_leg_inverse(const TwoLegRPP& rho, const PlanePartition& pi, int K) {
    validate(rho);
    HookTableau tab = pp_to_tableau(pi);
    if (K == 0) {
        // The preimage has excess E = |ρ| + |π| - V_0, so its support lies within ℓ + E of
        // the corner and every nonzero pop has hook length at most E.
        const HalfInteger e = weight(rho) + weight(pi) - minimal_weight_spp(rho.lambda, rho.mu);
        K = std::max({1, rho.lambda.length(), rho.mu.length(), rho.lambda.largest(), rho.mu.largest(),
                      extent(rho.deficit), extent(tab.values)}) +
            static_cast<int>(std::max<std::int64_t>(0, e.floor())) + 1;
    }
    if (extent(tab.values) > K) throw domain_error("plane partition does not fit the chosen K");
    return inverse_at(rho, tab, K);
}

}  // namespace ptdt
