#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ptdt {

// Weakly decreasing positive parts, no trailing zeros. Parts beyond the length read as 0.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Trailing zeros are dropped; throws domain_error on increasing or negative parts.
    explicit Partition(std::vector<int> parts);

    // 1-indexed part; 0 for i > length() and for i < 1.
    int part(std::int64_t i) const {
        return (i >= 1 && i <= static_cast<std::int64_t>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    std::int64_t weight() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    // "∅" or "(4,2,1)".
    std::string to_string() const;
    // Comma-separated parts; empty string or "0" is ∅.
    static Partition parse(const std::string& text);

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// 1-indexed box address. Two-leg RPP deficits also use rows or columns <= 0.
struct Cell {
    int row = 1;
    int col = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
    friend bool operator==(const Cell&, const Cell&) = default;
};

enum class HookRegion { inside, outside };

Partition conjugate(const Partition& lambda);

// lambda ≻ mu: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool interlaces(const Partition& lambda, const Partition& mu);

bool contains(const Partition& lambda, Cell c);

// Throws domain_error when the cell is not in the stated region or not in ℕ².
int hook_length(const Partition& lambda, Cell c, HookRegion region);

// Cells of ℕ²∖λ whose upper and left neighbours are in λ or off the quadrant,
// listed bottom-left to top-right.
std::vector<Cell> outer_corners(const Partition& lambda);

// Removable cells of λ, listed bottom-left to top-right.
std::vector<Cell> inner_corners(const Partition& lambda);

// Cells of λ in row-major order.
std::vector<Cell> cells(const Partition& lambda);

// λ with the cell c removed (c must be a removable corner) or added (an outer corner).
Partition remove_cell(const Partition& lambda, Cell c);
Partition add_cell(const Partition& lambda, Cell c);

}  // namespace ptdt
