#include "ptdt/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ptdt {

namespace {

enum class Mark { blank, blocked, bare, boxed };

struct GridCell {
    Mark mark = Mark::blank;
    std::int64_t value = 0;
};

// Rows top to bottom starting at row0, columns left to right starting at col0.
struct Grid {
    int row0 = 1, col0 = 1;
    std::vector<std::vector<GridCell>> cells;
};

struct Bounds {
    int r0, r1, c0, c1;
};

Bounds support_bounds(const CellMap& m, Bounds b) {
    for (const auto& [c, v] : m) {
        b.r0 = std::min(b.r0, c.row);
        b.r1 = std::max(b.r1, c.row);
        b.c0 = std::min(b.c0, c.col);
        b.c1 = std::max(b.c1, c.col);
    }
    return b;
}

template <class F>
Grid make_grid(Bounds b, F cell_at) {
    Grid g{b.r0, b.c0, {}};
    for (int i = b.r0; i <= b.r1; ++i) {
        std::vector<GridCell> row;
        for (int j = b.c0; j <= b.c1; ++j) row.push_back(cell_at(Cell{i, j}));
        g.cells.push_back(std::move(row));
    }
    return g;
}

Grid grid_of(const Configuration& config) {
    return std::visit(
        [](const auto& x) -> Grid {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PlanePartition>) {
                Bounds b = support_bounds(x.entries, {1, 0, 1, 0});
                return make_grid(b, [&](Cell c) {
                    std::int64_t v = x.value(c);
                    return v ? GridCell{Mark::boxed, v} : GridCell{};
                });
            } else if constexpr (std::is_same_v<T, OneLegSPP>) {
                Bounds b = support_bounds(x.entries, {1, conjugate(x.shape).largest(), 1, x.shape.largest()});
                return make_grid(b, [&](Cell c) {
                    if (contains(x.shape, c)) return GridCell{Mark::blocked, 0};
                    std::int64_t v = x.value(c);
                    return v ? GridCell{Mark::boxed, v} : GridCell{};
                });
            } else if constexpr (std::is_same_v<T, OneLegRPP>) {
                Bounds b{1, x.shape.length(), 1, x.shape.largest()};
                return make_grid(b, [&](Cell c) {
                    return contains(x.shape, c) ? GridCell{Mark::boxed, x.value(c)} : GridCell{};
                });
            } else if constexpr (std::is_same_v<T, TwoLegSPP>) {
                Bounds b = support_bounds(x.excess, {1, x.mu.length() + 1, 1, x.lambda.length() + 1});
                b.r1 = std::max(b.r1, x.mu.length() + 1);
                b.c1 = std::max(b.c1, x.lambda.length() + 1);
                return make_grid(b, [&](Cell c) {
                    std::int64_t v = x.value(c);
                    if (v == 0) return GridCell{};
                    return GridCell{v > x.minimal_value(c) ? Mark::boxed : Mark::bare, v};
                });
            } else if constexpr (std::is_same_v<T, TwoLegRPP>) {
                Bounds b = support_bounds(x.deficit, {0, x.mu.length() + 1, 0, x.lambda.length() + 1});
                b.r0 = std::min(b.r0, b.c0);
                b.c0 = b.r0;
                return make_grid(b, [&](Cell c) {
                    if (!TwoLegRPP::in_domain(c)) return GridCell{Mark::blocked, 0};
                    std::int64_t v = x.value(c);
                    return GridCell{v < x.cap(c) ? Mark::boxed : Mark::bare, v};
                });
            } else {
                Bounds b = support_bounds(x.values, {1, 0, 1, 0});
                if (x.region != TableauRegion::plane) {
                    b.r1 = std::max(b.r1, conjugate(x.shape).largest());
                    b.c1 = std::max(b.c1, x.shape.largest());
                }
                return make_grid(b, [&](Cell c) {
                    bool in_shape = contains(x.shape, c);
                    if ((x.region == TableauRegion::inside && !in_shape) ||
                        (x.region == TableauRegion::outside && in_shape))
                        return GridCell{Mark::blocked, 0};
                    auto it = x.values.find(c);
                    return it == x.values.end() ? GridCell{} : GridCell{Mark::boxed, it->second};
                });
            }
        },
        config);
}

}  // namespace

std::string render_ascii(const Configuration& c) {
    Grid g = grid_of(c);
    if (g.cells.empty() || g.cells.front().empty()) return "(empty)\n";
    std::size_t digits = 1;
    for (const auto& row : g.cells)
        for (const GridCell& x : row) digits = std::max(digits, std::to_string(x.value).size());
    std::ostringstream out;
    for (const auto& row : g.cells) {
        std::string line;
        for (const GridCell& x : row) {
            std::string v = std::to_string(x.value);
            std::string pad(digits - v.size(), ' ');
            switch (x.mark) {
                case Mark::blank: line += std::string(digits + 2, ' '); break;
                case Mark::blocked: line += " " + std::string(digits, '#') + " "; break;
                case Mark::bare: line += " " + pad + v + " "; break;
                case Mark::boxed: line += "[" + pad + v + "]"; break;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
    return out.str();
}

std::string render_svg(const Configuration& c) {
    Grid g = grid_of(c);
    const int unit = 32;
    const int rows = static_cast<int>(g.cells.size());
    const int cols = rows ? static_cast<int>(g.cells.front().size()) : 0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * unit + 2 << "\" height=\""
        << rows * unit + 2 << "\" font-family=\"monospace\" font-size=\"14\">\n";
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const GridCell& x = g.cells[i][j];
            const int px = j * unit + 1, py = i * unit + 1;
            if (x.mark == Mark::blank) continue;
            if (x.mark == Mark::blocked) {
                out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << unit << "\" height=\"" << unit
                    << "\" fill=\"#bbbbbb\"/>\n";
                continue;
            }
            if (x.mark == Mark::boxed)
                out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << unit << "\" height=\"" << unit
                    << "\" fill=\"#f4f0e0\" stroke=\"black\"/>\n";
            out << "  <text x=\"" << px + unit / 2 << "\" y=\"" << py + unit / 2 + 5 << "\" text-anchor=\"middle\""
                << (x.mark == Mark::bare ? " fill=\"#777777\"" : "") << ">" << x.value << "</text>\n";
        }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ptdt
