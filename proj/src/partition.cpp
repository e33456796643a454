#include "ptdt/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ptdt/errors.hpp"

namespace ptdt {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            std::ostringstream msg;
            msg << "parts must be weakly decreasing and nonnegative, got (";
            for (std::size_t k = 0; k < parts_.size(); ++k) msg << (k ? "," : "") << parts_[k];
            msg << ")";
            throw domain_error(msg.str());
        }
    }
}

std::int64_t Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "∅";
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw domain_error("bad partition part '" + token + "'");
        }
        if (used != token.size()) throw domain_error("bad partition part '" + token + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.largest(), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++cols[j];
    return Partition(std::move(cols));
}

bool interlaces(const Partition& lambda, const Partition& mu) {
    int n = std::max(lambda.length(), mu.length());
    for (int i = 1; i <= n; ++i) {
        if (lambda.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lambda.part(i + 1)) return false;
    }
    return true;
}

bool contains(const Partition& lambda, Cell c) {
    return c.row >= 1 && c.col >= 1 && c.col <= lambda.part(c.row);
}

int hook_length(const Partition& lambda, Cell c, HookRegion region) {
    if (c.row < 1 || c.col < 1) throw domain_error("cell outside ℕ²");
    Partition conj = conjugate(lambda);
    int arm_end = lambda.part(c.row);
    int leg_end = conj.part(c.col);
    if (region == HookRegion::inside) {
        if (!contains(lambda, c)) throw domain_error("cell is not inside the diagram");
        return (arm_end - c.col) + (leg_end - c.row) + 1;
    }
    if (contains(lambda, c)) throw domain_error("cell is not outside the diagram");
    return (c.col - arm_end - 1) + (c.row - leg_end - 1) + 1;
}

std::vector<Cell> outer_corners(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = lambda.length() + 1; i >= 1; --i) {
        if (i == 1 || lambda.part(i - 1) > lambda.part(i)) out.push_back({i, lambda.part(i) + 1});
    }
    return out;
}

std::vector<Cell> inner_corners(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = lambda.length(); i >= 1; --i) {
        if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
    }
    return out;
}

std::vector<Cell> cells(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) out.push_back({i, j});
    return out;
}

Partition remove_cell(const Partition& lambda, Cell c) {
    if (lambda.part(c.row) != c.col || lambda.part(c.row + 1) >= c.col)
        throw domain_error("cell is not a removable corner");
    std::vector<int> parts = lambda.parts();
    --parts[c.row - 1];
    return Partition(std::move(parts));
}

Partition add_cell(const Partition& lambda, Cell c) {
    if (c.row < 1 || lambda.part(c.row) != c.col - 1 || (c.row > 1 && lambda.part(c.row - 1) < c.col))
        throw domain_error("cell is not an addable corner");
    std::vector<int> parts = lambda.parts();
    if (c.row > static_cast<int>(parts.size())) parts.push_back(0);
    ++parts[c.row - 1];
    return Partition(std::move(parts));
}

}  // namespace ptdt
