#include "ptdt/half_integer.hpp"

#include <charconv>

#include "ptdt/errors.hpp"

namespace ptdt {

std::string HalfInteger::to_string() const {
    if (is_integer()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw domain_error("not a half-integer: '" + whole + "'");
    }
    return v;
}

}  // namespace

HalfInteger HalfInteger::parse(const std::string& text) {
    std::string_view s = text;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        if (s.substr(slash + 1) != "2") throw domain_error("denominator must be 2: '" + text + "'");
        return from_doubled(parse_int(s.substr(0, slash), text));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto frac = s.substr(dot + 1);
        bool neg = !s.empty() && s.front() == '-';
        std::int64_t whole = parse_int(s.substr(0, dot) == "-" ? "-0" : s.substr(0, dot), text);
        if (frac == "5") return from_doubled(2 * whole + (neg ? -1 : 1));
        if (frac.find_first_not_of('0') == std::string_view::npos) return from_int(whole);
        throw domain_error("not a half-integer: '" + text + "'");
    }
    return from_int(parse_int(s, text));
}

}  // namespace ptdt
