#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ptdt {

// Exact multiple of 1/2, stored doubled.
struct HalfInteger {
    std::int64_t doubled = 0;

    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_doubled(std::int64_t d) {
        HalfInteger h;
        h.doubled = d;
        return h;
    }
    static constexpr HalfInteger from_int(std::int64_t n) { return from_doubled(2 * n); }

    constexpr bool is_integer() const { return doubled % 2 == 0; }
    // Largest integer <= value.
    constexpr std::int64_t floor() const { return doubled >= 0 ? doubled / 2 : -((-doubled + 1) / 2); }
    // Smallest integer >= value.
    constexpr std::int64_t ceil() const { return doubled >= 0 ? (doubled + 1) / 2 : -((-doubled) / 2); }
    constexpr HalfInteger abs() const { return from_doubled(doubled < 0 ? -doubled : doubled); }

    constexpr HalfInteger operator-() const { return from_doubled(-doubled); }
    constexpr HalfInteger& operator+=(HalfInteger o) { doubled += o.doubled; return *this; }
    constexpr HalfInteger& operator-=(HalfInteger o) { doubled -= o.doubled; return *this; }
    friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
    friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }
    friend constexpr HalfInteger operator*(HalfInteger a, std::int64_t k) { return from_doubled(a.doubled * k); }
    friend constexpr HalfInteger operator*(std::int64_t k, HalfInteger a) { return from_doubled(a.doubled * k); }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
    friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

    // "3", "-1/2", "13/2".
    std::string to_string() const;
    // Accepts "k", "k/2", "-k/2" and decimal halves such as "6.5".
    static HalfInteger parse(const std::string& text);
};

}  // namespace ptdt
