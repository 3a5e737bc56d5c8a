#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tri {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Triangle counts reach n^2 * k^3 scale, so all count accumulation goes
// through these checked helpers instead of raw arithmetic.
inline u128 checked_add(u128 a, u128 b) {
    u128 s = a + b;
    if (s < a) throw std::overflow_error("128-bit addition overflow");
    return s;
}

inline u128 checked_mul(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    u128 p = a * b;
    if (p / a != b) throw std::overflow_error("128-bit multiplication overflow");
    return p;
}

inline u64 checked_add_u64(u64 a, u64 b) {
    u64 s = a + b;
    if (s < a) throw std::overflow_error("64-bit addition overflow");
    return s;
}

inline u64 checked_mul_u64(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    u64 p = a * b;
    if (p / a != b) throw std::overflow_error("64-bit multiplication overflow");
    return p;
}

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

inline u128 parse_u128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer string");
        v = checked_add(checked_mul(v, 10), u128(c - '0'));
    }
    return v;
}

// Ceiling division, exact integer arithmetic only.
inline u128 ceil_div(u128 a, u128 b) {
    if (b == 0) throw std::invalid_argument("division by zero");
    return (a + b - 1) / b;
}

}  // namespace tri
