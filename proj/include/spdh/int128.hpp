#pragma once

/**
 * @file int128.hpp
 * @brief 128-bit unsigned helpers shared by the whole library.
 *
 * All moduli handled here fit in 128 bits (the widest is p^2 for a
 * 64-bit prime p). Multiplication modulo a 128-bit modulus cannot use a
 * native double-wide product, so mul_mod falls back to shift-and-add
 * when the modulus exceeds 64 bits.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spdh {

using u128 = unsigned __int128;

/// Number of bits needed to represent v (bit_width(0) == 0).
constexpr int bit_width(u128 v) {
    int w = 0;
    while (v != 0) {
        v >>= 1;
        ++w;
    }
    return w;
}

/// Bytes needed to hold any value in [0, v], i.e. ceil(bit_width(v)/8).
constexpr unsigned byte_width(u128 v) {
    int bits = bit_width(v);
    return bits == 0 ? 1u : static_cast<unsigned>((bits + 7) / 8);
}

constexpr u128 add_mod(u128 a, u128 b, u128 m) {
    // a, b < m; avoids overflow even when m > 2^127.
    return a >= m - b && b != 0 ? a - (m - b) : a + b;
}

constexpr u128 sub_mod(u128 a, u128 b, u128 m) {
    return a >= b ? a - b : m - (b - a);
}

constexpr u128 mul_mod(u128 a, u128 b, u128 m) {
    if (m == 0)
        throw std::domain_error("mul_mod: zero modulus");
    a %= m;
    b %= m;
    if (m <= UINT64_MAX)
        return (a * b) % m;
    u128 acc = 0;
    while (b != 0) {
        if (b & 1)
            acc = add_mod(acc, a, m);
        a = add_mod(a, a, m);
        b >>= 1;
    }
    return acc;
}

constexpr u128 pow_mod(u128 base, u128 exp, u128 m) {
    if (m == 1)
        return 0;
    u128 acc = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1)
            acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

constexpr u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Saturating product; returns false on overflow past 2^128 - 1.
constexpr bool checked_mul(u128 a, u128 b, u128& out) {
    if (a != 0 && b > static_cast<u128>(-1) / a)
        return false;
    out = a * b;
    return true;
}

inline std::string to_string(u128 v) {
    if (v == 0)
        return "0";
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return std::string(digits.rbegin(), digits.rend());
}

inline u128 parse_u128(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("parse_u128: empty string");
    constexpr u128 max = static_cast<u128>(-1);
    u128 v = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_u128: non-digit character");
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (max - d) / 10)
            throw std::out_of_range("parse_u128: value exceeds 128 bits");
        v = v * 10 + d;
    }
    return v;
}

} // namespace spdh
