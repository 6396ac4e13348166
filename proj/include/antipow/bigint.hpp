#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace antipow {

/// Arbitrary-precision signed integer used for word positions and cell widths.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

/// Number of bits needed to write x (0 for x == 0).
inline std::size_t bit_length(const BigInt& x) {
    if (x <= 0) return 0;
    return static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

/// 2-adic valuation; x must be positive.
inline std::size_t two_adic_valuation(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("2-adic valuation of a non-positive integer");
    return static_cast<std::size_t>(boost::multiprecision::lsb(x));
}

inline bool test_bit(const BigInt& x, std::size_t i) {
    return boost::multiprecision::bit_test(x, static_cast<unsigned>(i));
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal literal; throws std::invalid_argument otherwise.
inline BigInt parse_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    BigInt r{std::string(digits)};
    return text.front() == '-' ? BigInt(-r) : r;
}

}  // namespace antipow
