#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace indpoly {

// Arbitrary-precision signed integer. Coefficients of independence polynomials
// grow like binomials and the synthesizer accepts any k, so fixed-width
// arithmetic is not an option anywhere values at -1 or coefficients flow.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// 2^k for k >= 0.
inline BigInt pow2(int k) {
    BigInt r = 1;
    return r << k;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

// Parses a decimal integer (optional leading '-'). Throws std::invalid_argument
// on anything else; cpp_int's own constructor accepts some forms we don't want
// in file formats (hex, leading '+', whitespace), so validate first.
BigInt parse_bigint(const std::string& text);

}  // namespace indpoly
