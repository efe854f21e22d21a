#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Accepts "p", "-p" and "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

BigInt factorial(int n);
BigInt binomial(int n, int k);

// Multinomial (n; k_1, ..., k_r). Zero whenever some k_i is negative or the
// entries do not sum to n. This is the convention the face multiplicities and
// the forest formula rely on.
BigInt multinomial(int n, std::span<const int> parts);

BigInt power(const BigInt& base, int exponent);

inline bool is_integral(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

}  // namespace hurwitz
