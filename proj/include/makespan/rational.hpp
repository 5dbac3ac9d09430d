#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace makespan {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

Rational make_rational(std::int64_t num, std::int64_t den);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);

// Throws NumericOverflow when the value does not fit into an int64.
std::int64_t to_int64(const BigInt& v);

// Bits of the larger of numerator and denominator.
std::size_t bit_size(const Rational& r);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

// Accepts "a", "-a" and "a/b".
Rational parse_rational(const std::string& text);

}  // namespace makespan
