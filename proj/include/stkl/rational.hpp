#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace stkl {

// Every average in this library is an exact reduced fraction; no floating
// point participates in any computed or compared value. Decimals are
// rendered for display only.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// "p/q", or just "p" when q == 1.
std::string fraction_str(const Rational& r);

// Fixed-point rendering, rounded half away from zero.
std::string decimal_str(const Rational& r, int places = 6);

}  // namespace stkl
