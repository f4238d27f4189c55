#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bek {

// Exact arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_minus_one(const Rational& r) { return r == -1; }
inline bool is_negative(const Rational& r) { return r < 0; }

// "3", "-3", "3/2", "-3/2"
inline std::string render(const Rational& r) { return r.str(); }

}  // namespace bek
