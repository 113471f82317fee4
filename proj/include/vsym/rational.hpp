#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vsym {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) { return q.str(); }

inline double to_double(const Rational& q) { return static_cast<double>(q); }

}  // namespace vsym
