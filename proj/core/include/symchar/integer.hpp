#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symchar {

/// Arbitrary precision integer used for every structure coefficient.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational; only the formal group law module needs denominators.
using Rational = boost::multiprecision::cpp_rational;

} // namespace symchar
