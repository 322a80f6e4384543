#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sympharm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(unsigned n);

// binomial(n, k) with the convention binomial(n, k) = 0 for k > n.
Int binomial(unsigned n, unsigned k);

std::string to_string(const Rational& r);

}  // namespace sympharm
