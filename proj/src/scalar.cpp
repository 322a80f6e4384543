#include "sympharm/scalar.hpp"

#include <ostream>
#include <sstream>

namespace sympharm {

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact: r is binomial(n-k+j, j) after each step
  }
  return r;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const GaussianRational& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  if (x.re() != 0) {
    os << x.re();
    if (x.im() != 0) {
      if (x.im() > 0) os << "+";
      os << x.im() << "*i";
    }
  } else {
    os << x.im() << "*i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << to_string(x);
}

GaussianRational i_power(unsigned k) {
  switch (k % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

}  // namespace sympharm
