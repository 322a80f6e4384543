#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympharm/scalar.hpp"

using namespace sympharm;

namespace {

GaussianRational rand_scalar(std::mt19937_64& eng, bool nonzero = false) {
  auto r = [&] {
    long num = static_cast<long>(eng() % 19) - 9;
    long den = static_cast<long>(eng() % 4) + 1;
    return Rational(num, den);
  };
  GaussianRational x{r(), r()};
  while (nonzero && x.is_zero()) x = GaussianRational{r(), r()};
  return x;
}

}  // namespace

TEST_CASE("arithmetic matches hand values") {
  GaussianRational a{Rational(1, 2), Rational(1)};   // 1/2 + i
  GaussianRational b{Rational(1, 2), Rational(-1)};  // 1/2 - i
  CHECK(a * b == GaussianRational(Rational(5, 4)));

  GaussianRational c{Rational(3, 4), Rational(2)};
  CHECK(c.conj() == GaussianRational{Rational(3, 4), Rational(-2)});

  CHECK(GaussianRational(Rational(1, 3)) + GaussianRational(Rational(1, 6)) ==
        GaussianRational(Rational(1, 2)));
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937_64 eng(42);
  for (int n = 0; n < 300; ++n) {
    GaussianRational x = rand_scalar(eng), y = rand_scalar(eng), z = rand_scalar(eng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

TEST_CASE("inverses are exact") {
  std::mt19937_64 eng(7);
  for (int n = 0; n < 200; ++n) {
    GaussianRational x = rand_scalar(eng, true);
    CHECK(x * (GaussianRational(1) / x) == GaussianRational(1));
  }
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);

  // oracle: count the 2-subsets of {1..5} directly
  int subsets = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) ++subsets;
  CHECK(binomial(5, 2) == subsets);

  for (unsigned n = 0; n <= 30; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == factorial(n) / (factorial(k) * factorial(n - k)));
}

TEST_CASE("textual form") {
  CHECK(to_string(GaussianRational(Rational(3, 4))) == "3/4");
  CHECK(to_string(GaussianRational{Rational(3, 4), Rational(-2)}) == "3/4-2*i");
  CHECK(to_string(GaussianRational{Rational(0), Rational(1)}) == "1*i");
  CHECK(to_string(GaussianRational{Rational(0), Rational(-1)}) == "-1*i");
  CHECK(to_string(GaussianRational{Rational(1, 2), Rational(1, 3)}) == "1/2+1/3*i");
  CHECK(to_string(GaussianRational(0)) == "0");
  CHECK(to_string(GaussianRational(Rational(-5))) == "-5");
}
