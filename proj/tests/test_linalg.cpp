#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympharm/linalg.hpp"

using namespace sympharm;

namespace {

CMatrix random_matrix(std::mt19937_64& eng, size_t r, size_t c, int density_pct = 60) {
  CMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) {
      if (eng() % 100 >= static_cast<unsigned long>(density_pct)) continue;
      long re = static_cast<long>(eng() % 9) - 4;
      long im = static_cast<long>(eng() % 5) - 2;
      long den = static_cast<long>(eng() % 3) + 1;
      m(i, j) = GaussianRational{Rational(re, den), Rational(im, den)};
    }
  return m;
}

CMatrix mul(const CMatrix& a, const CMatrix& b) { return a * b; }

}  // namespace

TEST_CASE("kernel of a 1x4 row in canonical form") {
  CMatrix m(1, 4);
  m(0, 0) = GaussianRational(4);
  m(0, 3) = GaussianRational(4);
  CMatrix k = kernel_basis(m);
  REQUIRE(k.cols() == 3);
  REQUIRE(k.rows() == 4);
  // free columns 1, 2, 3; pivot 0 solved: x0 = -x3
  CHECK(k(0, 0) == GaussianRational(0));
  CHECK(k(1, 0) == GaussianRational(1));
  CHECK(k(0, 2) == GaussianRational(-1));
  CHECK(k(3, 2) == GaussianRational(1));
  CHECK(mul(m, k).is_zero());
}

TEST_CASE("kernel of the identity is empty; kernel of zero is everything") {
  CMatrix id = CMatrix::identity(5);
  CHECK(kernel_basis(id).cols() == 0);
  CHECK(rank(id) == 5);

  CMatrix zero(3, 4);
  CMatrix k = kernel_basis(zero);
  CHECK(k.cols() == 4);
  CHECK(rank(zero) == 0);

  CMatrix empty(0, 4);  // no constraints at all
  CHECK(kernel_basis(empty).cols() == 4);
}

TEST_CASE("kernel columns are genuine kernel vectors, deterministically") {
  std::mt19937_64 eng(5);
  for (int n = 0; n < 40; ++n) {
    size_t r = 1 + eng() % 6, c = 1 + eng() % 7;
    CMatrix m = random_matrix(eng, r, c);
    CMatrix k1 = kernel_basis(m);
    CMatrix k2 = kernel_basis(m);
    CHECK(k1 == k2);
    CHECK(mul(m, k1).is_zero());
    CHECK(rank(m) + k1.cols() == c);
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  std::mt19937_64 eng(17);
  for (int n = 0; n < 40; ++n) {
    size_t r = 2 + eng() % 5, c = 2 + eng() % 5;
    CMatrix a = random_matrix(eng, r, c);
    CMatrix x = random_matrix(eng, c, 2, 100);
    CMatrix b = mul(a, x);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(mul(a, *sol) == b);  // minimal-representative solution reproduces b
  }

  CMatrix a(2, 1);
  a(0, 0) = GaussianRational(1);
  a(1, 0) = GaussianRational(1);
  CMatrix b(2, 1);
  b(0, 0) = GaussianRational(1);
  b(1, 0) = GaussianRational(2);
  CHECK(!solve(a, b).has_value());
  CHECK(!spans(a, b));
  CMatrix b2(2, 1);
  b2(0, 0) = GaussianRational(Rational(1, 3));
  b2(1, 0) = GaussianRational(Rational(1, 3));
  CHECK(spans(a, b2));
}

TEST_CASE("complex pivots are handled exactly") {
  // (i) * x = (1+i) has the exact solution x = 1 - i... times norm
  CMatrix a(1, 1);
  a(0, 0) = GaussianRational::i();
  CMatrix b(1, 1);
  b(0, 0) = GaussianRational{Rational(1), Rational(1)};
  auto sol = solve(a, b);
  REQUIRE(sol.has_value());
  CHECK((*sol)(0, 0) == GaussianRational{Rational(1), Rational(-1)});

  std::mt19937_64 eng(29);
  for (int n = 0; n < 30; ++n) {
    CMatrix m = random_matrix(eng, 4, 6, 90);
    CHECK(mul(m, kernel_basis(m)).is_zero());
  }
}

TEST_CASE("conjugate transpose") {
  CMatrix m(1, 2);
  m(0, 0) = GaussianRational{Rational(1), Rational(2)};
  m(0, 1) = GaussianRational(3);
  CMatrix h = conj_transposed(m);
  CHECK(h.rows() == 2);
  CHECK(h(0, 0) == GaussianRational{Rational(1), Rational(-2)});
  CHECK(h(1, 0) == GaussianRational(3));
}
