#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympharm/ops.hpp"
#include "sympharm/parse.hpp"
#include "sympharm/structures.hpp"

using namespace sympharm;

namespace {

Quaternion rand_quat(std::mt19937_64& eng) {
  auto r = [&] {
    return Rational(static_cast<long>(eng() % 9) - 4, static_cast<long>(eng() % 3) + 1);
  };
  return {r(), r(), r(), r()};
}

}  // namespace

TEST_CASE("quaternion arithmetic") {
  Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * i == Quaternion(-1));
  CHECK(j * j == Quaternion(-1));
  CHECK(k * k == Quaternion(-1));
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * i == j);

  std::mt19937_64 eng(2);
  for (int n = 0; n < 50; ++n) {
    Quaternion q = rand_quat(eng), r = rand_quat(eng);
    CHECK((q * r).conj() == r.conj() * q.conj());
    Quaternion nq = q * q.conj();
    CHECK(nq == Quaternion{q.norm(), 0, 0, 0});
  }
}

TEST_CASE("complex embedding basics") {
  CMatrix ie(1, 1);
  ie(0, 0) = GaussianRational::i();
  CHECK(embed_complex(ie) == complex_structure(1));

  for (int n = 1; n <= 4; ++n) {
    CMatrix m(n, n);
    for (int d = 0; d < n; ++d) m(d, d) = GaussianRational::i();
    CHECK(embed_complex(m) == complex_structure(n));
    CMatrix e(n, n);
    for (int d = 0; d < n; ++d) e(d, d) = GaussianRational(1);
    CHECK(embed_complex(e) == QMatrix::identity(2 * n));
  }

  std::mt19937_64 eng(31);
  for (int rep = 0; rep < 20; ++rep) {
    CMatrix a(2, 2), b(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = GaussianRational{Rational(static_cast<long>(eng() % 9) - 4),
                                   Rational(static_cast<long>(eng() % 9) - 4)};
        b(i, j) = GaussianRational{Rational(static_cast<long>(eng() % 9) - 4),
                                   Rational(static_cast<long>(eng() % 9) - 4)};
      }
    CHECK(embed_complex(a * b) == embed_complex(a) * embed_complex(b));
    QMatrix is = complex_structure(2);
    CHECK(embed_complex(a) * is == is * embed_complex(a));
  }
}

TEST_CASE("quaternionic embedding against the 2x2 displays") {
  HMatrix qj(1, 1);
  qj(0, 0) = Quaternion{0, 0, 1, 0};
  CMatrix ej = embed_quaternion(qj);
  CHECK(ej(0, 0) == GaussianRational(0));
  CHECK(ej(0, 1) == GaussianRational(1));
  CHECK(ej(1, 0) == GaussianRational(-1));
  CHECK(ej(1, 1) == GaussianRational(0));

  HMatrix qi(1, 1);
  qi(0, 0) = Quaternion{0, 1, 0, 0};
  CMatrix ei = embed_quaternion(qi);
  CHECK(ei(0, 0) == GaussianRational::i());
  CHECK(ei(1, 1) == -GaussianRational::i());
  CHECK(satisfies_symplectic_relation(ei));

  std::mt19937_64 eng(41);
  for (int rep = 0; rep < 20; ++rep) {
    HMatrix a(2, 2), b(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = rand_quat(eng);
        b(i, j) = rand_quat(eng);
      }
    CHECK(embed_quaternion(a * b) == embed_quaternion(a) * embed_quaternion(b));
    Quaternion q = rand_quat(eng);
    HMatrix qq(1, 1);
    qq(0, 0) = q * q.conj();
    CMatrix img = embed_quaternion(qq);
    CHECK(img(0, 0) == GaussianRational(q.norm()));
    CHECK(img(1, 1) == GaussianRational(q.norm()));
    CHECK(img(0, 1) == GaussianRational(0));
  }
}

TEST_CASE("structure matrices") {
  Context ctx(1);
  auto [I, J, K] = structure_matrices(ctx);
  // J rows per the 4x4 display
  QMatrix expect(4, 4);
  expect(0, 2) = 1;
  expect(1, 3) = -1;
  expect(2, 0) = -1;
  expect(3, 1) = 1;
  CHECK(J == expect);

  QMatrix minus_e = -QMatrix::identity(4);
  CHECK(I * I == minus_e);
  CHECK(J * J == minus_e);
  CHECK(K * K == minus_e);
  CHECK((I * J + J * I).is_zero());
  CHECK(K == I * J);

  for (int p = 2; p <= 3; ++p) {
    auto t = structure_matrices(Context(p));
    QMatrix me = -QMatrix::identity(4 * p);
    CHECK(t.i * t.i == me);
    CHECK(t.j * t.j == me);
    CHECK(t.k * t.k == me);
    CHECK((t.i * t.j + t.j * t.i).is_zero());
  }
}

TEST_CASE("predicates") {
  HMatrix e = HMatrix::identity(2);
  CHECK(!is_skew_symplectic(e));

  HMatrix qi(1, 1);
  qi(0, 0) = Quaternion{0, 1, 0, 0};
  CHECK(is_skew_symplectic(qi));
  CHECK(is_skew_hermitian(embed_quaternion(qi)));

  std::mt19937_64 eng(55);
  for (int n = 0; n < 50; ++n) {
    size_t p = 1 + eng() % 3;
    HMatrix b(p, p);
    for (size_t i = 0; i < p; ++i)
      for (size_t j = 0; j < p; ++j) b(i, j) = rand_quat(eng);
    HMatrix a = b - adjoint(b);
    CHECK(is_skew_symplectic(a));
    CMatrix img = embed_quaternion(a);
    CHECK(is_skew_hermitian(img));
    CHECK(satisfies_symplectic_relation(img));
  }
}

TEST_CASE("twist T agrees with the J structure matrix on linear polynomials") {
  for (int p = 1; p <= 2; ++p) {
    Context ctx(p);
    auto triple = structure_matrices(ctx);
    CoordinateImages imgs = coordinate_substitution(ctx, -triple.j);  // J^{-1} = -J
    for (int j = 1; j <= ctx.num_vars(); ++j) {
      CHECK(OpExpr::twist_t().apply(Poly::variable_z(ctx, j)) == imgs.z[j - 1]);
      CHECK(OpExpr::twist_t().apply(Poly::variable_zb(ctx, j)) == imgs.zb[j - 1]);
    }
    // and the identity matrix induces the identity substitution
    CoordinateImages id = coordinate_substitution(ctx, QMatrix::identity(4 * p));
    for (int j = 1; j <= ctx.num_vars(); ++j) {
      CHECK(id.z[j - 1] == Poly::variable_z(ctx, j));
      CHECK(id.zb[j - 1] == Poly::variable_zb(ctx, j));
    }
  }
}
