#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "sympharm/harmonic.hpp"
#include "sympharm/parse.hpp"
#include "sympharm/symplectic.hpp"

using namespace sympharm;

TEST_CASE("nullspace of the Laplacian slice at p=1, (1,1)") {
  Context ctx(1);
  GradedBasis basis = nullspace(op_matrix(OpExpr::laplace(), ctx, {1, 1}), "H");
  REQUIRE(basis.dim() == 3);
  // spans {z1*zb2, z2*zb1, z1*zb1 - z2*zb2}
  CHECK(basis.elements[0] == parse_poly("z1*zb2", ctx));
  CHECK(basis.elements[1] == parse_poly("z2*zb1", ctx));
  CHECK(basis.elements[2] == parse_poly("-z1*zb1 + z2*zb2", ctx));
  for (const Poly& e : basis.elements) CHECK(OpExpr::laplace().apply(e).is_zero());
}

TEST_CASE("nullspace edge cases") {
  Context ctx(1);
  CHECK(nullspace(op_matrix(OpExpr::identity(), ctx, {1, 1})).dim() == 0);
  // Laplace kills all of P_{1,0}
  GradedBasis all = nullspace(op_matrix(OpExpr::laplace(), ctx, {1, 0}), "H");
  CHECK(all.dim() == 2);
}

TEST_CASE("harmonic basis dimensions match the closed formula") {
  CHECK(harmonic_basis(Context(1), {1, 1}).dim() == 3);
  CHECK(harmonic_basis(Context(2), {2, 2}).dim() == 84);
  for (int k = 0; k <= 4; ++k)
    CHECK(harmonic_basis(Context(1), {k, 0}).dim() == static_cast<size_t>(k + 1));

  for (int p = 1; p <= 2; ++p) {
    Context ctx(p);
    for (int d = 0; d <= (p == 1 ? 6 : 4); ++d)
      for (int a = d; a >= 0; --a) {
        Bidegree bd{a, d - a};
        CHECK(Int(harmonic_basis(ctx, bd).dim()) == harmonic_dim_formula(ctx, bd));
      }
  }
}

TEST_CASE("harmonic decomposition of z1 zb1 at p=1") {
  Context ctx(1);
  BasisCache cache{ctx};
  HarmonicDecomp d = harmonic_decompose(parse_poly("z1*zb1", ctx), cache);
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0].first == 0);
  CHECK(d.parts[0].second == parse_poly("1/2*z1*zb1 - 1/2*z2*zb2", ctx));
  CHECK(d.parts[1].first == 1);
  CHECK(d.parts[1].second == parse_poly("1/2", ctx));
  CHECK(d.reassemble() == parse_poly("z1*zb1", ctx));
}

TEST_CASE("harmonic input and zero input") {
  Context ctx(2);
  BasisCache cache{ctx};
  Poly h = parse_poly("z3^2*zb1^2", ctx);
  HarmonicDecomp d = harmonic_decompose(h, cache);
  REQUIRE(d.parts.size() == 1);
  CHECK(d.parts[0] == std::pair{0, h});

  CHECK(harmonic_decompose(Poly::zero(ctx), cache).parts.empty());
  CHECK_THROWS_AS(harmonic_decompose(parse_poly("z1 + z1*zb1", ctx), cache),
                  std::invalid_argument);
}

TEST_CASE("round trip with harmonic parts on random homogeneous inputs") {
  Context ctx(2);
  BasisCache cache{ctx};
  std::mt19937_64 eng(1234);
  std::vector<Bidegree> bds;
  for (int d = 0; d <= 5; ++d)
    for (int a = d; a >= 0; --a) bds.push_back({a, d - a});
  for (int n = 0; n < 100; ++n) {
    Bidegree bd = bds[eng() % bds.size()];
    auto monos = monomial_basis(ctx, bd);
    Poly f(ctx);
    for (int t = 0; t < 5; ++t) {
      long num = static_cast<long>(eng() % 19) - 9;
      long den = static_cast<long>(eng() % 3) + 1;
      long im = static_cast<long>(eng() % 19) - 9;
      f.add_term(monos[eng() % monos.size()], {Rational(num, den), Rational(im, den)});
    }
    HarmonicDecomp d = harmonic_decompose(f, cache);
    CHECK(d.reassemble() == f);
    for (const auto& [j, h] : d.parts) {
      CHECK(OpExpr::laplace().apply(h).is_zero());
      if (!h.is_zero()) CHECK(*h.homogeneous_bidegree() == Bidegree{bd.a - j, bd.b - j});
    }
  }
}

TEST_CASE("graded bases are deterministic and independent") {
  Context ctx(2);
  GradedBasis b1 = harmonic_basis(ctx, {2, 1});
  GradedBasis b2 = harmonic_basis(ctx, {2, 1});
  REQUIRE(b1.dim() == b2.dim());
  for (size_t k = 0; k < b1.dim(); ++k) CHECK(b1.elements[k] == b2.elements[k]);
  CHECK(rank(b1.coords) == b1.dim());
}

TEST_CASE("basis cache is safe under concurrent lookups") {
  BasisCache cache{Context(2)};
  std::vector<std::thread> workers;
  std::vector<size_t> dims(8, 0);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&cache, &dims, t] {
      Bidegree bd{2, 2};
      auto basis = t % 2 ? cache.harmonic(bd) : cache.symplectic(bd, false);
      dims[t] = basis->dim();
    });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(dims[t] == (t % 2 ? 84 : 14));
}

TEST_CASE("basis cache returns shared values") {
  BasisCache cache{Context(2)};
  auto a = cache.harmonic({2, 2});
  auto b = cache.harmonic({2, 2});
  CHECK(a.get() == b.get());
  CHECK(a->dim() == 84);
  auto hs = cache.symplectic({2, 2}, false);
  CHECK(hs->dim() == 14);
}
