#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympharm/ops.hpp"
#include "sympharm/parse.hpp"

using namespace sympharm;

namespace {
const char* kQ2 = "-1/2*z2*z3^2*zb1 - 1/2*z2^2*z3*zb4";
const char* kP1 = "1/3*z3^2*zb1^2 + 1/3*z2^2*zb4^2 + 2/3*z2*z3*zb1*zb4";
const char* kP2 = "1/2*z3^2*zb1^2 - 1/2*z2^2*zb4^2";
const char* kP3 = "1/6*z3^2*zb1^2 + 1/6*z2^2*zb4^2 - 2/3*z2*z3*zb1*zb4";
}  // namespace

TEST_CASE("generator applications from the worked example") {
  Context ctx(2);
  CHECK(OpExpr::edag().apply(parse_poly(kQ2, ctx)) == parse_poly(kP2, ctx));
  CHECK(OpExpr::e().apply(parse_poly(kP1, ctx)).is_zero());
  CHECK(OpExpr::power(OpExpr::edag(), 2).apply(parse_poly("1/12*z2^2*z3^2", ctx)) ==
        parse_poly(kP3, ctx));

  Context p1(1);
  CHECK(OpExpr::e().apply(parse_poly("zb1", p1)) == parse_poly("-z2", p1));
  CHECK(OpExpr::laplace().apply(parse_poly("z1*zb1 + z2*zb2", p1)) ==
        parse_poly("8", p1));
  CHECK(OpExpr::twist_t().apply(parse_poly("z1", ctx)) == parse_poly("-zb2", ctx));
}

TEST_CASE("euler operators and r2") {
  Context ctx(2);
  Poly f = parse_poly("z3^2*zb1^2", ctx);
  CHECK(OpExpr::euler_z().apply(f) == f.scaled(GaussianRational(2)));
  CHECK(OpExpr::euler_zb().apply(f) == f.scaled(GaussianRational(2)));
  CHECK(OpExpr::r2().apply(Poly::constant(ctx, GaussianRational(1))) == r2_poly(ctx));
}

TEST_CASE("commutator examples") {
  Context ctx(1);
  OpExpr comm = OpExpr::commutator(OpExpr::edag(), OpExpr::e());
  CHECK(comm.apply(parse_poly("z1*zb1", ctx)).is_zero());
  CHECK(comm.apply(parse_poly("z1^2", ctx)) == parse_poly("-2*z1^2", ctx));
}

TEST_CASE("sums, powers, anticommutators") {
  Context ctx(1);
  Poly f = parse_poly("z1^2*zb1", ctx);
  // EulerZ + EulerZb is multiplication by the total degree
  CHECK((OpExpr::euler_z() + OpExpr::euler_zb()).apply(f) == f.scaled(GaussianRational(3)));
  CHECK(OpExpr::power(OpExpr::dz(1), 2).apply(f) == parse_poly("2*zb1", ctx));
  CHECK(OpExpr::power(OpExpr::e(), 0).apply(f) == f);
  // {A, B} == AB + BA against direct application
  OpExpr anti = OpExpr::anticommutator(OpExpr::e(), OpExpr::edag());
  Poly direct = OpExpr::e().apply(OpExpr::edag().apply(f)) +
                OpExpr::edag().apply(OpExpr::e().apply(f));
  CHECK(anti.apply(f) == direct);
  CHECK((OpExpr::e() - OpExpr::e()).apply(f).is_zero());
}

TEST_CASE("twists") {
  Context ctx(1);
  // K: z1 -> i zb2, zb1 -> -i z2, z2 -> -i zb1, zb2 -> i z1
  CHECK(OpExpr::twist_k().apply(parse_poly("z1", ctx)) == parse_poly("1*i*zb2", ctx));
  CHECK(OpExpr::twist_k().apply(parse_poly("z2", ctx)) == parse_poly("-1*i*zb1", ctx));
  CHECK(OpExpr::twist_i().apply(parse_poly("z1*z2", ctx)) == parse_poly("-z1*z2", ctx));
  CHECK(OpExpr::twist_i().apply(parse_poly("z1*zb2", ctx)) == parse_poly("z1*zb2", ctx));

  // T twice is the parity of the total degree
  Context ctx2(2);
  Poly f = parse_poly("z1*z2*zb3", ctx2);
  Poly tt = OpExpr::twist_t().apply(OpExpr::twist_t().apply(f));
  CHECK(tt == -f);
}

TEST_CASE("operator matrices in canonical coordinates") {
  Context ctx(1);
  OpMatrix lap = op_matrix(OpExpr::laplace(), ctx, {1, 1});
  REQUIRE(lap.mat.rows() == 1);
  REQUIRE(lap.mat.cols() == 4);
  CHECK(lap.mat(0, 0) == GaussianRational(4));
  CHECK(lap.mat(0, 1) == GaussianRational(0));
  CHECK(lap.mat(0, 2) == GaussianRational(0));
  CHECK(lap.mat(0, 3) == GaussianRational(4));
  CHECK(lap.dst == Bidegree{0, 0});

  OpMatrix id = op_matrix(OpExpr::identity(), ctx, {1, 0});
  CHECK(id.mat == CMatrix::identity(2));

  // E on P_{0,1}: zb1 -> -z2, zb2 -> z1; columns over (zb1, zb2),
  // rows over (z1, z2)
  OpMatrix e = op_matrix(OpExpr::e(), ctx, {0, 1});
  REQUIRE(e.mat.rows() == 2);
  CHECK(e.mat(0, 0) == GaussianRational(0));
  CHECK(e.mat(1, 0) == GaussianRational(-1));
  CHECK(e.mat(0, 1) == GaussianRational(1));
  CHECK(e.mat(1, 1) == GaussianRational(0));

  // zero-dimensional target: Laplace on P_{1,0}
  OpMatrix degenerate = op_matrix(OpExpr::laplace(), ctx, {1, 0});
  CHECK(degenerate.mat.rows() == 0);
  CHECK(degenerate.mat.cols() == 2);
}

TEST_CASE("bidegree targets") {
  CHECK(*OpExpr::e().target({2, 2}) == Bidegree{3, 1});
  CHECK(*OpExpr::edag().target({2, 2}) == Bidegree{1, 3});
  CHECK(*OpExpr::twist_t().target({3, 1}) == Bidegree{1, 3});
  CHECK(*OpExpr::r2().target({0, 0}) == Bidegree{1, 1});
  CHECK(*OpExpr::compose(OpExpr::r2(), OpExpr::laplace()).target({1, 1}) == Bidegree{1, 1});
  // sum of incompatible shifts has no target
  CHECK(!(OpExpr::e() + OpExpr::edag()).target({2, 2}).has_value());
  // a summand that lands in the zero space is compatible with anything
  CHECK(*(OpExpr::laplace() + OpExpr::identity()).target({1, 0}) == Bidegree{1, 0});
  CHECK_THROWS_AS(op_matrix(OpExpr::e() + OpExpr::edag(), Context(1), {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("linearity of application") {
  Context ctx(2);
  Poly f = parse_poly("z1*zb2 + 2*z3^2*zb1^2", ctx);
  Poly g = parse_poly("z2*zb4 - z1*zb2", ctx);
  for (const OpExpr& op : {OpExpr::e(), OpExpr::edag(), OpExpr::laplace(), OpExpr::r2(),
                           OpExpr::twist_t(), OpExpr::twist_k()}) {
    CHECK(op.apply(f + g) == op.apply(f) + op.apply(g));
    CHECK(op.apply(f.scaled(GaussianRational{Rational(2, 3), Rational(1)})) ==
          op.apply(f).scaled(GaussianRational{Rational(2, 3), Rational(1)}));
  }
}

TEST_CASE("adjointness of E and Edag under the Fischer product") {
  Context ctx(2);
  for (const Bidegree& bd : std::vector<Bidegree>{{1, 1}, {2, 1}, {1, 2}}) {
    auto ps = monomial_basis(ctx, bd);
    auto qs = monomial_basis(ctx, {bd.a + 1, bd.b - 1});
    for (const Monomial& mp : ps)
      for (const Monomial& mq : qs) {
        Poly P = Poly::term(ctx, mp, GaussianRational(1));
        Poly Q = Poly::term(ctx, mq, GaussianRational(1));
        CHECK(fischer_inner(OpExpr::e().apply(P), Q) ==
              fischer_inner(P, OpExpr::edag().apply(Q)));
      }
  }
}

TEST_CASE("operator expression parsing") {
  Context ctx(2);
  Poly q2 = parse_poly(kQ2, ctx);
  CHECK(parse_op_expr("Edag").apply(q2) == parse_poly(kP2, ctx));
  CHECK(parse_op_expr("Edag^2").apply(parse_poly("1/12*z2^2*z3^2", ctx)) ==
        parse_poly(kP3, ctx));
  CHECK(parse_op_expr("Laplace.R2").apply(Poly::constant(ctx, GaussianRational(1))) ==
        Poly::constant(ctx, GaussianRational(16)));  // Laplace r^2 = 2m = 16 at p=2
  CHECK(parse_op_expr("Dz1").apply(parse_poly("z1^3", ctx)) == parse_poly("3*z1^2", ctx));
  CHECK(parse_op_expr("Dzb2 . Dzb2").apply(parse_poly("zb2^2", ctx)) ==
        parse_poly("2", ctx));
  CHECK(parse_op_expr("T^2.I").apply(parse_poly("z1", ctx)) ==
        parse_poly("-1*i*z1", ctx));
  CHECK(parse_op_expr("EulerZ").apply(parse_poly("z1*z2", ctx)) ==
        parse_poly("2*z1*z2", ctx));
  CHECK(parse_op_expr("Id").apply(q2) == q2);
  CHECK_THROWS_AS(parse_op_expr("Frobenius"), ParseError);
  CHECK_THROWS_AS(parse_op_expr("Edag^"), ParseError);
  CHECK_THROWS_AS(parse_op_expr(""), ParseError);
  CHECK_THROWS_AS(parse_op_expr("E..E"), ParseError);
}

TEST_CASE("index validation against the context") {
  Context ctx(1);
  CHECK_THROWS_AS(OpExpr::dz(3).apply(Poly::variable_z(ctx, 1)), std::invalid_argument);
  CHECK_THROWS_AS(OpExpr::mul_zb(0).apply(Poly::variable_z(ctx, 1)), std::invalid_argument);
}
