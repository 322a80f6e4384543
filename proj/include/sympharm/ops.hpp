#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympharm/linalg.hpp"
#include "sympharm/poly.hpp"

namespace sympharm {

/**
 * A composable linear operator on polynomials: named generators plus
 * scalar multiples, sums, compositions and powers, held as an immutable
 * expression tree. Application is symbolic and term-local; matrices are
 * materialized per bidegree only when asked for.
 *
 * Generator conventions (1-based variable pairs (z_{2k-1}, z_{2k})):
 *   Laplace = 4 * sum_j d/dz_j d/dzb_j
 *   E       = sum_k ( z_{2k-1} d/dzb_{2k} - z_{2k} d/dzb_{2k-1} )
 *   Edag    = sum_k ( zb_{2k} d/dz_{2k-1} - zb_{2k-1} d/dz_{2k} )
 *   EulerZ  = sum_j z_j d/dz_j,  EulerZb = sum_j zb_j d/dzb_j
 *   TwistT  : (z_{2k-1}, z_{2k}, zb_{2k-1}, zb_{2k})
 *             -> (-zb_{2k}, zb_{2k-1}, -z_{2k}, z_{2k-1})
 *   TwistK  : (z_{2k-1}, z_{2k}, zb_{2k-1}, zb_{2k})
 *             -> (i zb_{2k}, -i zb_{2k-1}, -i z_{2k}, i z_{2k-1})
 *   TwistI  : z_j -> i z_j, zb_j -> -i zb_j
 */
class OpExpr {
 public:
  enum class Gen {
    Dz,
    Dzb,
    MulZ,
    MulZb,
    Laplace,
    R2,
    EulerZ,
    EulerZb,
    E,
    Edag,
    TwistT,
    TwistK,
    TwistI,
    Identity,
  };

  static OpExpr dz(int j) { return generator(Gen::Dz, j); }
  static OpExpr dzb(int j) { return generator(Gen::Dzb, j); }
  static OpExpr mul_z(int j) { return generator(Gen::MulZ, j); }
  static OpExpr mul_zb(int j) { return generator(Gen::MulZb, j); }
  static OpExpr laplace() { return generator(Gen::Laplace); }
  static OpExpr r2() { return generator(Gen::R2); }
  static OpExpr euler_z() { return generator(Gen::EulerZ); }
  static OpExpr euler_zb() { return generator(Gen::EulerZb); }
  static OpExpr e() { return generator(Gen::E); }
  static OpExpr edag() { return generator(Gen::Edag); }
  static OpExpr twist_t() { return generator(Gen::TwistT); }
  static OpExpr twist_k() { return generator(Gen::TwistK); }
  static OpExpr twist_i() { return generator(Gen::TwistI); }
  static OpExpr identity() { return generator(Gen::Identity); }

  static OpExpr generator(Gen g, int index = 0);

  OpExpr scaled(GaussianRational c) const;
  static OpExpr sum(std::vector<OpExpr> parts);
  /// compose(a, b) applies b first: (a o b) f = a(b(f)).
  static OpExpr compose(OpExpr a, OpExpr b);
  static OpExpr power(OpExpr a, unsigned n);
  /// a o b - b o a
  static OpExpr commutator(OpExpr a, OpExpr b);
  static OpExpr anticommutator(OpExpr a, OpExpr b);

  friend OpExpr operator+(OpExpr a, OpExpr b) { return sum({std::move(a), std::move(b)}); }
  friend OpExpr operator-(OpExpr a, OpExpr b) {
    return sum({std::move(a), b.scaled(GaussianRational(-1))});
  }
  friend OpExpr operator*(OpExpr a, OpExpr b) { return compose(std::move(a), std::move(b)); }

  Poly apply(const Poly& f) const;

  /**
   * Bidegree of the image of P_src, or nullopt when summands disagree.
   * Negative components denote zero spaces; summands whose target is a
   * zero space are compatible with anything.
   */
  std::optional<Bidegree> target(const Bidegree& src) const;

  std::string name() const;  // diagnostic rendering of the tree

 private:
  struct Node;
  explicit OpExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Operator matrix on a bidegree slice: columns are the images of the
/// canonical monomials of P_src in the canonical coordinates of P_dst.
struct OpMatrix {
  Context ctx;
  Bidegree src;
  Bidegree dst;
  std::vector<Monomial> src_basis;
  std::vector<Monomial> dst_basis;
  CMatrix mat;
};

OpMatrix op_matrix(const OpExpr& op, const Context& ctx, const Bidegree& src);

/**
 * CLI operator grammar: names Dz<k>, Dzb<k>, E, Edag, Laplace, R2,
 * EulerZ, EulerZb, T, K, I, Id; composition spelled "." and integer
 * powers "^", e.g. "Edag^2.E".
 */
OpExpr parse_op_expr(const std::string& text);

}  // namespace sympharm
