#pragma once

#include <map>
#include <optional>
#include <string>

#include "sympharm/monomial.hpp"
#include "sympharm/scalar.hpp"

namespace sympharm {

/**
 * Sparse polynomial in z_1..z_{2p}, zb_1..zb_{2p} over Q(i).
 *
 * Terms are kept in a map ordered by the canonical monomial order, with
 * no stored zero coefficients, so two polynomials are equal as values
 * exactly when their term maps are equal. All operations are pure.
 */
class Poly {
 public:
  using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

  explicit Poly(Context ctx) : ctx_(ctx) {}

  static Poly zero(Context ctx) { return Poly(ctx); }
  static Poly constant(Context ctx, GaussianRational c);
  static Poly term(Context ctx, Monomial m, GaussianRational c);
  static Poly variable_z(Context ctx, int j);    // z_j, 1-based
  static Poly variable_zb(Context ctx, int j);   // zb_j, 1-based

  const Context& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // adds c * m, erasing the slot if the sum cancels
  void add_term(const Monomial& m, const GaussianRational& c);

  GaussianRational coeff(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const GaussianRational& c) const;
  // swaps alpha <-> beta and conjugates coefficients
  Poly conjugated() const;

  // Bidegree when homogeneous, nullopt otherwise; the zero polynomial
  // reports (0,0).
  std::optional<Bidegree> homogeneous_bidegree() const;
  int total_degree() const;  // 0 for the zero polynomial

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Context ctx_;
  TermMap terms_;
};

void require_same_context(const Poly& f, const Poly& g);

/// d/dz_j and d/dzb_j (1-based j).
Poly diff_z(const Poly& f, int j);
Poly diff_zb(const Poly& f, int j);
Poly mul_z(const Poly& f, int j);
Poly mul_zb(const Poly& f, int j);

/// |z|^2 = sum_j z_j zb_j.
Poly r2_poly(const Context& ctx);

/// Splits f into its (a,b)-homogeneous components; empty map iff f = 0.
std::map<Bidegree, Poly> bidegree_split(const Poly& f);

/**
 * Fischer inner product <f, g> = f(d/dzb, d/dz) conj(g) at z = 0.
 * Sesquilinear: linear in f, conjugate linear in g. On monomials,
 * <z^a zb^b, z^c zb^d> = [a=c][b=d] * a! * b!, which makes the sum
 * below a single pass over common terms.
 */
GaussianRational fischer_inner(const Poly& f, const Poly& g);

/// Canonical text form; parse(to_string(f)) == f.
std::string to_string(const Poly& f);

}  // namespace sympharm
