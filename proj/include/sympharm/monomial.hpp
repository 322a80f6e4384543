#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympharm/rational.hpp"

namespace sympharm {

/// Ambient setting: polynomials on R^{4p} ~ C^{2p} in the complex
/// variables z_1..z_{2p} and their conjugates. Every polynomial in one
/// computation shares one Context.
struct Context {
  int p = 1;

  explicit Context(int p_) : p(p_) {
    if (p < 1) throw std::invalid_argument("Context: p must be >= 1");
  }
  int num_vars() const { return 2 * p; }       // complex variables
  int real_dim() const { return 4 * p; }

  friend bool operator==(const Context&, const Context&) = default;
};

/// (a, b): degree in the z-variables and in the zb-variables. Negative
/// components denote the zero space (dim 0), which keeps operator
/// target arithmetic total.
struct Bidegree {
  int a = 0;
  int b = 0;

  int total() const { return a + b; }
  bool valid() const { return a >= 0 && b >= 0; }
  Bidegree swapped() const { return {b, a}; }

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(const Bidegree& bd);

/// dim P_{a,b} over C^{2p}; zero for invalid bidegrees.
Int poly_space_dim(const Context& ctx, const Bidegree& bd);

/**
 * Exponent vectors (alpha, beta) of a monomial z^alpha * zb^beta.
 * Canonical order of monomials of a fixed bidegree is lexicographic
 * with z1 > z2 > ... > zb1 > zb2 > ...; higher powers of earlier
 * variables come first.
 */
class Monomial {
 public:
  Monomial(std::vector<uint32_t> alpha, std::vector<uint32_t> beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.size() != beta_.size())
      throw std::invalid_argument("Monomial: alpha/beta length mismatch");
  }
  static Monomial one(const Context& ctx) {
    return Monomial(std::vector<uint32_t>(ctx.num_vars(), 0),
                    std::vector<uint32_t>(ctx.num_vars(), 0));
  }

  const std::vector<uint32_t>& alpha() const { return alpha_; }
  const std::vector<uint32_t>& beta() const { return beta_; }
  int num_vars() const { return static_cast<int>(alpha_.size()); }

  uint32_t alpha(int j) const { return alpha_[j]; }   // 0-based
  uint32_t beta(int j) const { return beta_[j]; }

  Bidegree bidegree() const;
  bool is_constant() const { return bidegree() == Bidegree{0, 0}; }

  Monomial with_alpha(int j, uint32_t v) const;
  Monomial with_beta(int j, uint32_t v) const;
  Monomial conjugated() const { return Monomial(beta_, alpha_); }

  friend Monomial operator*(const Monomial& x, const Monomial& y);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<uint32_t> alpha_;
  std::vector<uint32_t> beta_;
};

/// Strict weak order realizing the canonical monomial order above.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

/// All monomials of P_{a,b} in canonical order (empty for invalid bd).
std::vector<Monomial> monomial_basis(const Context& ctx, const Bidegree& bd);

/// alpha! * beta! (product of component factorials).
Int exponent_factorial(const Monomial& m);

}  // namespace sympharm
