#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "sympharm/ops.hpp"

namespace sympharm {

/**
 * A deterministic ordered basis of a subspace of P_{a,b}, together with
 * its coordinate matrix over the canonical monomial basis (one column
 * per element). Bases coming out of kernel computations are in the
 * reduced-echelon-derived canonical form, so equal inputs give
 * identical bases.
 */
struct GradedBasis {
  Context ctx;
  Bidegree bd;
  std::string space;  // "P", "H", "HS", "HSdag", ...
  std::vector<Monomial> monomials;
  std::vector<Poly> elements;
  CMatrix coords;  // monomials.size() x elements.size()

  size_t dim() const { return elements.size(); }
};

/// Kernel of an operator slice as polynomials of the source bidegree.
GradedBasis nullspace(const OpMatrix& mat, std::string space_tag = "ker");

/// Kernel of several operators stacked over the same source bidegree.
GradedBasis stacked_nullspace(const std::vector<OpMatrix>& mats, std::string space_tag);

/// Basis of H_{a,b} = Ker Laplace on P_{a,b}.
GradedBasis harmonic_basis(const Context& ctx, const Bidegree& bd);

/// Basis of H^S_{a,b} = Ker(Laplace, E) (adjoint: Ker(Laplace, Edag)).
GradedBasis symplectic_harmonic_basis(const Context& ctx, const Bidegree& bd, bool adjoint);

/// Coordinates of f over the canonical monomials of its bidegree slice.
CMatrix coordinate_column(const Poly& f, const std::vector<Monomial>& monomials);

/**
 * Lock-protected per-context memo of computed bases. Results are value
 * identical regardless of which thread computes them first.
 */
class BasisCache {
 public:
  explicit BasisCache(Context ctx) : ctx_(ctx) {}

  const Context& ctx() const { return ctx_; }

  std::shared_ptr<const GradedBasis> harmonic(const Bidegree& bd) const;
  std::shared_ptr<const GradedBasis> symplectic(const Bidegree& bd, bool adjoint) const;

 private:
  using Key = std::pair<std::pair<int, int>, int>;

  Context ctx_;
  mutable std::mutex mu_;
  mutable std::map<Key, std::shared_ptr<const GradedBasis>> memo_;
};

/**
 * f = sum_j |z|^{2j} h_j with every h_j harmonic; j runs over
 * 0..min(a,b) and zero parts are dropped. Exact coefficients come from
 * one linear solve against the concatenated bases |z|^{2j} H_{a-j,b-j},
 * which span P_{a,b}; a solve failure means an internal bug and throws.
 */
struct HarmonicDecomp {
  Poly input;
  std::vector<std::pair<int, Poly>> parts;  // (j, h_j)

  Poly reassemble() const;
};

HarmonicDecomp harmonic_decompose(const Poly& f, const BasisCache& cache);

}  // namespace sympharm
