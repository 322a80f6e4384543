#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympharm/harmonic.hpp"

namespace sympharm {

/// Which one-sided kernel family carries the parts of a decomposition
/// of H_{a,b}: Edag powers of HS spaces (a >= b) or E powers of HSdag
/// spaces (a <= b). Ties at a == b default to the HS form.
enum class Orientation { EdagOnHS, EOnHSdag };

/**
 * h = sum_t Edag^t h_t with h_t in HS_{a+t,b-t} (or the mirrored E/HSdag
 * form), t in 0..min(a,b), zero parts dropped. Every part is harmonic
 * and killed by E (resp. Edag).
 */
struct SymplecticDecomp {
  Poly input;
  Orientation orientation = Orientation::EdagOnHS;
  std::vector<std::pair<int, Poly>> parts;  // (t, h_t)

  /// Edag^t h_t (resp. E^t h_t): the component inside H_{a,b}.
  Poly assembled_part(size_t k) const;
  Poly reassemble() const;
};

/**
 * Peel-off decomposition of a harmonic bidegree-homogeneous h: walking
 * t from min(a,b) down, E^t maps the remainder onto c_t h_t with
 * c_t = t! (a-b+2t)!/(a-b+t)!, after which Edag^t h_t is subtracted.
 * Throws std::invalid_argument for non-harmonic input and
 * std::logic_error if the final remainder is nonzero.
 */
SymplecticDecomp symplectic_decompose(const Poly& h, const BasisCache& cache,
                                      std::optional<Orientation> orientation = std::nullopt);

/// Fischer-orthogonal projection of f onto span(basis), by exact Gram solve.
Poly fischer_project(const Poly& f, const std::vector<Poly>& basis);

/// Full symplectic Fischer decomposition of an arbitrary polynomial:
/// bidegree split, then r^2-harmonic split, then symplectic split.
struct FullDecomp {
  struct Part {
    Bidegree bd;  // bidegree of the component h itself
    int j = 0;    // power of |z|^2
    int t = 0;    // power of Edag (resp. E)
    Orientation orientation = Orientation::EdagOnHS;
    Poly h;
  };

  Poly input;
  std::vector<Part> parts;  // sorted by (bd, j, t)

  Poly reassemble() const;
};

FullDecomp full_decompose(const Poly& f, const BasisCache& cache);

/// dim H_{a,b}: binomial difference driven by the surjectivity of the
/// Laplacian between bidegree slices.
Int harmonic_dim_formula(const Context& ctx, const Bidegree& bd);

/// dim HS_{a,b} (a >= b; mirrored otherwise) as the four-term
/// inclusion-exclusion over P-space dimensions.
Int hs_dim_difference(const Context& ctx, const Bidegree& bd);

/// Factorial closed form of the same dimension, defined for p >= 2.
std::optional<Int> hs_dim_product(const Context& ctx, const Bidegree& bd);

/// Variant closed form that circulates with an extra (2p-1)! factor;
/// reported alongside the exact value, never used for computation.
std::optional<Int> hs_dim_alt_product(const Context& ctx, const Bidegree& bd);

/**
 * Weyl dimension of the irreducible sp(2p, C)-module with highest
 * weight (l1, l2, 0, ..., 0): product of (l_i^2 - l_j^2)/(m_i^2 - m_j^2)
 * over i < j times product of l_i/m_i, with m_i = p-i+1. For p = 1 a
 * second nonzero component has no such module and the dimension is 0.
 */
Int weyl_dim(int p, int l1, int l2);

/// sum over the branching weights (max+j, min-j), j = 0..min(a,b).
Int branching_sum(const Context& ctx, const Bidegree& bd);

/// Dimension concordance for one bidegree: the exact rank of the
/// stacked kernel against the closed formulas and the branching sum.
struct DimReport {
  int p = 1;
  Bidegree bd;
  Int dim_H;           // binomial difference
  Int dim_H_rank;      // rank oracle for Ker Laplace
  Int dim_HS_formula;  // inclusion-exclusion difference form
  Int dim_HS_rank;     // rank oracle for the stacked kernel
  Int dim_weyl;        // Weyl product at (max, min)
  Int branching;       // branching sum

  bool consistent() const {
    return dim_H == dim_H_rank && dim_HS_formula == dim_HS_rank &&
           dim_HS_rank == dim_weyl && branching == dim_H;
  }
};

DimReport dims(const BasisCache& cache, const Bidegree& bd);

/// One subspace-equality (or kernel) verification outcome.
struct IsoCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/**
 * Exact column-space comparisons on a bidegree slice: the twist T maps
 * HS_{a,b} onto HSdag_{b,a}; E^{a-b} maps HSdag_{b,a} onto HS_{a,b}
 * for a > b; and inside H_{k,k} (resp. H_{k,k+1}) the Edag^j images of
 * HS agree with the E^j images of HSdag, j = 0..max_j.
 */
std::vector<IsoCheck> isomorphism_checks(const BasisCache& cache, const Bidegree& bd,
                                         int max_j);

}  // namespace sympharm
