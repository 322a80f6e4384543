#include "sympharm/harmonic.hpp"

#include <stdexcept>

namespace sympharm {

namespace {

GradedBasis basis_from_kernel(const Context& ctx, const Bidegree& bd,
                              std::vector<Monomial> monomials, CMatrix kernel,
                              std::string space_tag) {
  GradedBasis out{ctx, bd, std::move(space_tag), std::move(monomials), {}, std::move(kernel)};
  out.elements.reserve(out.coords.cols());
  for (size_t k = 0; k < out.coords.cols(); ++k) {
    Poly f(ctx);
    for (size_t i = 0; i < out.monomials.size(); ++i)
      f.add_term(out.monomials[i], out.coords(i, k));
    out.elements.push_back(std::move(f));
  }
  return out;
}

}  // namespace

GradedBasis nullspace(const OpMatrix& mat, std::string space_tag) {
  return basis_from_kernel(mat.ctx, mat.src, mat.src_basis, kernel_basis(mat.mat),
                           std::move(space_tag));
}

GradedBasis stacked_nullspace(const std::vector<OpMatrix>& mats, std::string space_tag) {
  if (mats.empty()) throw std::invalid_argument("stacked_nullspace: no operators");
  const OpMatrix& first = mats.front();
  size_t rows = 0;
  for (const OpMatrix& m : mats) {
    if (m.src != first.src || !(m.ctx == first.ctx))
      throw std::invalid_argument("stacked_nullspace: source mismatch");
    rows += m.mat.rows();
  }
  CMatrix stacked(rows, first.src_basis.size());
  size_t r0 = 0;
  for (const OpMatrix& m : mats) {
    for (size_t i = 0; i < m.mat.rows(); ++i)
      for (size_t j = 0; j < m.mat.cols(); ++j) stacked(r0 + i, j) = m.mat(i, j);
    r0 += m.mat.rows();
  }
  return basis_from_kernel(first.ctx, first.src, first.src_basis, kernel_basis(stacked),
                           std::move(space_tag));
}

GradedBasis harmonic_basis(const Context& ctx, const Bidegree& bd) {
  return nullspace(op_matrix(OpExpr::laplace(), ctx, bd), "H");
}

GradedBasis symplectic_harmonic_basis(const Context& ctx, const Bidegree& bd, bool adjoint) {
  std::vector<OpMatrix> mats;
  mats.push_back(op_matrix(OpExpr::laplace(), ctx, bd));
  mats.push_back(op_matrix(adjoint ? OpExpr::edag() : OpExpr::e(), ctx, bd));
  return stacked_nullspace(mats, adjoint ? "HSdag" : "HS");
}

CMatrix coordinate_column(const Poly& f, const std::vector<Monomial>& monomials) {
  CMatrix col(monomials.size(), 1);
  std::map<Monomial, size_t, MonomialOrder> index;
  for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  for (const auto& [m, c] : f.terms()) {
    auto it = index.find(m);
    if (it == index.end())
      throw std::invalid_argument("polynomial has a term outside the bidegree slice");
    col(it->second, 0) = c;
  }
  return col;
}

std::shared_ptr<const GradedBasis> BasisCache::harmonic(const Bidegree& bd) const {
  Key key{{bd.a, bd.b}, 0};
  {
    std::lock_guard lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto value = std::make_shared<const GradedBasis>(harmonic_basis(ctx_, bd));
  std::lock_guard lk(mu_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const GradedBasis> BasisCache::symplectic(const Bidegree& bd,
                                                          bool adjoint) const {
  Key key{{bd.a, bd.b}, adjoint ? 2 : 1};
  {
    std::lock_guard lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto value =
      std::make_shared<const GradedBasis>(symplectic_harmonic_basis(ctx_, bd, adjoint));
  std::lock_guard lk(mu_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

Poly HarmonicDecomp::reassemble() const {
  Poly acc(input.ctx());
  Poly r2 = r2_poly(input.ctx());
  for (const auto& [j, h] : parts) {
    Poly term = h;
    for (int k = 0; k < j; ++k) term = term * r2;
    acc += term;
  }
  return acc;
}

HarmonicDecomp harmonic_decompose(const Poly& f, const BasisCache& cache) {
  const Context& ctx = cache.ctx();
  if (!(f.ctx() == ctx)) throw std::invalid_argument("harmonic_decompose: context mismatch");
  HarmonicDecomp out{f, {}};
  if (f.is_zero()) return out;
  auto bd_opt = f.homogeneous_bidegree();
  if (!bd_opt)
    throw std::invalid_argument("harmonic_decompose: input is not homogeneous; split by bidegree first");
  Bidegree bd = *bd_opt;
  int jmax = std::min(bd.a, bd.b);

  std::vector<Monomial> monomials = monomial_basis(ctx, bd);
  std::vector<std::shared_ptr<const GradedBasis>> bases;
  size_t total = 0;
  for (int j = 0; j <= jmax; ++j) {
    bases.push_back(cache.harmonic(Bidegree{bd.a - j, bd.b - j}));
    total += bases.back()->dim();
  }
  if (total != monomials.size())
    throw std::logic_error("harmonic_decompose: graded bases do not fill P_" + to_string(bd));

  // columns: coordinates of |z|^{2j} * (basis of H_{a-j,b-j})
  CMatrix system(monomials.size(), total);
  Poly r2 = r2_poly(ctx);
  std::vector<Poly> lifted;
  lifted.reserve(total);
  {
    Poly r2j = Poly::constant(ctx, GaussianRational(1));
    for (int j = 0; j <= jmax; ++j) {
      for (const Poly& e : bases[j]->elements) lifted.push_back(e * r2j);
      r2j = r2j * r2;
    }
  }
  std::map<Monomial, size_t, MonomialOrder> index;
  for (size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  for (size_t k = 0; k < lifted.size(); ++k)
    for (const auto& [m, c] : lifted[k].terms()) system(index.at(m), k) = c;

  auto sol = solve(system, coordinate_column(f, monomials));
  if (!sol)
    throw std::logic_error("harmonic_decompose: solve failed on a complete graded basis");

  size_t col = 0;
  for (int j = 0; j <= jmax; ++j) {
    Poly h(ctx);
    for (const Poly& e : bases[j]->elements) h += e.scaled((*sol)(col++, 0));
    if (!h.is_zero()) out.parts.emplace_back(j, std::move(h));
  }
  return out;
}

}  // namespace sympharm
