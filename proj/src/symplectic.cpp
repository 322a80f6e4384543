#include "sympharm/symplectic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sympharm {

namespace {

Poly apply_power(const OpExpr& op, Poly f, int t) {
  for (int k = 0; k < t; ++k) f = op.apply(f);
  return f;
}

Rational peel_constant(int t, int diff) {
  // t! * (diff + 2t)! / (diff + t)!  with diff = |a - b| >= 0
  Int c = factorial(static_cast<unsigned>(t));
  for (int v = diff + t + 1; v <= diff + 2 * t; ++v) c *= v;
  return Rational(c);
}

}  // namespace

Poly SymplecticDecomp::assembled_part(size_t k) const {
  const auto& [t, h] = parts[k];
  const OpExpr op = orientation == Orientation::EdagOnHS ? OpExpr::edag() : OpExpr::e();
  return apply_power(op, h, t);
}

Poly SymplecticDecomp::reassemble() const {
  Poly acc(input.ctx());
  for (size_t k = 0; k < parts.size(); ++k) acc += assembled_part(k);
  return acc;
}

SymplecticDecomp symplectic_decompose(const Poly& h, const BasisCache& cache,
                                      std::optional<Orientation> orientation) {
  if (!(h.ctx() == cache.ctx()))
    throw std::invalid_argument("symplectic_decompose: context mismatch");
  auto bd_opt = h.homogeneous_bidegree();
  if (!bd_opt)
    throw std::invalid_argument("symplectic_decompose: input is not bidegree homogeneous");
  if (!OpExpr::laplace().apply(h).is_zero())
    throw std::invalid_argument("symplectic_decompose: input is not harmonic");
  Bidegree bd = *bd_opt;

  Orientation orient =
      orientation.value_or(bd.a >= bd.b ? Orientation::EdagOnHS : Orientation::EOnHSdag);
  if (orient == Orientation::EdagOnHS && bd.a < bd.b)
    throw std::invalid_argument("symplectic_decompose: Edag/HS orientation needs a >= b");
  if (orient == Orientation::EOnHSdag && bd.b < bd.a)
    throw std::invalid_argument("symplectic_decompose: E/HSdag orientation needs a <= b");

  const bool hs_side = orient == Orientation::EdagOnHS;
  const OpExpr peel = hs_side ? OpExpr::e() : OpExpr::edag();
  const OpExpr assemble = hs_side ? OpExpr::edag() : OpExpr::e();
  const int diff = hs_side ? bd.a - bd.b : bd.b - bd.a;

  SymplecticDecomp out{h, orient, {}};
  Poly remainder = h;
  for (int t = std::min(bd.a, bd.b); t >= 0; --t) {
    Poly g = apply_power(peel, remainder, t);
    if (g.is_zero()) continue;
    Poly part = g.scaled(GaussianRational(Rational(1) / peel_constant(t, diff)));
    out.parts.emplace_back(t, part);
    remainder -= apply_power(assemble, part, t);
  }
  if (!remainder.is_zero())
    throw std::logic_error("symplectic_decompose: nonzero remainder after peel-off");
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

Poly fischer_project(const Poly& f, const std::vector<Poly>& basis) {
  if (basis.empty()) return Poly::zero(f.ctx());
  size_t n = basis.size();
  CMatrix gram(n, n);
  CMatrix rhs(n, 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) gram(i, j) = fischer_inner(basis[j], basis[i]);
    rhs(i, 0) = fischer_inner(f, basis[i]);
  }
  auto sol = solve(gram, rhs);
  if (!sol) throw std::logic_error("fischer_project: singular Gram matrix");
  Poly out(f.ctx());
  for (size_t j = 0; j < n; ++j) out += basis[j].scaled((*sol)(j, 0));
  return out;
}

Poly FullDecomp::reassemble() const {
  Poly acc(input.ctx());
  Poly r2 = r2_poly(input.ctx());
  for (const Part& part : parts) {
    const OpExpr op =
        part.orientation == Orientation::EdagOnHS ? OpExpr::edag() : OpExpr::e();
    Poly term = apply_power(op, part.h, part.t);
    for (int k = 0; k < part.j; ++k) term = term * r2;
    acc += term;
  }
  return acc;
}

FullDecomp full_decompose(const Poly& f, const BasisCache& cache) {
  FullDecomp out{f, {}};
  for (const auto& [bd, component] : bidegree_split(f)) {
    HarmonicDecomp hd = harmonic_decompose(component, cache);
    for (const auto& [j, hj] : hd.parts) {
      SymplecticDecomp sd = symplectic_decompose(hj, cache);
      for (const auto& [t, ht] : sd.parts)
        out.parts.push_back(FullDecomp::Part{*ht.homogeneous_bidegree(), j, t,
                                             sd.orientation, ht});
    }
  }
  std::sort(out.parts.begin(), out.parts.end(), [](const auto& x, const auto& y) {
    return std::tie(x.bd, x.j, x.t) < std::tie(y.bd, y.j, y.t);
  });
  return out;
}

Int harmonic_dim_formula(const Context& ctx, const Bidegree& bd) {
  if (!bd.valid()) return 0;
  return poly_space_dim(ctx, bd) - poly_space_dim(ctx, Bidegree{bd.a - 1, bd.b - 1});
}

Int hs_dim_difference(const Context& ctx, const Bidegree& bd) {
  if (!bd.valid()) return 0;
  int a = std::max(bd.a, bd.b);
  int b = std::min(bd.a, bd.b);
  return poly_space_dim(ctx, {a, b}) - poly_space_dim(ctx, {a - 1, b - 1}) -
         poly_space_dim(ctx, {a + 1, b - 1}) + poly_space_dim(ctx, {a, b - 2});
}

std::optional<Int> hs_dim_product(const Context& ctx, const Bidegree& bd) {
  if (ctx.p < 2 || !bd.valid()) return std::nullopt;
  unsigned p = static_cast<unsigned>(ctx.p);
  unsigned a = static_cast<unsigned>(std::max(bd.a, bd.b));
  unsigned b = static_cast<unsigned>(std::min(bd.a, bd.b));
  Rational num = Rational(2 * p - 1) * (2 * p - 2) * (a - b + 1) * (a + b + 2 * p - 1) *
                 factorial(a + 2 * p - 2) * factorial(b + 2 * p - 3);
  Rational den = Rational(factorial(2 * p - 1) * factorial(2 * p - 1)) *
                 factorial(a + 1) * factorial(b);
  Rational v = num / den;
  if (boost::multiprecision::denominator(v) != 1)
    throw std::logic_error("hs_dim_product: non-integral value");
  return boost::multiprecision::numerator(v);
}

std::optional<Int> hs_dim_alt_product(const Context& ctx, const Bidegree& bd) {
  if (ctx.p < 2 || !bd.valid()) return std::nullopt;
  unsigned p = static_cast<unsigned>(ctx.p);
  unsigned a = static_cast<unsigned>(std::max(bd.a, bd.b));
  unsigned b = static_cast<unsigned>(std::min(bd.a, bd.b));
  Rational num = Rational(a - b + 1) * (a + b + 2 * p - 1) * factorial(a + 2 * p - 2) *
                 factorial(b + 2 * p - 3);
  Rational den = Rational(factorial(2 * p - 3)) * factorial(a + 1) * factorial(b);
  Rational v = num / den;
  if (boost::multiprecision::denominator(v) != 1)
    throw std::logic_error("hs_dim_alt_product: non-integral value");
  return boost::multiprecision::numerator(v);
}

Int weyl_dim(int p, int l1, int l2) {
  if (l1 < l2 || l2 < 0) throw std::invalid_argument("weyl_dim: weight must be dominant");
  if (p == 1) return l2 > 0 ? Int(0) : Int(l1 + 1);
  std::vector<Int> l(p), m(p);
  for (int i = 0; i < p; ++i) {
    int lambda = i == 0 ? l1 : (i == 1 ? l2 : 0);
    m[i] = p - i;
    l[i] = lambda + p - i;
  }
  Rational dim = 1;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j)
      dim *= Rational(l[i] * l[i] - l[j] * l[j], m[i] * m[i] - m[j] * m[j]);
    dim *= Rational(l[i], m[i]);
  }
  if (boost::multiprecision::denominator(dim) != 1)
    throw std::logic_error("weyl_dim: non-integral value");
  return boost::multiprecision::numerator(dim);
}

Int branching_sum(const Context& ctx, const Bidegree& bd) {
  int a = std::max(bd.a, bd.b);
  int b = std::min(bd.a, bd.b);
  Int acc = 0;
  for (int j = 0; j <= b; ++j) acc += weyl_dim(ctx.p, a + j, b - j);
  return acc;
}

DimReport dims(const BasisCache& cache, const Bidegree& bd) {
  const Context& ctx = cache.ctx();
  DimReport r;
  r.p = ctx.p;
  r.bd = bd;
  r.dim_H = harmonic_dim_formula(ctx, bd);
  r.dim_H_rank = Int(cache.harmonic(bd)->dim());
  r.dim_HS_formula = hs_dim_difference(ctx, bd);
  r.dim_HS_rank = Int(cache.symplectic(bd, bd.a < bd.b)->dim());
  r.dim_weyl = weyl_dim(ctx.p, std::max(bd.a, bd.b), std::min(bd.a, bd.b));
  r.branching = branching_sum(ctx, bd);
  return r;
}

namespace {

CMatrix image_coords(const OpExpr& op, int power, const std::vector<Poly>& elems,
                     const std::vector<Monomial>& target) {
  CMatrix out(target.size(), elems.size());
  std::map<Monomial, size_t, MonomialOrder> index;
  for (size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  for (size_t k = 0; k < elems.size(); ++k) {
    Poly img = apply_power(op, elems[k], power);
    for (const auto& [m, c] : img.terms()) out(index.at(m), k) = c;
  }
  return out;
}

bool same_column_space(const CMatrix& a, const CMatrix& b, std::string* why) {
  if (!spans(a, b)) {
    if (why) *why = "right side not contained in left span";
    return false;
  }
  if (!spans(b, a)) {
    if (why) *why = "left side not contained in right span";
    return false;
  }
  return true;
}

}  // namespace

std::vector<IsoCheck> isomorphism_checks(const BasisCache& cache, const Bidegree& bd,
                                         int max_j) {
  const Context& ctx = cache.ctx();
  std::vector<IsoCheck> out;
  const int a = bd.a;
  const int b = bd.b;

  auto run = [&](const std::string& name, const CMatrix& lhs, const CMatrix& rhs) {
    IsoCheck c{name, false, {}};
    std::ostringstream det;
    det << "ranks " << rank(lhs) << "/" << rank(rhs);
    std::string why;
    c.pass = lhs.cols() == rhs.cols() && same_column_space(lhs, rhs, &why);
    if (!why.empty()) det << "; " << why;
    c.detail = det.str();
    out.push_back(std::move(c));
  };

  // T maps HS_{a,b} onto HSdag_{b,a}
  {
    auto hs = cache.symplectic(bd, a < b);
    auto target = monomial_basis(ctx, bd.swapped());
    CMatrix t_img = image_coords(OpExpr::twist_t(), 1, hs->elements, target);
    auto other = cache.symplectic(bd.swapped(), !(a < b));
    std::ostringstream name;
    name << "T[" << hs->space << to_string(bd) << "] == " << other->space
         << to_string(bd.swapped());
    run(name.str(), t_img, other->coords);
  }

  // the K twist realizes the same isomorphism
  {
    auto hs = cache.symplectic(bd, a < b);
    auto target = monomial_basis(ctx, bd.swapped());
    CMatrix k_img = image_coords(OpExpr::twist_k(), 1, hs->elements, target);
    auto other = cache.symplectic(bd.swapped(), !(a < b));
    std::ostringstream name;
    name << "K[" << hs->space << to_string(bd) << "] == " << other->space
         << to_string(bd.swapped());
    run(name.str(), k_img, other->coords);
  }

  // E^{a-b} maps HSdag_{b,a} onto HS_{a,b} for a > b
  if (a > b) {
    auto hsd = cache.symplectic(Bidegree{b, a}, true);
    auto hs = cache.symplectic(bd, false);
    auto target = monomial_basis(ctx, bd);
    CMatrix img = image_coords(OpExpr::e(), a - b, hsd->elements, target);
    std::ostringstream name;
    name << "E^" << (a - b) << "[HSdag" << to_string(Bidegree{b, a}) << "] == HS" << to_string(bd);
    run(name.str(), img, hs->coords);
  }

  // inside H_{k,k}: Edag^j HS_{k+j,k-j} == E^j HSdag_{k-j,k+j}
  if (a == b) {
    auto target = monomial_basis(ctx, bd);
    for (int j = 0; j <= std::min(max_j, a); ++j) {
      auto hs = cache.symplectic(Bidegree{a + j, a - j}, false);
      auto hsd = cache.symplectic(Bidegree{a - j, a + j}, true);
      CMatrix lhs = image_coords(OpExpr::edag(), j, hs->elements, target);
      CMatrix rhs = image_coords(OpExpr::e(), j, hsd->elements, target);
      std::ostringstream name;
      name << "Edag^" << j << " HS" << to_string(Bidegree{a + j, a - j}) << " == E^" << j
           << " HSdag" << to_string(Bidegree{a - j, a + j});
      run(name.str(), lhs, rhs);
    }
  }

  // inside H_{k,k+1}: Edag^{j+1} HS_{k+1+j,k-j} == E^j HSdag_{k-j,k+1+j}
  if (b == a + 1) {
    auto target = monomial_basis(ctx, bd);
    for (int j = 0; j <= std::min(max_j, a); ++j) {
      auto hs = cache.symplectic(Bidegree{a + 1 + j, a - j}, false);
      auto hsd = cache.symplectic(Bidegree{a - j, a + 1 + j}, true);
      CMatrix lhs = image_coords(OpExpr::edag(), j + 1, hs->elements, target);
      CMatrix rhs = image_coords(OpExpr::e(), j, hsd->elements, target);
      std::ostringstream name;
      name << "Edag^" << (j + 1) << " HS" << to_string(Bidegree{a + 1 + j, a - j}) << " == E^" << j
           << " HSdag" << to_string(Bidegree{a - j, a + 1 + j});
      run(name.str(), lhs, rhs);
    }
  }

  return out;
}

}  // namespace sympharm
