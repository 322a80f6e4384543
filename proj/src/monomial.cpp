#include "sympharm/monomial.hpp"

#include <numeric>
#include <sstream>

namespace sympharm {

std::string to_string(const Bidegree& bd) {
  std::ostringstream os;
  os << "(" << bd.a << "," << bd.b << ")";
  return os.str();
}

Int poly_space_dim(const Context& ctx, const Bidegree& bd) {
  if (!bd.valid()) return 0;
  unsigned n = static_cast<unsigned>(ctx.num_vars());
  return binomial(n - 1 + static_cast<unsigned>(bd.a), static_cast<unsigned>(bd.a)) *
         binomial(n - 1 + static_cast<unsigned>(bd.b), static_cast<unsigned>(bd.b));
}

Bidegree Monomial::bidegree() const {
  int a = std::accumulate(alpha_.begin(), alpha_.end(), 0);
  int b = std::accumulate(beta_.begin(), beta_.end(), 0);
  return {a, b};
}

Monomial Monomial::with_alpha(int j, uint32_t v) const {
  std::vector<uint32_t> a = alpha_;
  a[j] = v;
  return Monomial(std::move(a), beta_);
}

Monomial Monomial::with_beta(int j, uint32_t v) const {
  std::vector<uint32_t> b = beta_;
  b[j] = v;
  return Monomial(alpha_, std::move(b));
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  if (x.num_vars() != y.num_vars())
    throw std::invalid_argument("Monomial: context mismatch in product");
  std::vector<uint32_t> a(x.alpha_);
  std::vector<uint32_t> b(x.beta_);
  for (size_t j = 0; j < a.size(); ++j) {
    a[j] += y.alpha_[j];
    b[j] += y.beta_[j];
  }
  return Monomial(std::move(a), std::move(b));
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
  // earlier-in-canonical-order = numerically greater (alpha, beta) tuple
  for (size_t j = 0; j < x.alpha().size(); ++j) {
    if (x.alpha(j) != y.alpha(j)) return x.alpha(j) > y.alpha(j);
  }
  for (size_t j = 0; j < x.beta().size(); ++j) {
    if (x.beta(j) != y.beta(j)) return x.beta(j) > y.beta(j);
  }
  return false;
}

namespace {

// Exponent vectors of total weight d over n slots, first slot highest
// power first; yields canonical (descending lexicographic) order.
void compositions(int n, int d, std::vector<uint32_t>& cur,
                  std::vector<std::vector<uint32_t>>& out) {
  int slot = static_cast<int>(cur.size());
  if (slot == n - 1) {
    cur.push_back(static_cast<uint32_t>(d));
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur.push_back(static_cast<uint32_t>(e));
    compositions(n, d - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<uint32_t>> exponents_of_degree(int n, int d) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  compositions(n, d, cur, out);
  return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(const Context& ctx, const Bidegree& bd) {
  std::vector<Monomial> out;
  if (!bd.valid()) return out;
  auto alphas = exponents_of_degree(ctx.num_vars(), bd.a);
  auto betas = exponents_of_degree(ctx.num_vars(), bd.b);
  out.reserve(alphas.size() * betas.size());
  for (const auto& a : alphas)
    for (const auto& b : betas) out.emplace_back(a, b);
  return out;
}

Int exponent_factorial(const Monomial& m) {
  Int r = 1;
  for (uint32_t e : m.alpha()) r *= factorial(e);
  for (uint32_t e : m.beta()) r *= factorial(e);
  return r;
}

}  // namespace sympharm
