#include "sympharm/poly.hpp"

#include <sstream>

namespace sympharm {

Poly Poly::constant(Context ctx, GaussianRational c) {
  Poly f(ctx);
  f.add_term(Monomial::one(ctx), c);
  return f;
}

Poly Poly::term(Context ctx, Monomial m, GaussianRational c) {
  if (m.num_vars() != ctx.num_vars())
    throw std::invalid_argument("Poly::term: monomial width does not match context");
  Poly f(ctx);
  f.add_term(m, c);
  return f;
}

Poly Poly::variable_z(Context ctx, int j) {
  Monomial m = Monomial::one(ctx).with_alpha(j - 1, 1);
  return term(ctx, m, GaussianRational(1));
}

Poly Poly::variable_zb(Context ctx, int j) {
  Monomial m = Monomial::one(ctx).with_beta(j - 1, 1);
  return term(ctx, m, GaussianRational(1));
}

void Poly::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

Poly Poly::operator-() const {
  Poly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_context(a, b);
  Poly r(a.ctx());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const GaussianRational& c) const {
  Poly r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Poly Poly::conjugated() const {
  Poly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.conjugated(), c.conj());
  return r;
}

std::optional<Bidegree> Poly::homogeneous_bidegree() const {
  if (terms_.empty()) return Bidegree{0, 0};
  std::optional<Bidegree> bd;
  for (const auto& [m, c] : terms_) {
    Bidegree t = m.bidegree();
    if (!bd)
      bd = t;
    else if (*bd != t)
      return std::nullopt;
  }
  return bd;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.bidegree().total());
  return d;
}

void require_same_context(const Poly& f, const Poly& g) {
  if (!(f.ctx() == g.ctx()))
    throw std::invalid_argument("polynomials from different contexts (p=" +
                                std::to_string(f.ctx().p) + " vs p=" +
                                std::to_string(g.ctx().p) + ")");
}

Poly diff_z(const Poly& f, int j) {
  Poly r(f.ctx());
  int idx = j - 1;
  for (const auto& [m, c] : f.terms()) {
    uint32_t e = m.alpha(idx);
    if (e == 0) continue;
    r.add_term(m.with_alpha(idx, e - 1), c * GaussianRational(Rational(e)));
  }
  return r;
}

Poly diff_zb(const Poly& f, int j) {
  Poly r(f.ctx());
  int idx = j - 1;
  for (const auto& [m, c] : f.terms()) {
    uint32_t e = m.beta(idx);
    if (e == 0) continue;
    r.add_term(m.with_beta(idx, e - 1), c * GaussianRational(Rational(e)));
  }
  return r;
}

Poly mul_z(const Poly& f, int j) {
  Poly r(f.ctx());
  int idx = j - 1;
  for (const auto& [m, c] : f.terms()) r.add_term(m.with_alpha(idx, m.alpha(idx) + 1), c);
  return r;
}

Poly mul_zb(const Poly& f, int j) {
  Poly r(f.ctx());
  int idx = j - 1;
  for (const auto& [m, c] : f.terms()) r.add_term(m.with_beta(idx, m.beta(idx) + 1), c);
  return r;
}

Poly r2_poly(const Context& ctx) {
  Poly r(ctx);
  for (int j = 1; j <= ctx.num_vars(); ++j) {
    Monomial m = Monomial::one(ctx).with_alpha(j - 1, 1).with_beta(j - 1, 1);
    r.add_term(m, GaussianRational(1));
  }
  return r;
}

std::map<Bidegree, Poly> bidegree_split(const Poly& f) {
  std::map<Bidegree, Poly> out;
  for (const auto& [m, c] : f.terms()) {
    auto [it, inserted] = out.try_emplace(m.bidegree(), f.ctx());
    it->second.add_term(m, c);
  }
  return out;
}

GaussianRational fischer_inner(const Poly& f, const Poly& g) {
  require_same_context(f, g);
  GaussianRational acc(0);
  const auto& fs = f.terms();
  const auto& gs = g.terms();
  // single ordered sweep over common monomials
  auto itf = fs.begin();
  auto itg = gs.begin();
  MonomialOrder lt;
  while (itf != fs.end() && itg != gs.end()) {
    if (lt(itf->first, itg->first)) {
      ++itf;
    } else if (lt(itg->first, itf->first)) {
      ++itg;
    } else {
      acc += itf->second * itg->second.conj() *
             GaussianRational(Rational(exponent_factorial(itf->first)));
      ++itf;
      ++itg;
    }
  }
  return acc;
}

namespace {

// factor list "z2*z3^2*zb1" for a non-constant monomial
std::string monomial_text(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, int j, uint32_t e) {
    if (e == 0) return;
    if (!first) os << "*";
    first = false;
    os << name << j;
    if (e > 1) os << "^" << e;
  };
  for (int j = 0; j < m.num_vars(); ++j) emit("z", j + 1, m.alpha(j));
  for (int j = 0; j < m.num_vars(); ++j) emit("zb", j + 1, m.beta(j));
  return os.str();
}

// Renders one term as (negative?, body) so the caller can choose the
// separator; two-part complex coefficients keep their sign inside the
// parenthesized coefficient.
std::pair<bool, std::string> term_text(const Monomial& m, const GaussianRational& c) {
  bool constant = m.is_constant();
  std::string mono = constant ? std::string() : monomial_text(m);
  if (c.re() != 0 && c.im() != 0) {
    std::string coeff = "(" + to_string(c) + ")";
    return {false, constant ? coeff : coeff + "*" + mono};
  }
  bool negative;
  GaussianRational mag = c;
  if (c.im() == 0) {
    negative = c.re() < 0;
    if (negative) mag = -c;
  } else {
    negative = c.im() < 0;
    if (negative) mag = -c;
  }
  if (!constant && mag == GaussianRational(1)) return {negative, mono};
  std::string coeff = to_string(mag);
  if (constant) return {negative, coeff};
  return {negative, coeff + "*" + mono};
}

}  // namespace

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    auto [neg, body] = term_text(m, c);
    if (first) {
      if (neg) os << "-";
      os << body;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
  }
  return os.str();
}

}  // namespace sympharm
