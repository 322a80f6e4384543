#include "sympharm/ops.hpp"

#include <cctype>
#include <sstream>

#include "sympharm/parse.hpp"

namespace sympharm {

struct OpExpr::Node {
  enum class Kind { Generator, Scaled, Sum, Compose, Power } kind;
  // Generator
  Gen gen = Gen::Identity;
  int index = 0;  // 1-based variable for Dz/Dzb/MulZ/MulZb
  // Scaled
  GaussianRational coeff;
  // children: Scaled/Power use one; Sum any; Compose two (apply rhs first)
  std::vector<OpExpr> children;
  unsigned exponent = 0;
};

OpExpr OpExpr::generator(Gen g, int index) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Generator;
  n->gen = g;
  n->index = index;
  return OpExpr(std::move(n));
}

OpExpr OpExpr::scaled(GaussianRational c) const {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Scaled;
  n->coeff = std::move(c);
  n->children = {*this};
  return OpExpr(std::move(n));
}

OpExpr OpExpr::sum(std::vector<OpExpr> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sum;
  n->children = std::move(parts);
  return OpExpr(std::move(n));
}

OpExpr OpExpr::compose(OpExpr a, OpExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Compose;
  n->children = {std::move(a), std::move(b)};
  return OpExpr(std::move(n));
}

OpExpr OpExpr::power(OpExpr a, unsigned k) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Power;
  n->children = {std::move(a)};
  n->exponent = k;
  return OpExpr(std::move(n));
}

OpExpr OpExpr::commutator(OpExpr a, OpExpr b) {
  return compose(a, b) - compose(b, a);
}

OpExpr OpExpr::anticommutator(OpExpr a, OpExpr b) {
  return compose(a, b) + compose(b, a);
}

namespace {

void check_index(const Context& ctx, int j, const char* what) {
  if (j < 1 || j > ctx.num_vars())
    throw std::invalid_argument(std::string(what) + ": variable index " +
                                std::to_string(j) + " outside 1..2p=" +
                                std::to_string(ctx.num_vars()));
}

Poly apply_laplace(const Poly& f) {
  Poly r(f.ctx());
  for (const auto& [m, c] : f.terms()) {
    for (int j = 0; j < m.num_vars(); ++j) {
      uint32_t a = m.alpha(j);
      uint32_t b = m.beta(j);
      if (a == 0 || b == 0) continue;
      Monomial n = m.with_alpha(j, a - 1).with_beta(j, b - 1);
      r.add_term(n, c * GaussianRational(Rational(4) * a * b));
    }
  }
  return r;
}

Poly apply_r2(const Poly& f) {
  Poly r(f.ctx());
  for (const auto& [m, c] : f.terms())
    for (int j = 0; j < m.num_vars(); ++j)
      r.add_term(m.with_alpha(j, m.alpha(j) + 1).with_beta(j, m.beta(j) + 1), c);
  return r;
}

Poly apply_euler(const Poly& f, bool conjugate_side) {
  Poly r(f.ctx());
  for (const auto& [m, c] : f.terms()) {
    Bidegree bd = m.bidegree();
    int w = conjugate_side ? bd.b : bd.a;
    if (w != 0) r.add_term(m, c * GaussianRational(Rational(w)));
  }
  return r;
}

// E = sum_k ( z_{2k-1} d/dzb_{2k} - z_{2k} d/dzb_{2k-1} )
Poly apply_e(const Poly& f) {
  Poly r(f.ctx());
  int p = f.ctx().p;
  for (const auto& [m, c] : f.terms()) {
    for (int k = 0; k < p; ++k) {
      int odd = 2 * k;       // index of z_{2k-1}
      int even = 2 * k + 1;  // index of z_{2k}
      if (uint32_t e = m.beta(even); e > 0)
        r.add_term(m.with_beta(even, e - 1).with_alpha(odd, m.alpha(odd) + 1),
                   c * GaussianRational(Rational(e)));
      if (uint32_t e = m.beta(odd); e > 0)
        r.add_term(m.with_beta(odd, e - 1).with_alpha(even, m.alpha(even) + 1),
                   c * GaussianRational(-Rational(e)));
    }
  }
  return r;
}

// Edag = sum_k ( zb_{2k} d/dz_{2k-1} - zb_{2k-1} d/dz_{2k} )
Poly apply_edag(const Poly& f) {
  Poly r(f.ctx());
  int p = f.ctx().p;
  for (const auto& [m, c] : f.terms()) {
    for (int k = 0; k < p; ++k) {
      int odd = 2 * k;
      int even = 2 * k + 1;
      if (uint32_t e = m.alpha(odd); e > 0)
        r.add_term(m.with_alpha(odd, e - 1).with_beta(even, m.beta(even) + 1),
                   c * GaussianRational(Rational(e)));
      if (uint32_t e = m.alpha(even); e > 0)
        r.add_term(m.with_alpha(even, e - 1).with_beta(odd, m.beta(odd) + 1),
                   c * GaussianRational(-Rational(e)));
    }
  }
  return r;
}

// variable substitution z_{2k-1} -> -zb_{2k}, z_{2k} -> zb_{2k-1},
// zb_{2k-1} -> -z_{2k}, zb_{2k} -> z_{2k-1}
Poly apply_twist_t(const Poly& f) {
  Poly r(f.ctx());
  int p = f.ctx().p;
  for (const auto& [m, c] : f.terms()) {
    std::vector<uint32_t> a(m.num_vars(), 0);
    std::vector<uint32_t> b(m.num_vars(), 0);
    long sign_exp = 0;
    for (int k = 0; k < p; ++k) {
      int odd = 2 * k;
      int even = 2 * k + 1;
      b[even] += m.alpha(odd);
      sign_exp += m.alpha(odd);
      b[odd] += m.alpha(even);
      a[even] += m.beta(odd);
      sign_exp += m.beta(odd);
      a[odd] += m.beta(even);
    }
    GaussianRational coeff = (sign_exp % 2 == 0) ? c : -c;
    r.add_term(Monomial(std::move(a), std::move(b)), coeff);
  }
  return r;
}

// z_{2k-1} -> i zb_{2k}, z_{2k} -> -i zb_{2k-1},
// zb_{2k-1} -> -i z_{2k}, zb_{2k} -> i z_{2k-1}
Poly apply_twist_k(const Poly& f) {
  Poly r(f.ctx());
  int p = f.ctx().p;
  for (const auto& [m, c] : f.terms()) {
    std::vector<uint32_t> a(m.num_vars(), 0);
    std::vector<uint32_t> b(m.num_vars(), 0);
    unsigned ipow = 0;   // power of i
    unsigned mpow = 0;   // power of -i
    for (int k = 0; k < p; ++k) {
      int odd = 2 * k;
      int even = 2 * k + 1;
      b[even] += m.alpha(odd);
      ipow += m.alpha(odd);
      b[odd] += m.alpha(even);
      mpow += m.alpha(even);
      a[even] += m.beta(odd);
      mpow += m.beta(odd);
      a[odd] += m.beta(even);
      ipow += m.beta(even);
    }
    GaussianRational coeff = c * i_power(ipow) * i_power(3 * mpow);
    r.add_term(Monomial(std::move(a), std::move(b)), coeff);
  }
  return r;
}

// z_j -> i z_j, zb_j -> -i zb_j
Poly apply_twist_i(const Poly& f) {
  Poly r(f.ctx());
  for (const auto& [m, c] : f.terms()) {
    Bidegree bd = m.bidegree();
    r.add_term(m, c * i_power(static_cast<unsigned>(bd.a)) *
                      i_power(3 * static_cast<unsigned>(bd.b)));
  }
  return r;
}

Poly apply_generator(OpExpr::Gen g, int index, const Poly& f) {
  using Gen = OpExpr::Gen;
  switch (g) {
    case Gen::Dz:
      check_index(f.ctx(), index, "Dz");
      return diff_z(f, index);
    case Gen::Dzb:
      check_index(f.ctx(), index, "Dzb");
      return diff_zb(f, index);
    case Gen::MulZ:
      check_index(f.ctx(), index, "MulZ");
      return mul_z(f, index);
    case Gen::MulZb:
      check_index(f.ctx(), index, "MulZb");
      return mul_zb(f, index);
    case Gen::Laplace:
      return apply_laplace(f);
    case Gen::R2:
      return apply_r2(f);
    case Gen::EulerZ:
      return apply_euler(f, false);
    case Gen::EulerZb:
      return apply_euler(f, true);
    case Gen::E:
      return apply_e(f);
    case Gen::Edag:
      return apply_edag(f);
    case Gen::TwistT:
      return apply_twist_t(f);
    case Gen::TwistK:
      return apply_twist_k(f);
    case Gen::TwistI:
      return apply_twist_i(f);
    case Gen::Identity:
      return f;
  }
  throw std::logic_error("unknown generator");
}

std::optional<Bidegree> generator_target(OpExpr::Gen g, const Bidegree& s) {
  using Gen = OpExpr::Gen;
  switch (g) {
    case Gen::Dz: return Bidegree{s.a - 1, s.b};
    case Gen::Dzb: return Bidegree{s.a, s.b - 1};
    case Gen::MulZ: return Bidegree{s.a + 1, s.b};
    case Gen::MulZb: return Bidegree{s.a, s.b + 1};
    case Gen::Laplace: return Bidegree{s.a - 1, s.b - 1};
    case Gen::R2: return Bidegree{s.a + 1, s.b + 1};
    case Gen::EulerZ:
    case Gen::EulerZb:
    case Gen::TwistI:
    case Gen::Identity: return s;
    case Gen::E: return Bidegree{s.a + 1, s.b - 1};
    case Gen::Edag: return Bidegree{s.a - 1, s.b + 1};
    case Gen::TwistT:
    case Gen::TwistK: return s.swapped();
  }
  return std::nullopt;
}

const char* generator_name(OpExpr::Gen g) {
  using Gen = OpExpr::Gen;
  switch (g) {
    case Gen::Dz: return "Dz";
    case Gen::Dzb: return "Dzb";
    case Gen::MulZ: return "MulZ";
    case Gen::MulZb: return "MulZb";
    case Gen::Laplace: return "Laplace";
    case Gen::R2: return "R2";
    case Gen::EulerZ: return "EulerZ";
    case Gen::EulerZb: return "EulerZb";
    case Gen::E: return "E";
    case Gen::Edag: return "Edag";
    case Gen::TwistT: return "T";
    case Gen::TwistK: return "K";
    case Gen::TwistI: return "I";
    case Gen::Identity: return "Id";
  }
  return "?";
}

}  // namespace

Poly OpExpr::apply(const Poly& f) const {
  switch (node_->kind) {
    case Node::Kind::Generator:
      return apply_generator(node_->gen, node_->index, f);
    case Node::Kind::Scaled:
      return node_->children[0].apply(f).scaled(node_->coeff);
    case Node::Kind::Sum: {
      Poly acc(f.ctx());
      for (const OpExpr& c : node_->children) acc += c.apply(f);
      return acc;
    }
    case Node::Kind::Compose:
      return node_->children[0].apply(node_->children[1].apply(f));
    case Node::Kind::Power: {
      Poly acc = f;
      for (unsigned k = 0; k < node_->exponent; ++k) acc = node_->children[0].apply(acc);
      return acc;
    }
  }
  throw std::logic_error("unknown op node");
}

std::optional<Bidegree> OpExpr::target(const Bidegree& src) const {
  switch (node_->kind) {
    case Node::Kind::Generator:
      return generator_target(node_->gen, src);
    case Node::Kind::Scaled:
      return node_->children[0].target(src);
    case Node::Kind::Sum: {
      std::optional<Bidegree> out;
      bool have_valid = false;
      for (const OpExpr& c : node_->children) {
        auto t = c.target(src);
        if (!t) return std::nullopt;
        if (!t->valid()) continue;  // maps into the zero space
        if (have_valid && *t != *out) return std::nullopt;
        out = t;
        have_valid = true;
      }
      if (!have_valid) return Bidegree{-1, -1};
      return out;
    }
    case Node::Kind::Compose: {
      auto t1 = node_->children[1].target(src);
      if (!t1) return std::nullopt;
      return node_->children[0].target(*t1);
    }
    case Node::Kind::Power: {
      Bidegree cur = src;
      for (unsigned k = 0; k < node_->exponent; ++k) {
        auto t = node_->children[0].target(cur);
        if (!t) return std::nullopt;
        cur = *t;
      }
      return cur;
    }
  }
  return std::nullopt;
}

std::string OpExpr::name() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Node::Kind::Generator:
      os << generator_name(node_->gen);
      if (node_->index > 0) os << node_->index;
      break;
    case Node::Kind::Scaled:
      os << "(" << node_->coeff << ")*" << node_->children[0].name();
      break;
    case Node::Kind::Sum: {
      os << "(";
      for (size_t i = 0; i < node_->children.size(); ++i) {
        if (i) os << " + ";
        os << node_->children[i].name();
      }
      os << ")";
      break;
    }
    case Node::Kind::Compose:
      os << node_->children[0].name() << "." << node_->children[1].name();
      break;
    case Node::Kind::Power:
      os << node_->children[0].name() << "^" << node_->exponent;
      break;
  }
  return os.str();
}

OpMatrix op_matrix(const OpExpr& op, const Context& ctx, const Bidegree& src) {
  auto dst = op.target(src);
  if (!dst)
    throw std::invalid_argument("operator has no well-defined bidegree target on P_" +
                                to_string(src));
  OpMatrix out{ctx, src, *dst, monomial_basis(ctx, src), monomial_basis(ctx, *dst), {}};
  out.mat = CMatrix(out.dst_basis.size(), out.src_basis.size());

  std::map<Monomial, size_t, MonomialOrder> dst_index;
  for (size_t i = 0; i < out.dst_basis.size(); ++i) dst_index.emplace(out.dst_basis[i], i);

  for (size_t j = 0; j < out.src_basis.size(); ++j) {
    Poly image = op.apply(Poly::term(ctx, out.src_basis[j], GaussianRational(1)));
    for (const auto& [m, c] : image.terms()) {
      auto it = dst_index.find(m);
      if (it == dst_index.end())
        throw std::logic_error("operator image leaves the declared target bidegree");
      out.mat(it->second, j) = c;
    }
  }
  return out;
}

namespace {

OpExpr named_operator(const std::string& tok, size_t at) {
  if (tok == "E") return OpExpr::e();
  if (tok == "Edag") return OpExpr::edag();
  if (tok == "Laplace") return OpExpr::laplace();
  if (tok == "R2") return OpExpr::r2();
  if (tok == "EulerZ") return OpExpr::euler_z();
  if (tok == "EulerZb") return OpExpr::euler_zb();
  if (tok == "T") return OpExpr::twist_t();
  if (tok == "K") return OpExpr::twist_k();
  if (tok == "I") return OpExpr::twist_i();
  if (tok == "Id") return OpExpr::identity();
  if (tok.rfind("Dzb", 0) == 0 && tok.size() > 3)
    return OpExpr::dzb(std::stoi(tok.substr(3)));
  if (tok.rfind("Dz", 0) == 0 && tok.size() > 2 && std::isdigit(static_cast<unsigned char>(tok[2])))
    return OpExpr::dz(std::stoi(tok.substr(2)));
  throw ParseError("unknown operator \"" + tok + "\"", at);
}

}  // namespace

OpExpr parse_op_expr(const std::string& text) {
  std::optional<OpExpr> acc;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
    if (i == start) throw ParseError("expected operator name", i);
    std::string tok = text.substr(start, i - start);
    unsigned power = 1;
    // split a trailing exponent out of names like "Edag" followed by ^n
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      size_t ds = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (ds == i) throw ParseError("expected exponent", i);
      power = static_cast<unsigned>(std::stoul(text.substr(ds, i - ds)));
    }
    OpExpr atom = named_operator(tok, start);
    if (power != 1) atom = OpExpr::power(atom, power);
    acc = acc ? OpExpr::compose(*acc, atom) : atom;
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '.') throw ParseError("expected '.' between operators", i);
    ++i;
  }
  return *acc;
}

}  // namespace sympharm
