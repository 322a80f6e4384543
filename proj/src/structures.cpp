#include "sympharm/structures.hpp"

#include <stdexcept>

namespace sympharm {

HMatrix adjoint(const HMatrix& a) {
  HMatrix out(a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

QMatrix embed_complex(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("embed_complex: square input required");
  size_t n = a.rows();
  QMatrix out(2 * n, 2 * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const GaussianRational& v = a(i, j);
      out(2 * i, 2 * j) = v.re();
      out(2 * i, 2 * j + 1) = v.im();
      out(2 * i + 1, 2 * j) = -v.im();
      out(2 * i + 1, 2 * j + 1) = v.re();
    }
  return out;
}

CMatrix embed_quaternion(const HMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("embed_quaternion: square input required");
  size_t p = a.rows();
  CMatrix out(2 * p, 2 * p);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) {
      GaussianRational z = a(i, j).z_part();
      GaussianRational w = a(i, j).w_part();
      out(2 * i, 2 * j) = z;
      out(2 * i, 2 * j + 1) = w;
      out(2 * i + 1, 2 * j) = -w.conj();
      out(2 * i + 1, 2 * j + 1) = z.conj();
    }
  return out;
}

QMatrix complex_structure(int half_dim) {
  QMatrix out(2 * half_dim, 2 * half_dim);
  for (int k = 0; k < half_dim; ++k) {
    out(2 * k, 2 * k + 1) = 1;
    out(2 * k + 1, 2 * k) = -1;
  }
  return out;
}

StructureTriple structure_matrices(const Context& ctx) {
  int n = ctx.real_dim();
  StructureTriple out{complex_structure(n / 2), QMatrix(n, n), {}};
  // J: diag of 4x4 blocks [[0,0,1,0],[0,0,0,-1],[-1,0,0,0],[0,1,0,0]]
  for (int k = 0; k < ctx.p; ++k) {
    int o = 4 * k;
    out.j(o + 0, o + 2) = 1;
    out.j(o + 1, o + 3) = -1;
    out.j(o + 2, o + 0) = -1;
    out.j(o + 3, o + 1) = 1;
  }
  out.k = out.i * out.j;
  return out;
}

bool is_skew_symplectic(const HMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return (a + adjoint(a)).is_zero();
}

bool is_skew_hermitian(const CMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return (a + conj_transposed(a)).is_zero();
}

bool satisfies_symplectic_relation(const CMatrix& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0) return false;
  QMatrix iq = complex_structure(static_cast<int>(a.rows() / 2));
  CMatrix i(a.rows(), a.cols());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) i(r, c) = GaussianRational(iq(r, c));
  return (a.transposed() * i + i * a).is_zero();
}

CoordinateImages coordinate_substitution(const Context& ctx, const QMatrix& m) {
  size_t n = static_cast<size_t>(ctx.real_dim());
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("coordinate_substitution: matrix must be 4p x 4p");
  // real coordinate X_c as a polynomial: x_k = (z_k + zb_k)/2,
  // y_k = (z_k - zb_k)/(2i)
  auto real_coord = [&](size_t c) {
    int k = static_cast<int>(c / 2) + 1;
    Poly z = Poly::variable_z(ctx, k);
    Poly zb = Poly::variable_zb(ctx, k);
    if (c % 2 == 0) return (z + zb).scaled(GaussianRational(Rational(1, 2)));
    return (z - zb).scaled(GaussianRational(Rational(0), Rational(-1, 2)));
  };
  CoordinateImages out;
  for (int j = 0; j < ctx.num_vars(); ++j) {
    // z_j' = (MX)_{2j} + i (MX)_{2j+1} in 0-based rows
    Poly re(ctx), im(ctx);
    for (size_t c = 0; c < n; ++c) {
      if (m(2 * j, c) != 0) re += real_coord(c).scaled(GaussianRational(m(2 * j, c)));
      if (m(2 * j + 1, c) != 0)
        im += real_coord(c).scaled(GaussianRational(m(2 * j + 1, c)));
    }
    out.z.push_back(re + im.scaled(GaussianRational::i()));
    out.zb.push_back(re - im.scaled(GaussianRational::i()));
  }
  return out;
}

}  // namespace sympharm
