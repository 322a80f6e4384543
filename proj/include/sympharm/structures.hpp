#pragma once

#include <vector>

#include "sympharm/linalg.hpp"
#include "sympharm/monomial.hpp"
#include "sympharm/poly.hpp"

namespace sympharm {

/// q = x + y i + u j + v k over the rationals.
struct Quaternion {
  Rational x{0}, y{0}, u{0}, v{0};

  Quaternion() = default;
  Quaternion(Rational x_, Rational y_, Rational u_, Rational v_)
      : x(std::move(x_)), y(std::move(y_)), u(std::move(u_)), v(std::move(v_)) {}
  explicit Quaternion(long n) : x(n) {}

  // q = z + w j with z = x + y i, w = u + v i
  GaussianRational z_part() const { return {x, y}; }
  GaussianRational w_part() const { return {u, v}; }
  static Quaternion from_parts(const GaussianRational& z, const GaussianRational& w) {
    return {z.re(), z.im(), w.re(), w.im()};
  }

  Quaternion conj() const { return {x, -y, -u, -v}; }
  Rational norm() const { return x * x + y * y + u * u + v * v; }
  bool is_zero() const { return x == 0 && y == 0 && u == 0 && v == 0; }

  Quaternion operator-() const { return {-x, -y, -u, -v}; }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x + b.x, a.y + b.y, a.u + b.u, a.v + b.v};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.x - b.x, a.y - b.y, a.u - b.u, a.v - b.v};
  }
  // (z1 + w1 j)(z2 + w2 j) = (z1 z2 - w1 conj(w2)) + (z1 w2 + w1 conj(z2)) j
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    GaussianRational z = a.z_part() * b.z_part() - a.w_part() * b.w_part().conj();
    GaussianRational w = a.z_part() * b.w_part() + a.w_part() * b.z_part().conj();
    return from_parts(z, w);
  }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

using HMatrix = Matrix<Quaternion>;

/// conjugate transpose A* over the quaternions.
HMatrix adjoint(const HMatrix& a);

/// Embeds M_n(C) into M_{2n}(R): each entry a+bi becomes the 2x2 block
/// [[a, b], [-b, a]]. A ring homomorphism.
QMatrix embed_complex(const CMatrix& a);

/// Embeds M_p(H) into M_{2p}(C): each entry z + w j becomes
/// [[z, w], [-conj(w), conj(z)]]. Multiplicative.
CMatrix embed_quaternion(const HMatrix& a);

/// The standard complex structure: diag of [[0,1],[-1,0]] blocks.
QMatrix complex_structure(int half_dim);  // 2n x 2n for n = half_dim

/// I, J, K = I*J on R^{4p}: I the standard structure, J the 4x4-block
/// second structure; I^2 = J^2 = K^2 = -E and IJ = -JI.
struct StructureTriple {
  QMatrix i;
  QMatrix j;
  QMatrix k;
};
StructureTriple structure_matrices(const Context& ctx);

/// A + A* = 0 over the quaternions.
bool is_skew_symplectic(const HMatrix& a);

/// A + A^H = 0 over the complexes.
bool is_skew_hermitian(const CMatrix& a);

/// A^T I + I A = 0 with I the complex structure of matching size.
bool satisfies_symplectic_relation(const CMatrix& a);

/**
 * Images of the variables z_j, zb_j under precomposition with the real
 * linear map X -> M X in interleaved coordinates (x_1, y_1, x_2, ...):
 * substitution targets as linear polynomials, used to cross-check the
 * twist transforms against their structure matrices.
 */
struct CoordinateImages {
  std::vector<Poly> z;   // image of z_j at index j-1
  std::vector<Poly> zb;  // image of zb_j
};
CoordinateImages coordinate_substitution(const Context& ctx, const QMatrix& m);

}  // namespace sympharm
