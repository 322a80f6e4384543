#include "sympharm/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace sympharm {

namespace {

// Gaussian integer, the working domain of the fraction-free elimination.
struct GaussInt {
  Int re{0};
  Int im{0};

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
};

GaussianRational to_rational(const GaussInt& g) {
  return {Rational(g.re), Rational(g.im)};
}

using Row = std::vector<GaussInt>;

// Rows of m with denominators cleared (row scaling keeps the kernel and
// the solution set unchanged).
std::vector<Row> cleared_rows(const CMatrix& m, const CMatrix* extra) {
  size_t cols = m.cols() + (extra ? extra->cols() : 0);
  std::vector<Row> rows(m.rows(), Row(cols));
  for (size_t i = 0; i < m.rows(); ++i) {
    Int mult = 1;
    auto fold = [&](const GaussianRational& v) {
      mult = boost::multiprecision::lcm(mult, boost::multiprecision::denominator(v.re()));
      mult = boost::multiprecision::lcm(mult, boost::multiprecision::denominator(v.im()));
    };
    for (size_t j = 0; j < m.cols(); ++j) fold(m(i, j));
    if (extra)
      for (size_t j = 0; j < extra->cols(); ++j) fold((*extra)(i, j));
    auto scaled = [&](const GaussianRational& v) {
      Rational re = v.re() * mult;
      Rational im = v.im() * mult;
      return GaussInt{boost::multiprecision::numerator(re),
                      boost::multiprecision::numerator(im)};
    };
    for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = scaled(m(i, j));
    if (extra)
      for (size_t j = 0; j < extra->cols(); ++j)
        rows[i][m.cols() + j] = scaled((*extra)(i, j));
  }
  return rows;
}

// Divides out the integer content; row scaling again, so harmless for
// kernels and solves, and it keeps the cross-multiplied entries small.
void strip_content(Row& row) {
  Int g = 0;
  for (const GaussInt& v : row) {
    g = boost::multiprecision::gcd(g, v.re);
    g = boost::multiprecision::gcd(g, v.im);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (GaussInt& v : row) {
    v.re /= g;
    v.im /= g;
  }
}

struct Echelon {
  std::vector<Row> rows;
  std::vector<size_t> pivot_cols;  // ascending; pivot_cols[r] is the pivot of row r
};

// Fraction-free forward elimination over Z[i]: row_i <- piv * row_i -
// head * row_r, followed by content stripping. Pivot search scans
// columns left to right and takes the first row with a nonzero entry,
// so the echelon shape is deterministic.
Echelon echelon_form(std::vector<Row> rows, size_t pivot_limit) {
  Echelon e;
  e.rows = std::move(rows);
  size_t nrows = e.rows.size();
  if (nrows == 0) return e;
  size_t ncols = e.rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < pivot_limit && r < nrows; ++col) {
    size_t pr = r;
    while (pr < nrows && e.rows[pr][col].is_zero()) ++pr;
    if (pr == nrows) continue;
    if (pr != r) std::swap(e.rows[pr], e.rows[r]);
    const GaussInt piv = e.rows[r][col];
    for (size_t i = r + 1; i < nrows; ++i) {
      if (e.rows[i][col].is_zero()) continue;
      const GaussInt head = e.rows[i][col];
      for (size_t j = col + 1; j < ncols; ++j) {
        const GaussInt& cur = e.rows[i][j];
        const GaussInt& top = e.rows[r][j];
        if (cur.is_zero()) {
          if (top.is_zero()) continue;
          e.rows[i][j] = GaussInt{} - head * top;
        } else if (top.is_zero()) {
          e.rows[i][j] = cur * piv;
        } else {
          e.rows[i][j] = cur * piv - head * top;
        }
      }
      e.rows[i][col] = GaussInt{};
      strip_content(e.rows[i]);
    }
    e.pivot_cols.push_back(col);
    ++r;
  }
  return e;
}

}  // namespace

CMatrix kernel_basis(const CMatrix& m) {
  size_t n = m.cols();
  Echelon e = echelon_form(cleared_rows(m, nullptr), n);
  std::vector<bool> is_pivot(n, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<size_t> free_cols;
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  CMatrix out(n, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    std::vector<GaussianRational> x(n);
    x[free_cols[k]] = GaussianRational(1);
    for (size_t r = e.pivot_cols.size(); r-- > 0;) {
      size_t c = e.pivot_cols[r];
      GaussianRational acc(0);
      for (size_t j = c + 1; j < n; ++j) {
        if (x[j].is_zero() || e.rows[r][j].is_zero()) continue;
        acc += to_rational(e.rows[r][j]) * x[j];
      }
      x[c] = -acc / to_rational(e.rows[r][c]);
    }
    for (size_t i = 0; i < n; ++i) out(i, k) = x[i];
  }
  return out;
}

size_t rank(const CMatrix& m) {
  return echelon_form(cleared_rows(m, nullptr), m.cols()).pivot_cols.size();
}

std::optional<CMatrix> solve(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  Echelon e = echelon_form(cleared_rows(a, &b), a.cols());
  size_t rank = e.pivot_cols.size();
  for (size_t i = rank; i < e.rows.size(); ++i)
    for (size_t j = a.cols(); j < a.cols() + b.cols(); ++j)
      if (!e.rows[i][j].is_zero()) return std::nullopt;

  CMatrix x(a.cols(), b.cols());
  for (size_t col = 0; col < b.cols(); ++col) {
    for (size_t r = rank; r-- > 0;) {
      size_t c = e.pivot_cols[r];
      GaussianRational acc = to_rational(e.rows[r][a.cols() + col]);
      for (size_t r2 = r + 1; r2 < rank; ++r2) {
        size_t c2 = e.pivot_cols[r2];
        if (e.rows[r][c2].is_zero() || x(c2, col).is_zero()) continue;
        acc -= to_rational(e.rows[r][c2]) * x(c2, col);
      }
      x(c, col) = acc / to_rational(e.rows[r][c]);
    }
  }
  return x;
}

bool spans(const CMatrix& a, const CMatrix& b) { return solve(a, b).has_value(); }

CMatrix conj_transposed(const CMatrix& m) {
  CMatrix out(m.cols(), m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  return out;
}

}  // namespace sympharm
