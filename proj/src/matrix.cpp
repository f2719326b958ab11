#include "qhlin/matrix.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace qhlin {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix z(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rational& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) z(i, j) += xik * y(k, j);
    }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix z = x;
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix z = x;
  for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
  return z;
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, off + c) = b(r, c);
    off += b.cols();
  }
  return m;
}

namespace linalg {

namespace {

std::int64_t narrow(__int128 v) {
  constexpr __int128 lim = INT64_MAX;
  if (v > lim || v < -lim) throw std::overflow_error("bareiss overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::size_t rank(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  std::vector<std::int64_t> a(R * C);
  for (std::size_t r = 0; r < R; ++r) {
    std::int64_t l = 1;
    for (std::size_t c = 0; c < C; ++c) l = std::lcm(l, m(r, c).den());
    for (std::size_t c = 0; c < C; ++c)
      a[r * C + c] = narrow(__int128(m(r, c).num()) * (l / m(r, c).den()));
  }
  std::size_t rk = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < C && rk < R; ++c) {
    std::size_t p = rk;
    while (p < R && a[p * C + c] == 0) ++p;
    if (p == R) continue;
    if (p != rk)
      for (std::size_t k = 0; k < C; ++k) std::swap(a[p * C + k], a[rk * C + k]);
    const std::int64_t piv = a[rk * C + c];
    for (std::size_t r = rk + 1; r < R; ++r) {
      const std::int64_t f = a[r * C + c];
      for (std::size_t k = c + 1; k < C; ++k)
        a[r * C + k] = narrow((__int128(piv) * a[r * C + k] - __int128(f) * a[rk * C + k]) / prev);
      a[r * C + c] = 0;
    }
    prev = piv;
    ++rk;
  }
  return rk;
}

Echelon rref(Matrix m) {
  Echelon e;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t p = row;
    while (p < R && m(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != row)
      for (std::size_t k = 0; k < C; ++k) std::swap(m(p, k), m(row, k));
    const Rational inv = Rational(1) / m(row, c);
    for (std::size_t k = c; k < C; ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < C; ++k)
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
    }
    e.pivots.push_back(c);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

Matrix nullspace(const Matrix& m) {
  const std::size_t C = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < C; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(C, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      basis(e.pivots[i], k) = -e.reduced(i, free[k]);
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t R = a.rows(), C = a.cols();
  if (b.size() != R) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(R, C + 1);
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t c = 0; c < C; ++c) aug(r, c) = a(r, c);
    aug(r, C) = b[r];
  }
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  std::vector<Rational> x(C);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, C);
  return x;
}

Matrix column_basis(const Matrix& m) {
  Echelon e = rref(m);
  Matrix out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, e.pivots[k]);
  return out;
}

}  // namespace linalg
}  // namespace qhlin
