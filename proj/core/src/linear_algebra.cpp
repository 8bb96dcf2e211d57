#include "cadiv/linear_algebra.hpp"

#include <utility>

namespace cadiv {

RatMatrix RatMatrix::from_int(const std::vector<std::vector<std::int64_t>>& m) {
  RatMatrix out(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = Rat(m[r][c]);
  }
  return out;
}

std::vector<Rat> RatMatrix::multiply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::multiply: size mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c).sign() != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

std::vector<Rat> solve(const RatMatrix& m, std::span<const Rat> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve: shape mismatch");

  // Augmented Gauss-Jordan; any nonzero pivot is exact.
  RatMatrix a(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n) = rhs[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).sign() == 0) ++pivot;
    if (pivot == n) throw SingularMatrixError("solve: matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c <= n; ++c) std::swap(a(pivot, c), a(col, c));
    }
    const Rat inv = a(col, col).reciprocal();
    for (std::size_t c = col; c <= n; ++c) a(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).sign() == 0) continue;
      const Rat f = a(r, col);
      for (std::size_t c = col; c <= n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = a(r, n);
  return x;
}

Rat determinant(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant: matrix is not square");
  RatMatrix a = m;
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).sign() == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rat inv = a(col, col).reciprocal();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).sign() == 0) continue;
      const Rat f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::vector<Rat> leading_principal_minors(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("leading_principal_minors: not square");
  std::vector<Rat> minors;
  minors.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, c);
    }
    minors.push_back(determinant(sub));
  }
  return minors;
}

bool is_negative_definite(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("is_negative_definite: not square");
  // Elimination without pivoting: pivot_k = D_k / D_{k-1}, so the sign
  // pattern (-1)^k D_k > 0 is equivalent to every pivot being negative.
  RatMatrix a = m;
  for (std::size_t col = 0; col < n; ++col) {
    if (a(col, col).sign() >= 0) return false;
    const Rat inv = a(col, col).reciprocal();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).sign() == 0) continue;
      const Rat f = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return true;
}

Rat bilinear(const RatMatrix& m, std::span<const Rat> v, std::span<const Rat> w) {
  const auto mw = m.multiply(w);
  Rat out;
  for (std::size_t i = 0; i < v.size(); ++i) out += v[i] * mw[i];
  return out;
}

}  // namespace cadiv
