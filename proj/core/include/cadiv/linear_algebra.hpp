// Dense exact linear algebra over Rat. Sizes here are tens of rows at most.
#pragma once

#include "cadiv/rational.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cadiv {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_int(const std::vector<std::vector<std::int64_t>>& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> multiply(std::span<const Rat> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Unique solution of M x = rhs for square M; throws SingularMatrixError.
std::vector<Rat> solve(const RatMatrix& m, std::span<const Rat> rhs);

Rat determinant(const RatMatrix& m);

/// D_1, ..., D_k: determinants of the leading principal submatrices.
std::vector<Rat> leading_principal_minors(const RatMatrix& m);

/// Sylvester: M < 0 iff (-1)^k D_k > 0 for every k.
bool is_negative_definite(const RatMatrix& m);

/// v^T M w
Rat bilinear(const RatMatrix& m, std::span<const Rat> v, std::span<const Rat> w);

}  // namespace cadiv
