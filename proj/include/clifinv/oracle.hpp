#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clifinv/multivector.hpp"

namespace clifinv {

// Dense row-major rational matrix.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

// Matrix of X -> A X in the canonical blade basis: column j holds A * e_j.
ExactMatrix left_matrix(const Multivector& a);

// The same map restricted to span(basis). Throws std::invalid_argument if
// A * basis[j] leaves the span.
ExactMatrix left_matrix_on(const Multivector& a, std::span<const Blade> basis);

// Fraction-free (Bareiss) elimination on the row-integerized matrix; the
// pivot is the first nonzero entry of each column.
Rational determinant(const ExactMatrix& m);

// Solves m x = rhs exactly; nullopt when m is singular.
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, std::span<const Rational> rhs);

std::optional<Multivector> oracle_inverse(const Multivector& a);
Rational oracle_det(const Multivector& a);
bool oracle_is_invertible(const Multivector& a);

}  // namespace clifinv
