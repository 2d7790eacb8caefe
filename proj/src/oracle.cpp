#include "clifinv/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace clifinv {
namespace {

struct IntegerRows {
  std::vector<std::vector<mpz_class>> rows;
  // Product of the per-row scale factors; det(m) = det(rows) / scale.
  mpz_class scale = 1;
};

// Scales every row (together with its rhs entry, if any) by the lcm of its
// denominators.
IntegerRows integerize(const ExactMatrix& m, std::span<const Rational> rhs) {
  IntegerRows out;
  const std::size_t width = m.cols() + (rhs.empty() ? 0 : 1);
  out.rows.assign(m.rows(), std::vector<mpz_class>(width));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    }
    if (!rhs.empty()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs[r].get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.rows[r][c] = m.at(r, c).get_num() * (lcm / m.at(r, c).get_den());
    }
    if (!rhs.empty()) out.rows[r][m.cols()] = rhs[r].get_num() * (lcm / rhs[r].get_den());
    out.scale *= lcm;
  }
  return out;
}

// In-place Bareiss elimination to upper-triangular form over the first n
// columns. Returns false if singular; `swaps` counts row exchanges.
bool bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t n, int& swaps) {
  swaps = 0;
  mpz_class prev = 1;
  const std::size_t width = a.empty() ? 0 : a.front().size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        mpz_class& x = a[i][j];
        x *= a[k][k];
        mpz_submul(x.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return out;
}

ExactMatrix left_matrix(const Multivector& a) {
  const std::size_t n = a.size();
  const ProductTable& table = ProductTable::of(a.signature());
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = table.at(i, j);
      m.at(e.index, j) += e.sign > 0 ? a[i] : Rational(-a[i]);
    }
  }
  return m;
}

ExactMatrix left_matrix_on(const Multivector& a, std::span<const Blade> basis) {
  const CanonicalOrder& order = CanonicalOrder::of(a.dim());
  ExactMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Multivector col = gp(a, Multivector::basis(a.signature(), basis[j]));
    Multivector rest = col;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::size_t k = order.index_of(basis[i]);
      m.at(i, j) = col[k];
      rest[k] = 0;
    }
    if (!rest.is_zero()) throw std::invalid_argument("left multiplication leaves the sub-basis span");
  }
  return m;
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerRows ir = integerize(m, {});
  int swaps = 0;
  if (!bareiss(ir.rows, m.rows(), swaps)) return 0;
  Rational det(ir.rows.back().back(), ir.scale);
  det.canonicalize();
  return swaps % 2 ? Rational(-det) : det;
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve shape mismatch");
  IntegerRows ir = integerize(m, rhs);
  int swaps = 0;
  if (!bareiss(ir.rows, n, swaps)) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = ir.rows[k][n];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (ir.rows[k][j] != 0) acc -= Rational(ir.rows[k][j]) * x[j];
    }
    x[k] = acc / Rational(ir.rows[k][k]);
  }
  return x;
}

std::optional<Multivector> oracle_inverse(const Multivector& a) {
  std::vector<Rational> unit(a.size());
  unit[0] = 1;
  auto x = solve(left_matrix(a), unit);
  if (!x) return std::nullopt;
  return Multivector(a.signature(), std::move(*x));
}

Rational oracle_det(const Multivector& a) { return determinant(left_matrix(a)); }

bool oracle_is_invertible(const Multivector& a) { return oracle_det(a) != 0; }

}  // namespace clifinv
