#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clifinv/algebra.hpp"
#include "clifinv/errors.hpp"
#include "clifinv/rational.hpp"

namespace clifinv {

// Dense multivector: 2^n coefficients in canonical order. T is Rational for
// every correctness path; double is instantiated for benchmarking only.
template <class T>
class BasicMultivector {
 public:
  using value_type = T;

  explicit BasicMultivector(Signature sig) : sig_(sig), coeffs_(sig.blade_count(), T(0)) {}

  BasicMultivector(Signature sig, std::vector<T> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.blade_count()) {
      throw std::invalid_argument("expected " + std::to_string(sig_.blade_count()) +
                                  " coefficients for " + sig_.to_string());
    }
  }

  static BasicMultivector scalar(Signature sig, T value) {
    BasicMultivector m(sig);
    m.coeffs_[0] = std::move(value);
    return m;
  }

  static BasicMultivector basis(Signature sig, Blade b, T value = T(1)) {
    if (b.bits >> sig.dim()) throw std::invalid_argument("blade outside " + sig.to_string());
    BasicMultivector m(sig);
    m.coeffs_[CanonicalOrder::of(sig.dim()).index_of(b)] = std::move(value);
    return m;
  }

  const Signature& signature() const { return sig_; }
  int dim() const { return sig_.dim(); }
  std::size_t size() const { return coeffs_.size(); }

  std::span<const T> coeffs() const { return coeffs_; }
  const T& operator[](std::size_t index) const { return coeffs_[index]; }
  T& operator[](std::size_t index) { return coeffs_[index]; }

  const T& coeff(Blade b) const { return coeffs_[CanonicalOrder::of(dim()).index_of(b)]; }
  const T& scalar_part() const { return coeffs_[0]; }

  bool is_zero() const {
    for (const T& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  bool is_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return false;
    }
    return true;
  }

  // Grades carrying at least one nonzero coefficient.
  GradeSet grades() const {
    const CanonicalOrder& order = CanonicalOrder::of(dim());
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) mask |= 1u << order.grade_at(i);
    }
    return GradeSet::from_mask(mask);
  }

  BasicMultivector operator-() const {
    BasicMultivector out(*this);
    for (T& c : out.coeffs_) c = -c;
    return out;
  }

  BasicMultivector& operator+=(const BasicMultivector& other) {
    require_same(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }

  BasicMultivector& operator-=(const BasicMultivector& other) {
    require_same(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }

  BasicMultivector& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    return *this;
  }

  BasicMultivector& operator/=(const T& s) {
    for (T& c : coeffs_) c /= s;
    return *this;
  }

  friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
  friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
  friend BasicMultivector operator*(BasicMultivector a, const T& s) { return a *= s; }
  friend BasicMultivector operator*(const T& s, BasicMultivector a) { return a *= s; }
  friend BasicMultivector operator/(BasicMultivector a, const T& s) { return a /= s; }

  friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

  void require_same(const BasicMultivector& other) const {
    if (!(sig_ == other.sig_)) {
      throw SignatureMismatch("signature mismatch: " + sig_.to_string() + " vs " +
                              other.sig_.to_string());
    }
  }

 private:
  Signature sig_;
  std::vector<T> coeffs_;
};

using Multivector = BasicMultivector<Rational>;
using MultivectorD = BasicMultivector<double>;

// Geometric product. Output grades listed in `skip` are not computed and come
// back as zero; callers use this when they know those grades must vanish.
template <class T>
BasicMultivector<T> gp(const BasicMultivector<T>& a, const BasicMultivector<T>& b,
                       GradeSet skip = {}) {
  a.require_same(b);
  const ProductTable& table = ProductTable::of(a.signature());
  const CanonicalOrder& order = CanonicalOrder::of(a.dim());
  BasicMultivector<T> out(a.signature());
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const auto& e = table.at(i, j);
      if (skip.contains(order.grade_at(e.index))) continue;
      if (e.sign > 0) {
        out[e.index] += a[i] * b[j];
      } else {
        out[e.index] -= a[i] * b[j];
      }
    }
  }
  return out;
}

// Rational overload: accumulates over a common integer denominator so the
// inner loop is pure integer multiply-add.
Multivector gp(const Multivector& a, const Multivector& b, GradeSet skip = {});

template <class T>
BasicMultivector<T> operator*(const BasicMultivector<T>& a, const BasicMultivector<T>& b) {
  return gp(a, b);
}

template <class T>
BasicMultivector<T> grade_part(const BasicMultivector<T>& a, int r) {
  if (r < 0 || r > a.dim()) {
    throw std::out_of_range("grade " + std::to_string(r) + " outside " +
                            a.signature().to_string());
  }
  const CanonicalOrder& order = CanonicalOrder::of(a.dim());
  BasicMultivector<T> out(a.signature());
  for (std::size_t i = order.grade_begin(r); i < order.grade_end(r); ++i) out[i] = a[i];
  return out;
}

template <class T>
BasicMultivector<T> grade_negate(const BasicMultivector<T>& a, GradeSet grades) {
  const CanonicalOrder& order = CanonicalOrder::of(a.dim());
  BasicMultivector<T> out(a);
  for (int r : grades.grades()) {
    if (r > a.dim()) break;
    for (std::size_t i = order.grade_begin(r); i < order.grade_end(r); ++i) out[i] = -out[i];
  }
  return out;
}

enum class Involution { reverse, grade_involution, clifford_conjugate };

inline GradeSet involution_grades(Involution kind, int n) {
  switch (kind) {
    case Involution::reverse:
      return reverse_grades(n);
    case Involution::grade_involution:
      return grade_involution_grades(n);
    case Involution::clifford_conjugate:
      return clifford_conjugate_grades(n);
  }
  return {};
}

template <class T>
BasicMultivector<T> involution(const BasicMultivector<T>& a, Involution kind) {
  return grade_negate(a, involution_grades(kind, a.dim()));
}

template <class T>
BasicMultivector<T> reverse(const BasicMultivector<T>& a) {
  return involution(a, Involution::reverse);
}

template <class T>
BasicMultivector<T> linear_combine(std::span<const std::pair<T, BasicMultivector<T>>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combine needs at least one term");
  BasicMultivector<T> out(terms.front().second.signature());
  for (const auto& [weight, mv] : terms) out += mv * weight;
  return out;
}

template <class T>
BasicMultivector<T> linear_combine(const std::vector<std::pair<T, BasicMultivector<T>>>& terms) {
  return linear_combine(std::span<const std::pair<T, BasicMultivector<T>>>(terms));
}

}  // namespace clifinv
