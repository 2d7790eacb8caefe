#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace clifinv {

// Engine limit on n = p + q. Dense storage grows as 2^n.
inline constexpr int kMaxDimension = 6;

// Metric signature of Cl(p,q): e_1..e_p square to +1, e_{p+1}..e_n to -1.
class Signature {
 public:
  constexpr Signature() = default;
  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  std::size_t blade_count() const { return std::size_t{1} << dim(); }

  // Square of basis vector e_index, 1-based.
  int square(int index) const { return index <= p_ ? 1 : -1; }

  std::string to_string() const;

  // Every (p,q) with p + q == n, ordered by descending p.
  static std::vector<Signature> all_of_dimension(int n);

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  int p_ = 0;
  int q_ = 0;
};

// Basis blade as a bitmask; bit i-1 is set iff e_i participates.
struct Blade {
  std::uint32_t bits = 0;

  int grade() const { return std::popcount(bits); }
  bool contains(int index) const { return (bits >> (index - 1)) & 1u; }

  // Ascending 1-based indices, e.g. {1,2,5} for e125.
  std::vector<int> indices() const;
  // "1" for the scalar unit, otherwise "e" followed by the indices.
  std::string name() const;

  static Blade of(std::initializer_list<int> indices);

  friend auto operator<=>(const Blade&, const Blade&) = default;
};

struct SignedBlade {
  int sign = 1;
  Blade blade;
};

// Orthonormal basis product: result mask is a XOR b; the sign combines the
// reordering parity with -1 for every shared index i > p.
SignedBlade blade_mul(const Signature& sig, Blade a, Blade b);

// Product of an ordered index list e_{i1} e_{i2} ... with distinct indices,
// reduced to a canonical blade. Used when reading hand-written blades like e21.
SignedBlade blade_from_sequence(std::span<const int> indices);

// Subset of grades {0..kMaxDimension}. Grades absent from an algebra are
// simply never matched, so negating them is a no-op.
class GradeSet {
 public:
  constexpr GradeSet() = default;
  GradeSet(std::initializer_list<int> grades);

  static GradeSet from_mask(std::uint32_t mask);
  // {lo, lo+1, ..., hi}
  static GradeSet range(int lo, int hi);

  bool contains(int grade) const {
    return grade >= 0 && grade <= kMaxDimension && ((mask_ >> grade) & 1u);
  }
  bool empty() const { return mask_ == 0; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  std::vector<int> grades() const;

  GradeSet with(int grade) const;
  GradeSet without(int grade) const;

  // "{1,4,5}", "{}" for the empty set.
  std::string to_string() const;

  friend GradeSet operator|(GradeSet a, GradeSet b) { return from_mask(a.mask_ | b.mask_); }
  friend GradeSet operator&(GradeSet a, GradeSet b) { return from_mask(a.mask_ & b.mask_); }
  friend auto operator<=>(const GradeSet&, const GradeSet&) = default;

 private:
  std::uint32_t mask_ = 0;
};

// Coefficient layout shared by all signatures of dimension n: grade ascending,
// then lexicographic on the ascending index list. For n = 2 this is
// [1, e1, e2, e12].
class CanonicalOrder {
 public:
  static const CanonicalOrder& of(int n);

  int dim() const { return n_; }
  std::size_t size() const { return blades_.size(); }

  std::size_t index_of(Blade b) const { return index_of_bits_[b.bits]; }
  Blade blade_at(std::size_t index) const { return blades_[index]; }
  int grade_at(std::size_t index) const { return blades_[index].grade(); }

  // Half-open range [grade_begin(r), grade_end(r)) of grade-r coefficients.
  std::size_t grade_begin(int r) const { return offsets_[r]; }
  std::size_t grade_end(int r) const { return offsets_[r + 1]; }

 private:
  explicit CanonicalOrder(int n);

  int n_;
  std::vector<Blade> blades_;
  std::vector<std::size_t> index_of_bits_;
  std::array<std::size_t, kMaxDimension + 2> offsets_{};
};

// Precomputed blade products in canonical index space for one signature.
class ProductTable {
 public:
  struct Entry {
    std::uint8_t index;
    std::int8_t sign;
  };

  static const ProductTable& of(const Signature& sig);

  std::size_t size() const { return size_; }
  const Entry& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

 private:
  explicit ProductTable(const Signature& sig);

  std::size_t size_;
  std::vector<Entry> entries_;
};

// Grade list of the standard involutions, chopped at dimension n.
GradeSet reverse_grades(int n);
GradeSet grade_involution_grades(int n);
GradeSet clifford_conjugate_grades(int n);

}  // namespace clifinv
