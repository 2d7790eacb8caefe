#include "clifinv/algebra.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace clifinv {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) {
    throw std::invalid_argument("signature counts must be non-negative");
  }
  if (p + q > kMaxDimension) {
    throw std::invalid_argument("Cl(" + std::to_string(p) + "," + std::to_string(q) +
                                ") exceeds the supported dimension " +
                                std::to_string(kMaxDimension));
  }
}

std::string Signature::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::vector<Signature> Signature::all_of_dimension(int n) {
  if (n < 0 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
  std::vector<Signature> out;
  for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
  return out;
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string Blade::name() const {
  if (bits == 0) return "1";
  std::string out = "e";
  for (int i : indices()) out += std::to_string(i);
  return out;
}

Blade Blade::of(std::initializer_list<int> indices) {
  Blade b;
  for (int i : indices) {
    if (i < 1 || i > kMaxDimension) throw std::invalid_argument("basis index out of range");
    if (b.contains(i)) throw std::invalid_argument("repeated basis index");
    b.bits |= 1u << (i - 1);
  }
  return b;
}

SignedBlade blade_mul(const Signature& sig, Blade a, Blade b) {
  // Move each vector of b leftwards past the vectors of a with larger index.
  int swaps = 0;
  for (std::uint32_t rest = a.bits >> 1; rest != 0; rest >>= 1) {
    swaps += std::popcount(rest & b.bits);
  }
  int sign = (swaps & 1) ? -1 : 1;
  const std::uint32_t negative_mask = ((1u << sig.dim()) - 1) & ~((1u << sig.p()) - 1);
  if (std::popcount(a.bits & b.bits & negative_mask) & 1) sign = -sign;
  return {sign, Blade{a.bits ^ b.bits}};
}

SignedBlade blade_from_sequence(std::span<const int> indices) {
  int sign = 1;
  Blade acc;
  for (int i : indices) {
    if (i < 1 || i > kMaxDimension) throw std::invalid_argument("basis index out of range");
    if (acc.contains(i)) throw std::invalid_argument("repeated basis index");
    // e_i moves left past every already-placed index greater than i.
    if (std::popcount(acc.bits >> i) & 1) sign = -sign;
    acc.bits |= 1u << (i - 1);
  }
  return {sign, acc};
}

GradeSet::GradeSet(std::initializer_list<int> grades) {
  for (int g : grades) *this = with(g);
}

GradeSet GradeSet::from_mask(std::uint32_t mask) {
  if (mask >> (kMaxDimension + 1)) throw std::invalid_argument("grade mask out of range");
  GradeSet s;
  s.mask_ = mask;
  return s;
}

GradeSet GradeSet::range(int lo, int hi) {
  GradeSet s;
  for (int g = lo; g <= hi; ++g) s = s.with(g);
  return s;
}

std::vector<int> GradeSet::grades() const {
  std::vector<int> out;
  for (int g = 0; g <= kMaxDimension; ++g) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

GradeSet GradeSet::with(int grade) const {
  if (grade < 0 || grade > kMaxDimension) {
    throw std::invalid_argument("grade " + std::to_string(grade) + " out of range");
  }
  return from_mask(mask_ | (1u << grade));
}

GradeSet GradeSet::without(int grade) const {
  if (grade < 0 || grade > kMaxDimension) return *this;
  return from_mask(mask_ & ~(1u << grade));
}

std::string GradeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int g : grades()) {
    if (!first) out += ",";
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

CanonicalOrder::CanonicalOrder(int n) : n_(n) {
  const std::size_t count = std::size_t{1} << n;
  blades_.reserve(count);
  for (std::uint32_t bits = 0; bits < count; ++bits) blades_.push_back(Blade{bits});
  std::sort(blades_.begin(), blades_.end(), [](Blade a, Blade b) {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    return a.indices() < b.indices();
  });
  index_of_bits_.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) index_of_bits_[blades_[i].bits] = i;
  offsets_.fill(count);
  offsets_[0] = 0;
  for (int r = 1; r <= n + 1; ++r) {
    offsets_[r] = offsets_[r - 1];
    while (offsets_[r] < count && blades_[offsets_[r]].grade() < r) ++offsets_[r];
  }
}

const CanonicalOrder& CanonicalOrder::of(int n) {
  static const auto orders = [] {
    std::array<std::unique_ptr<CanonicalOrder>, kMaxDimension + 1> out;
    for (int k = 0; k <= kMaxDimension; ++k) out[k].reset(new CanonicalOrder(k));
    return out;
  }();
  if (n < 0 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
  return *orders[n];
}

ProductTable::ProductTable(const Signature& sig) : size_(sig.blade_count()) {
  const CanonicalOrder& order = CanonicalOrder::of(sig.dim());
  entries_.resize(size_ * size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      SignedBlade r = blade_mul(sig, order.blade_at(i), order.blade_at(j));
      entries_[i * size_ + j] = Entry{static_cast<std::uint8_t>(order.index_of(r.blade)),
                                      static_cast<std::int8_t>(r.sign)};
    }
  }
}

const ProductTable& ProductTable::of(const Signature& sig) {
  static const auto tables = [] {
    std::array<std::array<std::unique_ptr<ProductTable>, kMaxDimension + 1>, kMaxDimension + 1>
        out;
    for (int p = 0; p <= kMaxDimension; ++p) {
      for (int q = 0; p + q <= kMaxDimension; ++q) {
        out[p][q].reset(new ProductTable(Signature(p, q)));
      }
    }
    return out;
  }();
  return *tables[sig.p()][sig.q()];
}

GradeSet reverse_grades(int n) {
  GradeSet s;
  for (int r = 0; r <= n; ++r) {
    if (r % 4 == 2 || r % 4 == 3) s = s.with(r);
  }
  return s;
}

GradeSet grade_involution_grades(int n) {
  GradeSet s;
  for (int r = 0; r <= n; ++r) {
    if (r % 2 == 1) s = s.with(r);
  }
  return s;
}

GradeSet clifford_conjugate_grades(int n) {
  GradeSet s;
  for (int r = 0; r <= n; ++r) {
    if (r % 4 == 1 || r % 4 == 2) s = s.with(r);
  }
  return s;
}

}  // namespace clifinv
