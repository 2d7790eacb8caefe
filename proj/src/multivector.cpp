#include "clifinv/multivector.hpp"

#include <vector>

namespace clifinv {
namespace {

// Numerators over the lcm of the nonzero coefficients' denominators.
struct IntegerForm {
  std::vector<mpz_class> numerators;
  std::vector<std::size_t> support;
  mpz_class denominator = 1;
};

IntegerForm to_integer_form(const Multivector& m) {
  IntegerForm f;
  f.numerators.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    f.support.push_back(i);
    mpz_lcm(f.denominator.get_mpz_t(), f.denominator.get_mpz_t(),
            m[i].get_den_mpz_t());
  }
  for (std::size_t i : f.support) {
    f.numerators[i] = m[i].get_num() * (f.denominator / m[i].get_den());
  }
  return f;
}

}  // namespace

Multivector gp(const Multivector& a, const Multivector& b, GradeSet skip) {
  a.require_same(b);
  const ProductTable& table = ProductTable::of(a.signature());
  const CanonicalOrder& order = CanonicalOrder::of(a.dim());
  const IntegerForm fa = to_integer_form(a);
  const IntegerForm fb = to_integer_form(b);

  std::vector<mpz_class> acc(a.size());
  for (std::size_t i : fa.support) {
    for (std::size_t j : fb.support) {
      const auto& e = table.at(i, j);
      if (skip.contains(order.grade_at(e.index))) continue;
      if (e.sign > 0) {
        mpz_addmul(acc[e.index].get_mpz_t(), fa.numerators[i].get_mpz_t(),
                   fb.numerators[j].get_mpz_t());
      } else {
        mpz_submul(acc[e.index].get_mpz_t(), fa.numerators[i].get_mpz_t(),
                   fb.numerators[j].get_mpz_t());
      }
    }
  }

  const mpz_class denominator = fa.denominator * fb.denominator;
  Multivector out(a.signature());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    out[k] = Rational(acc[k], denominator);
    out[k].canonicalize();
  }
  return out;
}

}  // namespace clifinv
