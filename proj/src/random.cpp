#include "clifinv/random.hpp"

namespace clifinv {

Rational random_rational(Rng& rng, SampleRange range) {
  std::uniform_int_distribution<int> num(-range.max_numerator, range.max_numerator);
  std::uniform_int_distribution<int> den(1, range.max_denominator);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Multivector random_multivector(const Signature& sig, Rng& rng, SampleRange range) {
  Multivector m(sig);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = random_rational(rng, range);
  return m;
}

Multivector random_multivector_on(const Signature& sig, std::span<const Blade> support, Rng& rng,
                                  SampleRange range) {
  const CanonicalOrder& order = CanonicalOrder::of(sig.dim());
  Multivector m(sig);
  for (Blade b : support) m[order.index_of(b)] = random_rational(rng, range);
  return m;
}

Multivector random_even_multivector(const Signature& sig, Rng& rng, SampleRange range) {
  const CanonicalOrder& order = CanonicalOrder::of(sig.dim());
  Multivector m(sig);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (order.grade_at(i) % 2 == 0) m[i] = random_rational(rng, range);
  }
  return m;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace clifinv
