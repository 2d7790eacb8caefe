#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "clifinv/multivector.hpp"

namespace clifinv {

using Rng = std::mt19937_64;

// Coefficients are drawn as a/b with a uniform in [-max_numerator,
// max_numerator] and b uniform in [1, max_denominator].
struct SampleRange {
  int max_numerator = 99;
  int max_denominator = 9;
};

Rational random_rational(Rng& rng, SampleRange range = {});

Multivector random_multivector(const Signature& sig, Rng& rng, SampleRange range = {});

// Random combination of the listed blades only; all other coefficients zero.
Multivector random_multivector_on(const Signature& sig, std::span<const Blade> support, Rng& rng,
                                  SampleRange range = {});

Multivector random_even_multivector(const Signature& sig, Rng& rng, SampleRange range = {});

// Stable per-task seed so sharded work reproduces serial results.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace clifinv
