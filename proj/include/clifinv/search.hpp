#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "clifinv/formula.hpp"
#include "clifinv/random.hpp"

namespace clifinv {

struct SearchConfig {
  std::uint64_t seed = 1;
  // Samples per signature used to discard candidates quickly.
  int screen_samples = 8;
  // Fresh samples per signature a candidate must pass to be reported valid.
  int verify_samples = 50;
  // Longest chain of self-products X <- X (X)_G that rediscover builds.
  int max_steps = 2;
  // Cap on distinct negation sets tried per step; hitting it marks the
  // report truncated.
  int max_sets_per_step = 64;
  // When nonzero, only negation sets of exactly this size are enumerated.
  int set_size = 0;
  int threads = 1;
};

// A candidate determinant-norm expression. `steps` is filled for chained
// self-products X_0 = A, X_{k+1} = X_k (X_k)_{steps[k]}.
struct CandidatePattern {
  std::string id;
  std::string description;
  ExprPtr expr;
  std::vector<GradeSet> steps;
};

CandidatePattern chain_pattern(int n, const std::vector<GradeSet>& steps);

struct PatternVerdict {
  CandidatePattern pattern;
  bool valid = false;
  // Union of grades seen across all tested samples and signatures.
  GradeSet surviving;
  // First signature in which a non-scalar residue appeared.
  std::optional<Signature> witness;
};

struct WeightSolution {
  std::vector<CandidatePattern> terms;
  std::vector<Rational> weights;
  // Dimension of the solution family; 0 when the weights are unique.
  int free_dimensions = 0;
};

struct SearchReport {
  std::string title;
  std::vector<PatternVerdict> verified;
  std::vector<PatternVerdict> rejected;
  std::vector<WeightSolution> solutions;
  std::vector<std::string> notes;
  bool truncated = false;

  std::string to_text() const;
  // Verified patterns and weight solutions in the catalog line format.
  std::string to_catalog_lines(int n) const;
};

// Union over `samples` random inputs of the grades present in eval(pattern).
GradeSet surviving_grades(const Expr& pattern, const Signature& sig, int samples,
                          std::uint64_t seed, std::span<const Blade> support = {});

// Scalar-ness audit over every signature of dimension n: screen samples
// first, then verify_samples fresh ones.
PatternVerdict audit_pattern(const CandidatePattern& pattern, int n, const SearchConfig& config);

// Records surviving grades of A (A)_G for every G within {1..n}; G is
// verified when only grade 0 survives. With a support, A ranges over the
// span of those blades only.
SearchReport single_product_sweep(const Signature& sig, const SearchConfig& config = {},
                                  std::span<const Blade> support = {});

// Blades {1, e1256, e1346, e2345}: a closed subalgebra of Cl(6,0) on which no
// single self-product removes grade 4.
std::span<const Blade> grade4_subalgebra();

bool is_closed_under_product(const Signature& sig, std::span<const Blade> basis);

// Enumerates chained self-products with factor_count(n) factors and keeps
// those that are scalar for every signature of dimension n <= 4. Step sets
// are reduced to the grades actually present before negation.
SearchReport rediscover(int n, const SearchConfig& config = {});

// Target of a weight fit.
enum class FitTarget {
  // Sum must equal the determinant of left multiplication restricted to the
  // span of the sample support (support must be a closed subalgebra).
  restricted_det,
  // Sum must be scalar, normalized to 1 at the identity.
  scalar_normalized,
};

struct Infeasible {
  std::string reason;
};

using FitResult = std::variant<WeightSolution, Infeasible>;

// Solves exactly for weights b_k such that sum_k b_k term_k(B) matches the
// target on `samples` random B from Cl(sig) restricted to `support`, then
// checks the solution on the same number of fresh samples.
FitResult fit_weights(const std::vector<CandidatePattern>& terms, const Signature& sig,
                      std::span<const Blade> support, FitTarget target, int samples,
                      std::uint64_t seed);

// Term B f5(f4(B) f3(f2(B) f1(B))) with f_j = neg{4} when bit j-1 of `signs`
// is set and the identity otherwise.
CandidatePattern grade4_term(unsigned signs);

// Fits every ordered pair of grade4_term patterns (1024 assignments) on the
// grade-4 subalgebra of Cl(6,0). Feasible pairs are checked on fresh
// samples and then on scalar + all grade-4 blades against the full
// left-regular determinant.
SearchReport fit_grade4_pairs(const SearchConfig& config = {});

}  // namespace clifinv
