#include "clifinv/search.hpp"

#include <algorithm>
#include <sstream>

#include "clifinv/engine.hpp"
#include "clifinv/oracle.hpp"
#include "parallel.hpp"

namespace clifinv {
namespace {

using detail::run_indexed;

// Stable across runs and platforms, unlike std::hash.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string grade_digits(GradeSet g) {
  std::string out;
  for (int r : g.grades()) out += std::to_string(r);
  return out.empty() ? "none" : out;
}

Multivector sample(const Signature& sig, std::span<const Blade> support, Rng& rng) {
  return support.empty() ? random_multivector(sig, rng) : random_multivector_on(sig, support, rng);
}

// Subsets of `allowed` with at least one element, ordered by size and then
// by ascending grade list.
std::vector<GradeSet> nonempty_subsets(GradeSet allowed, int set_size) {
  std::vector<GradeSet> out;
  const std::uint32_t mask = allowed.mask();
  for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
    GradeSet g = GradeSet::from_mask(sub);
    if (set_size == 0 || static_cast<int>(g.size()) == set_size) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](GradeSet a, GradeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.grades() < b.grades();
  });
  return out;
}

ExprPtr self_product(ExprPtr x, GradeSet g) { return Expr::product({x, Expr::negate(g, x)}); }

// Reduced row echelon solve of rows * x = rhs. Free variables are set to
// zero. Returns nullopt when inconsistent.
std::optional<std::pair<std::vector<Rational>, int>> solve_least_free(
    std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::size_t unknowns) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    std::swap(rhs[p], rhs[rank]);
    const Rational inv = 1 / rows[rank][c];
    for (auto& v : rows[rank]) v *= inv;
    rhs[rank] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < unknowns; ++k) rows[r][k] -= f * rows[rank][k];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rhs[r] != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r];
  return std::make_pair(std::move(x), static_cast<int>(unknowns - rank));
}

// Values of each term on one sample, plus the scalar the sum must equal
// (nullopt: no constraint on the scalar part).
struct SamplePoint {
  std::vector<Multivector> values;
  std::optional<Rational> target;
};

std::optional<WeightSolution> solve_points(const std::vector<CandidatePattern>& terms,
                                           const std::vector<SamplePoint>& points) {
  const std::size_t k = terms.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (const SamplePoint& pt : points) {
    const std::size_t size = pt.values.front().size();
    for (std::size_t i = 0; i < size; ++i) {
      if (i == 0 && !pt.target) continue;
      std::vector<Rational> row(k);
      bool any = false;
      for (std::size_t t = 0; t < k; ++t) {
        row[t] = pt.values[t][i];
        any = any || row[t] != 0;
      }
      Rational r = i == 0 ? *pt.target : Rational(0);
      if (!any) {
        if (r != 0) return std::nullopt;
        continue;
      }
      rows.push_back(std::move(row));
      rhs.push_back(std::move(r));
    }
  }
  auto solved = solve_least_free(std::move(rows), std::move(rhs), k);
  if (!solved) return std::nullopt;
  return WeightSolution{terms, std::move(solved->first), solved->second};
}

bool matches(const WeightSolution& w, const SamplePoint& pt) {
  Multivector sum(pt.values.front().signature());
  for (std::size_t t = 0; t < w.weights.size(); ++t) sum += pt.values[t] * w.weights[t];
  if (!sum.is_scalar()) return false;
  return !pt.target || sum.scalar_part() == *pt.target;
}

SamplePoint evaluate_point(const std::vector<CandidatePattern>& terms, const Multivector& b,
                           FitTarget target, std::span<const Blade> support) {
  SamplePoint pt;
  Evaluator<Rational> ev(b);
  for (const auto& t : terms) pt.values.push_back(ev(*t.expr));
  if (target == FitTarget::restricted_det) {
    pt.target = determinant(left_matrix_on(b, support));
  }
  return pt;
}

std::vector<SamplePoint> make_points(const std::vector<CandidatePattern>& terms,
                                     const Signature& sig, std::span<const Blade> support,
                                     FitTarget target, int samples, Rng& rng) {
  std::vector<SamplePoint> points;
  if (target == FitTarget::scalar_normalized) {
    SamplePoint unit = evaluate_point(terms, Multivector::scalar(sig, 1), target, support);
    unit.target = Rational(1);
    points.push_back(std::move(unit));
  }
  for (int s = 0; s < samples; ++s) {
    points.push_back(evaluate_point(terms, sample(sig, support, rng), target, support));
  }
  return points;
}

std::string join_weights(const std::vector<Rational>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + to_string(w[i]);
  return out;
}

std::string steps_text(const std::vector<GradeSet>& steps) {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) out += (i ? " -> " : "") + steps[i].to_string();
  return out;
}

}  // namespace

CandidatePattern chain_pattern(int n, const std::vector<GradeSet>& steps) {
  CandidatePattern p;
  p.steps = steps;
  p.expr = Expr::input();
  p.id = "chain.n" + std::to_string(n);
  for (GradeSet g : steps) {
    p.expr = self_product(p.expr, g);
    p.id += "." + grade_digits(g);
  }
  p.description = steps.empty() ? "A" : steps_text(steps);
  return p;
}

GradeSet surviving_grades(const Expr& pattern, const Signature& sig, int samples,
                          std::uint64_t seed, std::span<const Blade> support) {
  if (samples < 1) throw std::invalid_argument("surviving_grades needs at least one sample");
  Rng rng(seed);
  GradeSet out;
  for (int s = 0; s < samples; ++s) out = out | eval(pattern, sample(sig, support, rng)).grades();
  return out;
}

PatternVerdict audit_pattern(const CandidatePattern& pattern, int n, const SearchConfig& config) {
  PatternVerdict v;
  v.pattern = pattern;
  const std::uint64_t base = derive_seed(config.seed, fnv1a(pattern.expr->text()));
  const auto signatures = Signature::all_of_dimension(n);
  for (std::size_t s = 0; s < signatures.size(); ++s) {
    GradeSet g =
        surviving_grades(*pattern.expr, signatures[s], config.screen_samples, derive_seed(base, s));
    v.surviving = v.surviving | g;
    if (!(g == GradeSet{0}) && !g.empty() && !v.witness) v.witness = signatures[s];
  }
  if (v.witness) return v;
  for (std::size_t s = 0; s < signatures.size(); ++s) {
    GradeSet g = surviving_grades(*pattern.expr, signatures[s], config.verify_samples,
                                  derive_seed(base, s + 1000));
    v.surviving = v.surviving | g;
    if (!(g == GradeSet{0}) && !g.empty() && !v.witness) v.witness = signatures[s];
  }
  v.valid = !v.witness;
  return v;
}

SearchReport single_product_sweep(const Signature& sig, const SearchConfig& config,
                                  std::span<const Blade> support) {
  SearchReport report;
  report.title = "single-product sweep " + sig.to_string() +
                 (support.empty() ? "" : " on " + std::to_string(support.size()) + " blades");
  const int n = sig.dim();
  std::vector<GradeSet> sets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) sets.push_back(GradeSet::from_mask(mask << 1));
  std::vector<PatternVerdict> verdicts(sets.size());
  run_indexed(sets.size(), config.threads, [&](std::size_t i) {
    PatternVerdict& v = verdicts[i];
    v.pattern.expr = self_product(Expr::input(), sets[i]);
    v.pattern.steps = {sets[i]};
    v.pattern.id = "sweep.n" + std::to_string(n) + "." + grade_digits(sets[i]);
    v.pattern.description = "A (A)_" + sets[i].to_string();
    const std::uint64_t seed = derive_seed(config.seed, i);
    v.surviving = surviving_grades(*v.pattern.expr, sig, config.screen_samples, seed, support);
    if (v.surviving == GradeSet{0}) {
      v.surviving = v.surviving | surviving_grades(*v.pattern.expr, sig, config.verify_samples,
                                                   derive_seed(seed, 1), support);
    }
    v.valid = v.surviving == GradeSet{0} || v.surviving.empty();
    if (!v.valid) v.witness = sig;
  });
  GradeSet always = GradeSet::range(0, n);
  for (auto& v : verdicts) {
    always = always & v.surviving;
    (v.valid ? report.verified : report.rejected).push_back(std::move(v));
  }
  report.notes.push_back(std::to_string(sets.size()) + " negation sets; grades surviving every set: " +
                         always.without(0).to_string());
  return report;
}

std::span<const Blade> grade4_subalgebra() {
  static const Blade kBlades[] = {Blade{0}, Blade::of({1, 2, 5, 6}), Blade::of({1, 3, 4, 6}),
                                  Blade::of({2, 3, 4, 5})};
  return kBlades;
}

bool is_closed_under_product(const Signature& sig, std::span<const Blade> basis) {
  for (Blade a : basis) {
    for (Blade b : basis) {
      const Blade c = blade_mul(sig, a, b).blade;
      if (std::find(basis.begin(), basis.end(), c) == basis.end()) return false;
    }
  }
  return true;
}

SearchReport rediscover(int n, const SearchConfig& config) {
  if (n < 0 || n > 4) throw std::invalid_argument("rediscover supports n <= 4");
  SearchReport report;
  report.title = "rediscover n=" + std::to_string(n);
  int steps_needed = 0;
  while ((1 << steps_needed) < factor_count(n)) ++steps_needed;
  if (steps_needed > config.max_steps) {
    report.truncated = true;
    report.notes.push_back("needs " + std::to_string(steps_needed) + " steps, max_steps is " +
                           std::to_string(config.max_steps));
    return report;
  }

  const auto signatures = Signature::all_of_dimension(n);
  std::vector<std::vector<GradeSet>> frontier{{}};
  for (int level = 0; level < steps_needed; ++level) {
    std::vector<std::vector<GradeSet>> next;
    for (const auto& prefix : frontier) {
      const CandidatePattern p = chain_pattern(n, prefix);
      GradeSet present;
      const std::uint64_t base = derive_seed(config.seed, fnv1a(p.expr->text()));
      for (std::size_t s = 0; s < signatures.size(); ++s) {
        present = present | surviving_grades(*p.expr, signatures[s], config.screen_samples,
                                             derive_seed(base, s));
      }
      auto sets = nonempty_subsets(present.without(0), config.set_size);
      if (static_cast<int>(sets.size()) > config.max_sets_per_step) {
        report.truncated = true;
        report.notes.push_back("after " + (prefix.empty() ? std::string("A") : steps_text(prefix)) +
                               ": kept " + std::to_string(config.max_sets_per_step) + " of " +
                               std::to_string(sets.size()) + " negation sets");
        sets.resize(config.max_sets_per_step);
      }
      for (GradeSet g : sets) {
        auto steps = prefix;
        steps.push_back(g);
        next.push_back(std::move(steps));
      }
    }
    frontier = std::move(next);
  }

  std::vector<PatternVerdict> verdicts(frontier.size());
  run_indexed(frontier.size(), config.threads, [&](std::size_t i) {
    verdicts[i] = audit_pattern(chain_pattern(n, frontier[i]), n, config);
  });
  for (auto& v : verdicts) (v.valid ? report.verified : report.rejected).push_back(std::move(v));
  report.notes.push_back(std::to_string(frontier.size()) + " candidates over " +
                         std::to_string(signatures.size()) + " signatures");
  return report;
}

FitResult fit_weights(const std::vector<CandidatePattern>& terms, const Signature& sig,
                      std::span<const Blade> support, FitTarget target, int samples,
                      std::uint64_t seed) {
  if (terms.size() < 2) throw std::invalid_argument("fit_weights needs at least two terms");
  if (samples < 1) throw std::invalid_argument("fit_weights needs at least one sample");
  if (target == FitTarget::restricted_det && !is_closed_under_product(sig, support)) {
    throw std::invalid_argument("restricted determinant needs a closed sub-basis");
  }
  Rng rng(seed);
  auto fit_points = make_points(terms, sig, support, target, samples, rng);
  auto solution = solve_points(terms, fit_points);
  if (!solution) return Infeasible{"no weights satisfy the sampled equations"};
  for (int s = 0; s < samples; ++s) {
    SamplePoint pt = evaluate_point(terms, sample(sig, support, rng), target, support);
    if (!matches(*solution, pt)) return Infeasible{"weights fail on a held-out sample"};
  }
  return *solution;
}

CandidatePattern grade4_term(unsigned signs) {
  if (signs >= 32) throw std::invalid_argument("grade4_term takes a 5-bit sign mask");
  const GradeSet four{4};
  const auto f = [&](int j, ExprPtr x) {
    return (signs >> (j - 1)) & 1u ? Expr::negate(four, std::move(x)) : x;
  };
  const ExprPtr b = Expr::input();
  ExprPtr inner = Expr::product({f(2, b), f(1, b)});
  ExprPtr middle = Expr::product({f(4, b), f(3, inner)});
  CandidatePattern p;
  p.expr = Expr::product({b, f(5, middle)});
  std::string code;
  for (int j = 1; j <= 5; ++j) code += (signs >> (j - 1)) & 1u ? '-' : '+';
  p.id = "g4." + code;
  p.description = "B f5(f4(B) f3(f2(B) f1(B))), f1..f5 = " + code;
  return p;
}

SearchReport fit_grade4_pairs(const SearchConfig& config) {
  const Signature sig(6, 0);
  const auto support = grade4_subalgebra();
  SearchReport report;
  report.title = "weight fit for two-term grade-4 patterns in " + sig.to_string();

  std::vector<CandidatePattern> patterns;
  for (unsigned s = 0; s < 32; ++s) patterns.push_back(grade4_term(s));

  // Every pattern on the same fitting samples, evaluated once.
  Rng rng(derive_seed(config.seed, 0));
  auto points = make_points(patterns, sig, support, FitTarget::restricted_det,
                            config.screen_samples, rng);

  const std::size_t count = patterns.size() * patterns.size();
  std::vector<std::optional<WeightSolution>> fits(count);
  run_indexed(count, config.threads, [&](std::size_t idx) {
    const std::size_t a = idx / patterns.size();
    const std::size_t b = idx % patterns.size();
    std::vector<SamplePoint> pair_points;
    for (const auto& pt : points) pair_points.push_back({{pt.values[a], pt.values[b]}, pt.target});
    fits[idx] = solve_points({patterns[a], patterns[b]}, pair_points);
  });

  std::size_t feasible = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!fits[idx]) continue;
    ++feasible;
    WeightSolution& w = *fits[idx];

    // Held-out check on the subalgebra, then on scalar + all grade-4 blades
    // against the full left-regular determinant (= restricted det ^ 16).
    Rng check_rng(derive_seed(config.seed, 1 + idx));
    bool ok = true;
    for (int s = 0; ok && s < config.verify_samples; ++s) {
      auto pt = evaluate_point(w.terms, sample(sig, support, check_rng), FitTarget::restricted_det,
                               support);
      ok = matches(w, pt);
    }
    std::vector<Blade> grade4{Blade{0}};
    for (std::size_t i = CanonicalOrder::of(6).grade_begin(4); i < CanonicalOrder::of(6).grade_end(4);
         ++i) {
      grade4.push_back(CanonicalOrder::of(6).blade_at(i));
    }
    for (int s = 0; ok && s < 2; ++s) {
      Multivector c = random_multivector_on(sig, grade4, check_rng);
      Evaluator<Rational> ev(c);
      Multivector sum(sig);
      for (std::size_t t = 0; t < w.terms.size(); ++t) sum += ev(*w.terms[t].expr) * w.weights[t];
      ok = sum.is_scalar();
      if (ok) {
        mpq_class power;
        mpz_pow_ui(power.get_num_mpz_t(), sum.scalar_part().get_num_mpz_t(), 16);
        mpz_pow_ui(power.get_den_mpz_t(), sum.scalar_part().get_den_mpz_t(), 16);
        ok = power == oracle_det(c);
      }
    }

    // Normalize the global sign so the identity maps to +1.
    Evaluator<Rational> unit(Multivector::scalar(sig, 1));
    Rational at_unit = 0;
    for (std::size_t t = 0; t < w.terms.size(); ++t) {
      at_unit += unit(*w.terms[t].expr).scalar_part() * w.weights[t];
    }
    if (at_unit < 0) {
      for (auto& x : w.weights) x = -x;
    }

    if (ok) {
      report.solutions.push_back(std::move(w));
    } else {
      report.notes.push_back("pair " + w.terms[0].id + " + " + w.terms[1].id +
                             " fit the samples but failed validation");
    }
  }
  report.notes.push_back(std::to_string(count) + " assignments, " + std::to_string(feasible) +
                         " consistent on the fitting samples, " +
                         std::to_string(report.solutions.size()) + " validated");
  return report;
}

std::string SearchReport::to_text() const {
  std::ostringstream out;
  out << "# " << title << "\n";
  for (const auto& v : verified) {
    out << "verified  " << v.pattern.id << "  " << v.pattern.description << "\n";
  }
  for (const auto& v : rejected) {
    out << "rejected  " << v.pattern.id << "  " << v.pattern.description << "  surviving "
        << v.surviving.to_string();
    if (v.witness) out << " in " << v.witness->to_string();
    out << "\n";
  }
  for (const auto& s : solutions) {
    out << "solution ";
    for (std::size_t i = 0; i < s.terms.size(); ++i) out << " " << s.terms[i].id;
    out << "  weights " << join_weights(s.weights);
    if (s.free_dimensions) out << "  (family of dimension " << s.free_dimensions << ")";
    out << "\n";
  }
  for (const auto& n : notes) out << "note  " << n << "\n";
  out << "truncated  " << (truncated ? "yes" : "no") << "\n";
  return out.str();
}

std::string SearchReport::to_catalog_lines(int n) const {
  std::ostringstream out;
  const auto line = [&](const std::string& id, const ExprPtr& det, const std::string& what) {
    ExprPtr adj = strip_leading_input(det);
    if (!adj) return;
    out << id << " | " << n << " | " << det->text() << " | " << flatten(adj)->text()
        << " | search " << what << " | verified\n";
  };
  for (const auto& v : verified) line(v.pattern.id, v.pattern.expr, v.pattern.description);
  for (const auto& s : solutions) {
    std::vector<std::pair<Rational, ExprPtr>> terms;
    std::string id = "fit";
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      terms.emplace_back(s.weights[i], s.terms[i].expr);
      id += "." + s.terms[i].id;
    }
    line(id, Expr::weighted_sum(std::move(terms)), "weights " + join_weights(s.weights));
  }
  return out.str();
}

}  // namespace clifinv
