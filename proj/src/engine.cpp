#include "clifinv/engine.hpp"

#include <stdexcept>

#include "clifinv/errors.hpp"
#include "clifinv/formula.hpp"

namespace clifinv {
namespace {

const Rational& require_scalar(const Multivector& m, const FormulaEntry& entry) {
  if (!m.is_scalar()) {
    throw CatalogDefect("formula " + entry.id + " left non-scalar grades " +
                        m.grades().to_string() + " in " + m.signature().to_string());
  }
  return m.scalar_part();
}

void require_dimension(const Multivector& a, const FormulaEntry& entry) {
  if (entry.dim < a.dim()) {
    throw std::invalid_argument("formula " + entry.id + " is for dimension " +
                                std::to_string(entry.dim) + ", input has dimension " +
                                std::to_string(a.dim()));
  }
}

InverseResult evaluate_inverse(Evaluator<Rational>& ev, const FormulaEntry& entry) {
  Rational det = require_scalar(ev(*entry.det), entry);
  if (det == 0) return NonInvertible{det, entry.id, {}};
  Multivector adjugate = ev(*entry.adjugate);
  Multivector inv = adjugate / det;
  return Inversion{std::move(inv), std::move(adjugate), std::move(det), entry.id};
}

}  // namespace

int factor_count(int n) {
  static constexpr int kCounts[] = {1, 2, 2, 4, 4, 8, 8};
  if (n < 0 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
  return kCounts[n];
}

const FormulaEntry& resolve_formula(int dim, std::string_view id, const FormulaCatalog& catalog) {
  const FormulaEntry& entry = id.empty() ? catalog.default_for(dim) : catalog.at(id);
  if (entry.dim < dim) {
    throw std::invalid_argument("formula " + entry.id + " is for dimension " +
                                std::to_string(entry.dim) + ", input has dimension " +
                                std::to_string(dim));
  }
  return entry;
}

Rational det_norm(const Multivector& a, const FormulaEntry& entry) {
  require_dimension(a, entry);
  Evaluator<Rational> ev(a);
  return require_scalar(ev(*entry.det), entry);
}

Rational det_norm(const Multivector& a, std::string_view id, const FormulaCatalog& catalog) {
  return det_norm(a, resolve_formula(a.dim(), id, catalog));
}

InverseResult inverse(const Multivector& a, const FormulaEntry& entry) {
  require_dimension(a, entry);
  Evaluator<Rational> ev(a);
  return evaluate_inverse(ev, entry);
}

InverseResult inverse(const Multivector& a, std::string_view id, const FormulaCatalog& catalog) {
  return inverse(a, resolve_formula(a.dim(), id, catalog));
}

InverseResult even_inverse(const Multivector& a, const std::optional<Multivector>& v,
                           const FormulaCatalog& catalog) {
  const GradeSet odd = grade_involution_grades(a.dim());
  if (!(a.grades() & odd).empty()) {
    throw OddGradePresent("even inverse needs an even multivector, found grades " +
                          a.grades().to_string());
  }
  const FormulaEntry& entry = catalog.even_for(a.dim());
  if (!entry.det->uses_vector()) {
    Evaluator<Rational> ev(a);
    return evaluate_inverse(ev, entry);
  }

  std::vector<Multivector> candidates;
  if (v) {
    a.require_same(*v);
    if (!(v->grades() == GradeSet{1}) || !gp(*v, *v).is_scalar() || gp(*v, *v).scalar_part() == 0) {
      throw std::invalid_argument("auxiliary v must be a non-null vector");
    }
    candidates.push_back(*v);
  } else {
    for (int i = 1; i <= a.dim(); ++i) {
      candidates.push_back(Multivector::basis(a.signature(), Blade{1u << (i - 1)}));
    }
  }

  NonInvertible failure{Rational(0), entry.id, {}};
  for (const Multivector& vec : candidates) {
    Evaluator<Rational> ev(a, vec);
    InverseResult r = evaluate_inverse(ev, entry);
    if (std::holds_alternative<Inversion>(r)) return r;
    failure.attempted_vectors.push_back(vec);
  }
  return failure;
}

FormulaEntry triplet_formula(TripletTerm a, TripletTerm b, TripletTerm c,
                             const FormulaCatalog& catalog) {
  return catalog.make_triplet(a, b, c);
}

std::vector<FormulaInfo> list_formulas(int n, const FormulaCatalog& catalog) {
  if (n < 0 || n > kMaxDimension) throw std::invalid_argument("dimension out of range");
  std::vector<FormulaInfo> out;
  for (const FormulaEntry* e : catalog.entries(n, FormulaKind::general)) {
    out.push_back({e->id, e->provenance, e->status});
  }
  return out;
}

}  // namespace clifinv
