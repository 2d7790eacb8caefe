#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clifinv/catalog.hpp"
#include "clifinv/multivector.hpp"

namespace clifinv {

struct Inversion {
  Multivector inverse;
  Multivector adjugate;
  Rational det;
  std::string formula_id;
};

struct NonInvertible {
  Rational det;
  std::string formula_id;
  // Auxiliary vectors tried by even_inverse; empty for general formulas.
  std::vector<Multivector> attempted_vectors;
};

using InverseResult = std::variant<Inversion, NonInvertible>;

// Number of multivector factors in the default determinant norm of
// dimension n; also its polynomial degree in the coefficients of A.
int factor_count(int n);

// Resolves an id, or the default for `dim` when id is empty. Throws
// UnknownFormula, or std::invalid_argument when the entry's dimension is
// below `dim`.
const FormulaEntry& resolve_formula(int dim, std::string_view id = {},
                                    const FormulaCatalog& catalog = FormulaCatalog::builtin());

// Scalar value of the det expression. A formula of higher dimension than A
// is allowed and yields a power of A's own norm. Throws CatalogDefect when
// the expression leaves a non-scalar residue.
Rational det_norm(const Multivector& a, const FormulaEntry& entry);
Rational det_norm(const Multivector& a, std::string_view id = {},
                  const FormulaCatalog& catalog = FormulaCatalog::builtin());

InverseResult inverse(const Multivector& a, const FormulaEntry& entry);
InverseResult inverse(const Multivector& a, std::string_view id = {},
                      const FormulaCatalog& catalog = FormulaCatalog::builtin());

// Inverse of an even multivector. With no v given, tries e1..en in order.
// Throws OddGradePresent, or std::invalid_argument for a v that is not a
// non-null vector.
InverseResult even_inverse(const Multivector& a, const std::optional<Multivector>& v = std::nullopt,
                           const FormulaCatalog& catalog = FormulaCatalog::builtin());

FormulaEntry triplet_formula(TripletTerm a, TripletTerm b, TripletTerm c,
                             const FormulaCatalog& catalog = FormulaCatalog::builtin());

struct FormulaInfo {
  std::string id;
  std::string provenance;
  FormulaStatus status;
};

// General-kind formulas of dimension n, ordered by id.
std::vector<FormulaInfo> list_formulas(int n,
                                       const FormulaCatalog& catalog = FormulaCatalog::builtin());

}  // namespace clifinv
