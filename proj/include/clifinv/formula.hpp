#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clifinv/multivector.hpp"

namespace clifinv {

// Evaluation tree over a bound input multivector A.
//
// Text syntax (also the catalog syntax):
//   A                 the input
//   rev(A)            reversed input
//   v                 auxiliary vector (even-subalgebra formulas only)
//   neg{1,4}(x)       grade negation of x
//   prod(x, y, ...)   left-to-right geometric product; prod() is the unit
//   sum(1/3*x, ...)   rational-weighted sum
enum class ExprKind { input, reversed_input, vector_input, negate, product, weighted_sum };

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  ExprKind kind() const { return kind_; }
  GradeSet negated() const { return negated_; }
  const std::vector<ExprPtr>& children() const { return children_; }
  const std::vector<Rational>& weights() const { return weights_; }

  // Canonical text; structurally equal trees have equal text.
  const std::string& text() const { return text_; }

  // Number of A / rev(A) leaves, i.e. the polynomial degree in A's
  // coefficients for a single-term product.
  int input_count() const { return input_count_; }
  bool uses_vector() const { return uses_vector_; }

  static ExprPtr input();
  static ExprPtr reversed_input();
  static ExprPtr vector_input();
  static ExprPtr negate(GradeSet grades, ExprPtr child);
  static ExprPtr product(std::vector<ExprPtr> factors);
  static ExprPtr weighted_sum(std::vector<std::pair<Rational, ExprPtr>> terms);

 private:
  Expr() = default;

  ExprKind kind_ = ExprKind::input;
  GradeSet negated_;
  std::vector<ExprPtr> children_;
  std::vector<Rational> weights_;
  std::string text_;
  int input_count_ = 0;
  bool uses_vector_ = false;
};

using ExprBindings = std::map<std::string, ExprPtr, std::less<>>;

// Parses the text syntax. Identifiers in `names` expand to their bound trees,
// which lets catalog files abbreviate repeated sub-products. Throws
// ParseError(syntax) with the offending offset.
ExprPtr parse_expr(std::string_view text, const ExprBindings& names = {});

// Flattens nested products and drops empty negations; used for structural
// comparison.
ExprPtr flatten(const ExprPtr& e);

// Removes the left-most input factor of every product term: for
// det = A f(A) this returns f(A). Returns nullptr when some term does not
// start with a bare A.
ExprPtr strip_leading_input(const ExprPtr& e);

// Right-handed form of a left self-product: every product is reversed in
// order, A stays A. For det = A f(A) this yields f'(A) A.
ExprPtr mirror(const ExprPtr& e);

// Replaces A by rev(A) and vice versa.
ExprPtr swap_input_reversal(const ExprPtr& e);

// Bottom-up evaluation with memoization on structurally equal subtrees. One
// evaluator binds one input; reuse it to evaluate several formulas on the
// same multivector and share their common sub-products.
template <class T>
class Evaluator {
 public:
  explicit Evaluator(BasicMultivector<T> a) : a_(std::move(a)) {}
  Evaluator(BasicMultivector<T> a, BasicMultivector<T> v) : a_(std::move(a)), v_(std::move(v)) {
    a_.require_same(*v_);
  }

  const BasicMultivector<T>& input() const { return a_; }

  const BasicMultivector<T>& operator()(const Expr& e) {
    if (auto it = memo_.find(e.text()); it != memo_.end()) return it->second;
    BasicMultivector<T> value = compute(e);
    return memo_.emplace(e.text(), std::move(value)).first->second;
  }

  std::size_t cached() const { return memo_.size(); }

 private:
  BasicMultivector<T> compute(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::input:
        return a_;
      case ExprKind::reversed_input:
        return reverse(a_);
      case ExprKind::vector_input:
        if (!v_) throw std::invalid_argument("formula needs an auxiliary vector v");
        return *v_;
      case ExprKind::negate:
        return grade_negate((*this)(*e.children().front()), e.negated());
      case ExprKind::product: {
        BasicMultivector<T> acc = BasicMultivector<T>::scalar(a_.signature(), T(1));
        bool first = true;
        for (const ExprPtr& f : e.children()) {
          const BasicMultivector<T>& rhs = (*this)(*f);
          acc = first ? rhs : gp(acc, rhs);
          first = false;
        }
        return acc;
      }
      case ExprKind::weighted_sum: {
        BasicMultivector<T> acc(a_.signature());
        for (std::size_t k = 0; k < e.children().size(); ++k) {
          acc += (*this)(*e.children()[k]) * convert(e.weights()[k]);
        }
        return acc;
      }
    }
    throw std::logic_error("unhandled expression kind");
  }

  static T convert(const Rational& w) {
    if constexpr (std::is_same_v<T, Rational>) {
      return w;
    } else {
      return static_cast<T>(w.get_d());
    }
  }

  BasicMultivector<T> a_;
  std::optional<BasicMultivector<T>> v_;
  std::unordered_map<std::string, BasicMultivector<T>> memo_;
};

inline Multivector eval(const Expr& e, const Multivector& a) {
  Evaluator<Rational> ev(a);
  return ev(e);
}

}  // namespace clifinv
