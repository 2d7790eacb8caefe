#include "clifinv/formula.hpp"

#include <algorithm>
#include <cctype>

#include "clifinv/errors.hpp"

namespace clifinv {

ExprPtr Expr::input() {
  static const ExprPtr node = [] {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::input;
    e->text_ = "A";
    e->input_count_ = 1;
    return e;
  }();
  return node;
}

ExprPtr Expr::reversed_input() {
  static const ExprPtr node = [] {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::reversed_input;
    e->text_ = "rev(A)";
    e->input_count_ = 1;
    return e;
  }();
  return node;
}

ExprPtr Expr::vector_input() {
  static const ExprPtr node = [] {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = ExprKind::vector_input;
    e->text_ = "v";
    e->uses_vector_ = true;
    return e;
  }();
  return node;
}

ExprPtr Expr::negate(GradeSet grades, ExprPtr child) {
  if (!child) throw std::invalid_argument("negate of null expression");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::negate;
  e->negated_ = grades;
  std::string g = grades.to_string();
  e->text_ = "neg" + g + "(" + child->text() + ")";
  e->input_count_ = child->input_count();
  e->uses_vector_ = child->uses_vector();
  e->children_.push_back(std::move(child));
  return e;
}

ExprPtr Expr::product(std::vector<ExprPtr> factors) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::product;
  e->text_ = "prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i]) throw std::invalid_argument("product of null expression");
    if (i) e->text_ += ", ";
    e->text_ += factors[i]->text();
    e->input_count_ += factors[i]->input_count();
    e->uses_vector_ = e->uses_vector_ || factors[i]->uses_vector();
  }
  e->text_ += ")";
  e->children_ = std::move(factors);
  return e;
}

ExprPtr Expr::weighted_sum(std::vector<std::pair<Rational, ExprPtr>> terms) {
  if (terms.empty()) throw std::invalid_argument("weighted sum needs at least one term");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::weighted_sum;
  e->text_ = "sum(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto& [w, child] = terms[i];
    if (!child) throw std::invalid_argument("weighted sum of null expression");
    if (i) e->text_ += ", ";
    e->text_ += to_string(w) + "*" + child->text();
    e->input_count_ = std::max(e->input_count_, child->input_count());
    e->uses_vector_ = e->uses_vector_ || child->uses_vector();
    e->weights_.push_back(w);
    e->children_.push_back(std::move(child));
  }
  e->text_ += ")";
  return e;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const ExprBindings& names) : text_(text), names_(names) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseErrorKind::syntax, pos_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr parse_expr() {
    skip_ws();
    const std::size_t start = pos_;
    std::string word = identifier();
    if (word.empty()) fail("expected an expression");
    if (word == "A") return Expr::input();
    if (word == "v") return Expr::vector_input();
    if (word == "rev") {
      expect('(');
      std::string inner = identifier();
      if (inner != "A") fail("rev() applies to the input A only");
      expect(')');
      return Expr::reversed_input();
    }
    if (word == "neg") {
      expect('{');
      GradeSet grades;
      if (!peek('}')) {
        do {
          skip_ws();
          std::size_t digits_start = pos_;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
          if (pos_ == digits_start) fail("expected a grade");
          int g = std::stoi(std::string(text_.substr(digits_start, pos_ - digits_start)));
          if (g > kMaxDimension) {
            pos_ = digits_start;
            fail("grade out of range");
          }
          grades = grades.with(g);
        } while (consume(','));
      }
      expect('}');
      expect('(');
      ExprPtr child = parse_expr();
      expect(')');
      return Expr::negate(grades, std::move(child));
    }
    if (word == "prod") {
      expect('(');
      std::vector<ExprPtr> factors;
      if (!peek(')')) {
        do {
          factors.push_back(parse_expr());
        } while (consume(','));
      }
      expect(')');
      return Expr::product(std::move(factors));
    }
    if (word == "sum") {
      expect('(');
      std::vector<std::pair<Rational, ExprPtr>> terms;
      do {
        terms.push_back(parse_term());
      } while (consume(','));
      expect(')');
      return Expr::weighted_sum(std::move(terms));
    }
    if (auto it = names_.find(word); it != names_.end()) return it->second;
    pos_ = start;
    fail("unknown name '" + word + "'");
  }

  std::pair<Rational, ExprPtr> parse_term() {
    skip_ws();
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      std::size_t start = pos_;
      if (text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) {
        ++pos_;
      }
      Rational w;
      try {
        w = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed weight");
      }
      expect('*');
      return {w, parse_expr()};
    }
    return {Rational(1), parse_expr()};
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string_view text_;
  const ExprBindings& names_;
  std::size_t pos_ = 0;
};

void append_flattened(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (e->kind() == ExprKind::product) {
    for (const ExprPtr& c : e->children()) append_flattened(flatten(c), out);
  } else {
    out.push_back(e);
  }
}

}  // namespace

ExprPtr parse_expr(std::string_view text, const ExprBindings& names) {
  return ExprParser(text, names).parse_all();
}

ExprPtr flatten(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::input:
    case ExprKind::reversed_input:
    case ExprKind::vector_input:
      return e;
    case ExprKind::negate: {
      ExprPtr child = flatten(e->children().front());
      if (e->negated().empty()) return child;
      return Expr::negate(e->negated(), std::move(child));
    }
    case ExprKind::product: {
      std::vector<ExprPtr> factors;
      for (const ExprPtr& c : e->children()) append_flattened(flatten(c), factors);
      if (factors.size() == 1) return factors.front();
      return Expr::product(std::move(factors));
    }
    case ExprKind::weighted_sum: {
      std::vector<std::pair<Rational, ExprPtr>> terms;
      for (std::size_t i = 0; i < e->children().size(); ++i) {
        terms.emplace_back(e->weights()[i], flatten(e->children()[i]));
      }
      return Expr::weighted_sum(std::move(terms));
    }
  }
  return e;
}

ExprPtr strip_leading_input(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::input:
      return Expr::product({});
    case ExprKind::product: {
      if (e->children().empty()) return nullptr;
      ExprPtr head = strip_leading_input(e->children().front());
      if (!head) return nullptr;
      std::vector<ExprPtr> factors{head};
      factors.insert(factors.end(), e->children().begin() + 1, e->children().end());
      return Expr::product(std::move(factors));
    }
    case ExprKind::weighted_sum: {
      std::vector<std::pair<Rational, ExprPtr>> terms;
      for (std::size_t i = 0; i < e->children().size(); ++i) {
        ExprPtr t = strip_leading_input(e->children()[i]);
        if (!t) return nullptr;
        terms.emplace_back(e->weights()[i], std::move(t));
      }
      return Expr::weighted_sum(std::move(terms));
    }
    default:
      return nullptr;
  }
}

ExprPtr mirror(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::input:
    case ExprKind::reversed_input:
    case ExprKind::vector_input:
      return e;
    case ExprKind::negate:
      return Expr::negate(e->negated(), mirror(e->children().front()));
    case ExprKind::product: {
      std::vector<ExprPtr> factors;
      for (auto it = e->children().rbegin(); it != e->children().rend(); ++it) {
        factors.push_back(mirror(*it));
      }
      return Expr::product(std::move(factors));
    }
    case ExprKind::weighted_sum: {
      std::vector<std::pair<Rational, ExprPtr>> terms;
      for (std::size_t i = 0; i < e->children().size(); ++i) {
        terms.emplace_back(e->weights()[i], mirror(e->children()[i]));
      }
      return Expr::weighted_sum(std::move(terms));
    }
  }
  return e;
}

ExprPtr swap_input_reversal(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::input:
      return Expr::reversed_input();
    case ExprKind::reversed_input:
      return Expr::input();
    case ExprKind::vector_input:
      return e;
    case ExprKind::negate:
      return Expr::negate(e->negated(), swap_input_reversal(e->children().front()));
    case ExprKind::product: {
      std::vector<ExprPtr> factors;
      for (const ExprPtr& c : e->children()) factors.push_back(swap_input_reversal(c));
      return Expr::product(std::move(factors));
    }
    case ExprKind::weighted_sum: {
      std::vector<std::pair<Rational, ExprPtr>> terms;
      for (std::size_t i = 0; i < e->children().size(); ++i) {
        terms.emplace_back(e->weights()[i], swap_input_reversal(e->children()[i]));
      }
      return Expr::weighted_sum(std::move(terms));
    }
  }
  return e;
}

}  // namespace clifinv
