#include "clifinv/mvparse.hpp"

#include <cctype>
#include <vector>

#include "json.hpp"

#include "clifinv/errors.hpp"

namespace clifinv {
namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class MvParser {
 public:
  MvParser(const Signature& sig, std::string_view text) : sig_(sig), text_(text), out_(sig) {}

  Multivector parse() {
    skip_ws();
    if (at_end()) fail(ParseErrorKind::syntax, "empty multivector");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail(ParseErrorKind::syntax, "expected '+' or '-'");
      }
      term(sign);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(ParseErrorKind kind, const std::string& what) const {
    throw ParseError(kind, pos_, what);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void term(int sign) {
    skip_ws();
    const std::size_t start = pos_;
    Rational coeff(sign);
    bool has_coeff = false;
    if (!at_end() && (is_digit(text_[pos_]) || text_[pos_] == '.')) {
      coeff *= number();
      has_coeff = true;
    }
    skip_ws();
    if (has_coeff && !at_end() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || text_[pos_] != 'e') fail(ParseErrorKind::syntax, "expected a blade after '*'");
    }
    SignedBlade blade;
    bool has_blade = false;
    if (!at_end() && text_[pos_] == 'e') {
      blade = parse_blade();
      has_blade = true;
    }
    if (!has_coeff && !has_blade) {
      pos_ = start;
      fail(ParseErrorKind::syntax, "expected a coefficient or a blade");
    }
    const std::size_t index = CanonicalOrder::of(sig_.dim()).index_of(blade.blade);
    out_[index] += blade.sign > 0 ? coeff : Rational(-coeff);
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (!at_end() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      while (!at_end() && is_digit(text_[pos_])) ++pos_;
      if (pos_ == den_start) fail(ParseErrorKind::syntax, "expected a denominator");
    } else if (!at_end() && text_[pos_] == '.') {
      ++pos_;
      while (!at_end() && is_digit(text_[pos_])) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      pos_ = start;
      fail(ParseErrorKind::syntax, e.what());
    }
  }

  SignedBlade parse_blade() {
    const std::size_t start = pos_;
    ++pos_;  // 'e'
    std::vector<int> indices;
    Blade seen;
    while (!at_end() && is_digit(text_[pos_])) {
      const int i = text_[pos_] - '0';
      if (i < 1 || i > sig_.dim()) {
        fail(ParseErrorKind::unknown_index,
             "basis index " + std::to_string(i) + " outside " + sig_.to_string());
      }
      if (seen.contains(i)) {
        fail(ParseErrorKind::duplicate_index, "repeated basis index " + std::to_string(i));
      }
      seen.bits |= 1u << (i - 1);
      indices.push_back(i);
      ++pos_;
    }
    if (indices.empty()) {
      pos_ = start;
      fail(ParseErrorKind::syntax, "blade needs at least one index");
    }
    return blade_from_sequence(indices);
  }

  Signature sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
  Multivector out_;
};

}  // namespace

Multivector parse_multivector(const Signature& sig, std::string_view text) {
  return MvParser(sig, text).parse();
}

std::string format_multivector(const Multivector& a, MvFormat style) {
  if (style == MvFormat::json) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : a.coeffs()) coeffs.push_back(to_string(c));
    nlohmann::json doc = {{"signature", {a.signature().p(), a.signature().q()}},
                          {"coeffs", std::move(coeffs)}};
    return doc.dump();
  }
  const CanonicalOrder& order = CanonicalOrder::of(a.dim());
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& c = a[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    const Blade b = order.blade_at(i);
    if (b.bits == 0) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += b.name();
    } else {
      out += to_string(magnitude) + " " + b.name();
    }
  }
  return out.empty() ? "0" : out;
}

Multivector parse_multivector_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseErrorKind::syntax, e.byte, "malformed JSON");
  }
  try {
    const auto& sig_json = doc.at("signature");
    if (!sig_json.is_array() || sig_json.size() != 2) {
      throw ParseError(ParseErrorKind::syntax, 0, "signature must be [p, q]");
    }
    Signature sig(sig_json[0].get<int>(), sig_json[1].get<int>());
    const auto& coeffs = doc.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != sig.blade_count()) {
      throw ParseError(ParseErrorKind::syntax, 0,
                       "expected " + std::to_string(sig.blade_count()) + " coefficients");
    }
    std::vector<Rational> values;
    for (const auto& c : coeffs) values.push_back(parse_rational(c.get<std::string>()));
    return Multivector(sig, std::move(values));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(ParseErrorKind::syntax, 0, e.what());
  }
}

}  // namespace clifinv
