#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clifinv {

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A catalog expression produced a non-scalar "determinant". This means the
// formula encoding is wrong, not that the caller passed bad input.
class CatalogDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownFormula : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class OddGradePresent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind { syntax, unknown_index, duplicate_index };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t offset_;
};

}  // namespace clifinv
