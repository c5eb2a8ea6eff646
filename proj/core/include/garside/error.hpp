#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace garside {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed germ file.  Line and column are 1-based.
class GermParseError : public Error {
 public:
  GermParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An argument lies outside the domain of an operation (unknown name, factor
/// outside a submonoid, enumeration guard exceeded, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested atom set is not a union of Delta-classes.
class NotAUnionOfClasses : public Error {
 public:
  using Error::Error;
};

/// A Zappa-Szep invariant failed while building or using a structure.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// A word produced by one of the normal-form translation loops was not in
/// normal form.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace garside
