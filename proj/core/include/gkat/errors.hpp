#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element was used with an algebra that does not own it.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// The requested checking strategy cannot be applied (e.g. exhaustive
/// enumeration of a sampled carrier).
class UnsupportedStrategyError : public Error {
 public:
  using Error::Error;
};

/// Star iteration failed to stabilise; the input tables are not monotone.
class NonMonotoneAlgebraError : public Error {
 public:
  using Error::Error;
};

/// A construction or instance parameter is out of range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A carrier or valuation space exceeds the configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

class SortError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

/// A side-condition report does not belong to the algebra being checked,
/// or was not produced by the required suites.
class StaleReportError : public Error {
 public:
  using Error::Error;
};

/// A required side condition does not hold in the given algebra.
class SideConditionError : public Error {
 public:
  using Error::Error;
};

/// Textual input could not be parsed. `line` and `column` are 1-based; a
/// term parse sets line to 1 and column to the byte offset plus one.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at " + std::to_string(line) + ":" +
              std::to_string(column)),
        reason_(message),
        line_(line),
        column_(column) {}

  /// The message without the position suffix.
  const std::string& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

/// A table entry breaks closure (an operation leaves the carrier or the
/// test subset).
class ClosureError : public Error {
 public:
  ClosureError(const std::string& table, const std::string& row,
               const std::string& column, const std::string& message)
      : Error("table " + table + " [" + row + "," + column + "]: " + message),
        table_(table),
        row_(row),
        column_(column) {}

  const std::string& table() const noexcept { return table_; }
  const std::string& row() const noexcept { return row_; }
  const std::string& column() const noexcept { return column_; }

 private:
  std::string table_;
  std::string row_;
  std::string column_;
};

}  // namespace gkat
