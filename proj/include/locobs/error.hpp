#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace locobs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (e.g. determinant of a 2x3 matrix).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A ValidationError attributable to one named input field.
class FieldError : public ValidationError {
 public:
  FieldError(std::string field, const std::string& detail)
      : ValidationError("field '" + field + "': " + detail),
        field_(std::move(field)),
        detail_(detail) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string field_;
  std::string detail_;
};

/// A Gram matrix is singular over the rationals.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A plumbing graph whose intersection matrix is not negative definite.
class NotResolutionGraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed singularity or report document. Carries the offending line and
/// field path when they are known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::optional<std::size_t> line,
             std::string field)
      : Error(format(message, line, field)), line_(line), field_(std::move(field)) {}

  std::optional<std::size_t> line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& message,
                            std::optional<std::size_t> line,
                            const std::string& field) {
    std::string out;
    if (line) out += "line " + std::to_string(*line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + message;
  }

  std::optional<std::size_t> line_;
  std::string field_;
};

}  // namespace locobs
