#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recten {

/// Coarse error categories. They map one-to-one onto CLI exit codes.
enum class ErrorCategory {
  validation,  // bad indices, shapes, subsets, files, sign constraints
  numeric,     // non-finite intermediates
  capacity,    // request too large to enumerate
};

std::string_view to_string(ErrorCategory c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string_view kind, const std::string& what)
      : std::runtime_error(what), category_(category), kind_(kind) {}

  ErrorCategory category() const noexcept { return category_; }
  /// Short machine-readable tag such as "range" or "subset".
  std::string_view kind() const noexcept { return kind_; }

 private:
  ErrorCategory category_;
  std::string_view kind_;
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCategory::validation, "range", what) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& what) : Error(ErrorCategory::validation, "shape", what) {}
};

class SubsetError : public Error {
 public:
  explicit SubsetError(const std::string& what) : Error(ErrorCategory::validation, "subset", what) {}
};

class NonnegativityError : public Error {
 public:
  explicit NonnegativityError(const std::string& what)
      : Error(ErrorCategory::validation, "nonnegativity", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCategory::validation, "domain", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCategory::validation, "parse", what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCategory::validation, "validation", what) {}
};

class NumericError : public Error {
 public:
  NumericError(const std::string& what, long iteration)
      : Error(ErrorCategory::numeric, "numeric", what), iteration_(iteration) {}
  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorCategory::capacity, "capacity", what) {}
};

}  // namespace recten
