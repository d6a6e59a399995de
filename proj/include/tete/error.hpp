#pragma once

#include <stdexcept>
#include <string>

namespace tete {

/// Bad argument values, malformed input data, or parameter combinations
/// that violate a documented precondition.
class ValidationError : public std::domain_error {
 public:
  explicit ValidationError(const std::string& msg) : std::domain_error(msg) {}
};

/// Malformed file content. Carries the 1-based line number of the offender.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& msg)
      : ValidationError(path + ":" + std::to_string(line) + ": " + msg),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Filesystem trouble: missing files, unreadable or unwritable streams.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The optimizer hit a non-finite objective value.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& msg, std::size_t iteration)
      : std::runtime_error(msg), iteration_(iteration) {}

  std::size_t iteration() const { return iteration_; }

 private:
  std::size_t iteration_;
};

}  // namespace tete
