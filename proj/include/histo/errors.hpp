#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace histo {

// Argument outside the admissible set (non-positive Beta argument, alpha <= -1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Density whose low-order moments cannot support the requested construction.
class DegenerateDensityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hankel matrix of the moments lost positivity at a given order.
class IllConditionedMomentsError : public std::runtime_error {
 public:
  IllConditionedMomentsError(const std::string& what, int order)
      : std::runtime_error(what), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

// Degree-of-freedom matrix is numerically singular.
class UnisolvencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad functional descriptor (moment order out of range, missing interior dofs).
class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OutOfDomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace histo
