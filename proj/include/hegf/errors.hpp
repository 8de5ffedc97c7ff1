#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hegf {

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A result whose magnitude leaves the double exponent range. exponent() is the
// natural logarithm of the magnitude that could not be represented.
class overflow_error : public std::overflow_error {
 public:
  overflow_error(const std::string& what, double exponent)
      : std::overflow_error(what), exponent_(exponent) {}

  double exponent() const noexcept { return exponent_; }

 private:
  double exponent_;
};

// Overflow of a quadrature integrand at a specific node.
class node_overflow_error : public overflow_error {
 public:
  node_overflow_error(const std::string& what, double exponent, std::size_t node)
      : overflow_error(what, exponent), node_(node) {}

  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

// Request beyond a documented size bound (exact integer width, oracle size).
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Preconditions on how an operation is called (mismatched inputs etc.).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hegf
