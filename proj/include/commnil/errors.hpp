#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace commnil {

/// Base of every error raised by the library. The CLI maps these onto
/// exit codes; the Python module maps them onto `commnil.GroupError`.
class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public GroupError {
public:
  DegreeMismatch(std::size_t lhs, std::size_t rhs)
      : GroupError("degree mismatch: " + std::to_string(lhs) + " vs " +
                   std::to_string(rhs)) {}
};

class OrderCapExceeded : public GroupError {
public:
  OrderCapExceeded(std::uint64_t order, std::uint64_t cap)
      : GroupError("group order " + std::to_string(order) +
                   " exceeds enumeration cap " + std::to_string(cap)),
        order_(order), cap_(cap) {}

  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

class NotNormal : public GroupError {
public:
  NotNormal() : GroupError("subgroup is not normal") {}
  explicit NotNormal(const std::string &what) : GroupError(what) {}
};

class NotPrimeDivisor : public GroupError {
public:
  NotPrimeDivisor(std::uint64_t p, std::uint64_t order)
      : GroupError(std::to_string(p) + " is not a prime divisor of " +
                   std::to_string(order)) {}
};

class NotSoluble : public GroupError {
public:
  NotSoluble() : GroupError("group is not soluble") {}
};

class NotMetanilpotent : public GroupError {
public:
  NotMetanilpotent() : GroupError("group is not metanilpotent") {}
};

class SearchExhausted : public GroupError {
public:
  explicit SearchExhausted(const std::string &what) : GroupError(what) {}
};

/// Raised when intersecting a Sylow basis with a normal subgroup does not
/// give a basis. This cannot happen for valid input and signals a bug.
class PermutabilityViolated : public GroupError {
public:
  explicit PermutabilityViolated(const std::string &what) : GroupError(what) {}
};

class NotCommutatorClosed : public GroupError {
public:
  NotCommutatorClosed() : GroupError("set is not commutator-closed") {}
};

class NotGenerating : public GroupError {
public:
  NotGenerating() : GroupError("set does not generate the group") {}
};

class NotPElementSet : public GroupError {
public:
  explicit NotPElementSet(const std::string &what) : GroupError(what) {}
};

class HypothesisNotSatisfied : public GroupError {
public:
  explicit HypothesisNotSatisfied(const std::string &what) : GroupError(what) {}
};

class InvalidPermutation : public GroupError {
public:
  explicit InvalidPermutation(const std::string &what) : GroupError(what) {}
};

class ParseError : public GroupError {
public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : GroupError("parse error at " + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class OrderMismatch : public GroupError {
public:
  OrderMismatch(std::uint64_t expected, std::uint64_t actual)
      : GroupError("expected order " + std::to_string(expected) +
                   " but generators give " + std::to_string(actual)) {}
};

} // namespace commnil
