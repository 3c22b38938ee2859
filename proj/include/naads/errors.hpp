#pragma once

#include <stdexcept>
#include <string>

namespace naads {

/// A point lies outside the space a map acts on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid map or family data, raised when the object is built.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A horizon, point, or bit budget was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown corpus name or task.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A checker was called on input its contract rejects
/// (e.g. a non-commutative family where commutativity is required).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scenario file, unknown task or parameter, or a bad parameter value.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace naads
