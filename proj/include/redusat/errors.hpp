#pragma once

#include <stdexcept>
#include <string>

namespace redusat {

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  int line;
};

struct InvalidAssignmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instance too large for an exhaustive method (oracle cap, enumeration bounds).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// DPLL node budget exhausted; distinct from an UNSAT answer.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A caller violated a documented precondition (e.g. shrink on an input the
// predicate rejects, or probing a variable absent from the formula).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace redusat
