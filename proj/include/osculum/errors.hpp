#pragma once

#include <stdexcept>
#include <string>

namespace osculum {

// Operand shapes disagree (variable counts, vector lengths, matrix sizes).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a mathematical precondition (zero form, dependent points, ...).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Random sampling failed to produce a general enough configuration.
class DegenerateSampling : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace osculum
