#pragma once

#include <stdexcept>
#include <string>

namespace wfid {

// Bad arguments or configuration; the CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sampled point hit a pole or coincidence. Trial drivers resample on this.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public DegenerateError {
 public:
  using DegenerateError::DegenerateError;
};

// Simple-pole precondition of the residue engine failed.
class PoleOrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExhaustionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DepthOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computations that must agree did not (e.g. x- and y-side residue sums).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wfid
