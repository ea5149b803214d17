#pragma once

#include <stdexcept>
#include <string>

namespace cmg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable files, unknown vertices, bad indices.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The graph is outside the class 2*height = #V with no isolated vertex.
class ClassError : public InputError {
 public:
  using InputError::InputError;
};

/// A B-graft specification violates its block invariants.
class SpecError : public InputError {
 public:
  using InputError::InputError;
};

/// A required combinatorial structure (matched cover, block matching) is missing.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input outside its stated domain, e.g. the
/// invariants of a graph that is not Cohen-Macaulay.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact enumeration would exceed a configured bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two independently computed routes that must agree did not. Always a bug.
class EquivalenceViolation : public Error {
 public:
  EquivalenceViolation(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace cmg
