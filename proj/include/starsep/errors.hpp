#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starsep/vertex_set.hpp"

namespace starsep {

/// Malformed input: bad vertex ids, unnormalized weights, unparsable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds a desk-scale cap (vertex capacity, exact-treewidth cap).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-visible precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A structural statement that holds on the graph class failed on this input.
 * Carries the vertices that witness the failure so it can be re-checked.
 */
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(const std::string& what, std::vector<Vertex> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

/// Indicates a bug: a relation that is a theorem for every input failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace starsep
