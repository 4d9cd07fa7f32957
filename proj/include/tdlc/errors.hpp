#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tdlc {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input: bad rational syntax, non-prime p,
// dimension mismatches, inadmissible cylinders.  CLI exit code 1.
struct input_error : error {
  explicit input_error(const std::string& what) : error(what) {}
};

// A matrix that must be invertible is not (equivalently: a_0 = 0 for a
// characteristic polynomial, so the map is not an automorphism).
struct singular_matrix_error : input_error {
  explicit singular_matrix_error(const std::string& what) : input_error(what) {}
};

// An index was requested for subgroups that are not nested.
struct containment_error : input_error {
  explicit containment_error(const std::string& what) : input_error(what) {}
};

// Cylinder index with infinitely many unequal coordinates: the subgroups are
// not commensurable.
struct infinite_index_error : input_error {
  explicit infinite_index_error(const std::string& what) : input_error(what) {}
};

// The brute-force coset enumeration refused to run because the quotient is
// too large for explicit enumeration.
struct enumeration_limit_error : error {
  explicit enumeration_limit_error(const std::string& what) : error(what) {}
};

// An iteration that is guaranteed to terminate did not do so within the
// configured cap.  Carries the partial data seen so far; treated as a bug
// signal, never silently swallowed.  CLI exit code 2.
struct iteration_limit_error : error {
  std::vector<long long> partial;
  iteration_limit_error(const std::string& what, std::vector<long long> seen)
      : error(what), partial(std::move(seen)) {}
};

// Two independent engines disagreed, or a verified identity failed on a
// concrete witness.  CLI exit code 2.
struct verification_error : error {
  explicit verification_error(const std::string& what) : error(what) {}
};

}  // namespace tdlc
