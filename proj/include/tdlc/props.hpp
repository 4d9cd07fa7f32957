#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdlc/json_io.hpp"

namespace tdlc {

// Randomized verification suites.  Every suite is seeded and deterministic;
// the seed goes into the returned detail so a failing run can be replayed.
struct SuiteResult {
  std::string name;
  unsigned trials = 0;
  unsigned failures = 0;
  json detail = json::object();
  bool ok() const { return failures == 0; }
};

// Newton polygon, tidying iteration and entropy increments must agree for
// every sampled automorphism; the same loop certifies that the scale and
// entropy exponents coincide on Q_p^n.
SuiteResult engine_agreement_suite(std::uint64_t seed, unsigned trials,
                                   const std::vector<long>& primes,
                                   const std::vector<std::size_t>& dims,
                                   unsigned window = kDefaultEntropyWindow,
                                   unsigned cap = kDefaultIterationCap);

// s(M, L) >= scale exponent for sampled lattices; also reports whether a
// strict witness appeared.
SuiteResult inequality_suite(std::uint64_t seed, unsigned matrices,
                             unsigned lattices_per_matrix,
                             const std::vector<long>& primes,
                             const std::vector<std::size_t>& dims);

// Power law, conjugation invariance, block-diagonal and block-triangular
// additivity, as exact exponent identities.
SuiteResult laws_suite(std::uint64_t seed, unsigned trials,
                       const std::vector<long>& primes,
                       const std::vector<std::size_t>& dims,
                       unsigned max_power = 4);

// Duality: local and global identities under transpose/annihilator,
// involution, and index preservation for nested pairs.
SuiteResult bridge_suite(std::uint64_t seed, unsigned trials,
                         const std::vector<long>& primes,
                         const std::vector<std::size_t>& dims);

// Determinant-valuation index against explicit coset enumeration.
SuiteResult index_oracle_suite(std::uint64_t seed, unsigned trials,
                               const std::vector<long>& primes,
                               unsigned max_quotient_exp = 3);

// Shift-side invariants over random admissible cylinders in all three
// modes: s >= H >= scale, tidy implies minimizing, tidy-below members
// contain the nub, the nub is shift-stable, and log s = h_top exactly when
// the nub is trivial.
SuiteResult cylinder_property_suite(std::uint64_t seed, unsigned trials,
                                    const std::vector<long>& primes);

// Everything above with shared parameters; used by the props CLI command.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, unsigned trials,
                                        const std::vector<long>& primes,
                                        const std::vector<std::size_t>& dims);

}  // namespace tdlc
