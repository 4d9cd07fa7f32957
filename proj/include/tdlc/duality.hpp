#pragma once

#include "tdlc/lattice.hpp"

namespace tdlc {

// Q_p^n is identified with its character group through the pairing
// (x, y) -> chi(sum x_i y_i), chi a fixed character of Q_p with kernel Z_p.
// Under that identification the dual of x -> Mx is y -> M^T y, and the
// annihilator of a lattice is its transpose-inverse lattice (dual_lattice in
// lattice.hpp).  check_bridge verifies the resulting exact identities.
struct BridgeReport {
  PExp local_lhs;        // s(M, L) exponent
  PExp local_rhs;        // s(M^T, annihilator of L) exponent
  PExp global_lhs;       // scale exponent of M
  PExp global_rhs;       // scale exponent of M^T
  bool involution_ok;    // annihilator of annihilator == L
  bool ok;

  // tidy witnesses on both sides reach the same exponent
  PExp witness_lhs;
  PExp witness_rhs;
};

// Throws verification_error when any identity fails; the report carries both
// sides for printing.
BridgeReport check_bridge(const QMat& m, const Lattice& l,
                          unsigned cap = kDefaultIterationCap);

}  // namespace tdlc
