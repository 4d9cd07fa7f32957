#pragma once

#include <cstddef>
#include <vector>

#include "tdlc/matrix.hpp"
#include "tdlc/pexp.hpp"
#include "tdlc/poly.hpp"

namespace tdlc {

inline constexpr unsigned kDefaultIterationCap = 64;
inline constexpr unsigned kDefaultEntropyWindow = 3;

// Full-rank lattice over the p-local integers inside Q^n, i.e. the exact
// model of a compact open subgroup of Q_p^n.  Columns of the basis generate
// the lattice.  Every lattice is stored in a canonical column echelon form:
// lower triangular, pivot (r, r) equal to a power of p, entries left of a
// pivot reduced to the canonical representative modulo pivot * Z_(p).  Two
// lattices are equal iff their canonical bases are identical entrywise.
class Lattice {
 public:
  // Z_p^n with the identity basis.
  static Lattice standard(long p, std::size_t n);
  // Canonicalizes the column span of gens (n x m, m >= n, rank n over Q);
  // throws singular_matrix_error when the columns do not span.
  static Lattice from_generators(long p, const QMat& gens);

  long p() const { return p_; }
  std::size_t dim() const { return n_; }
  const QMat& basis() const { return basis_; }
  // vp(det(basis)); equals the sum of the pivot exponents.
  long long det_valuation() const { return det_vp_; }

  // True iff sub is contained in *this (entrywise p-integrality of
  // basis^{-1} * sub.basis).
  bool contains(const Lattice& sub) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(long p, std::size_t n, QMat basis, long long det_vp)
      : p_(p), n_(n), basis_(std::move(basis)), det_vp_(det_vp) {}

  long p_;
  std::size_t n_;
  QMat basis_;
  long long det_vp_;
};

// The lattice M * L; M must be invertible.
Lattice image(const QMat& m, const Lattice& l);

// Set intersection, computed as the annihilator of the sum of annihilators.
Lattice intersect(const Lattice& a, const Lattice& b);

// Smallest lattice containing both (canonical form of the concatenated
// generators).
Lattice sum(const Lattice& a, const Lattice& b);

// Annihilator lattice under the standard pairing: basis is the
// transpose-inverse of the input basis.  Involutive.
Lattice dual_lattice(const Lattice& l);

// Exponent e with [sup : sub] = p^e; requires sub to be contained in sup and
// throws containment_error otherwise.
PExp index_exponent(const Lattice& sub, const Lattice& sup);

// s(phi, U) as an exponent: the index of L meet M*L inside M*L.
PExp local_scale_exponent(const QMat& m, const Lattice& l);

enum class Direction { Forward, Backward };

// Intersection of the first n+1 iterates of L under M (Forward) or under
// M^{-1} (Backward); n = 0 returns L itself.
Lattice chain(const QMat& m, const Lattice& l, unsigned n, Direction dir);

struct TidyStep {
  unsigned n;
  Lattice lattice;
  PExp s_exponent;
};

// Trace of the tidying iteration: lattice k is the intersection of the
// iterates of L up to k, and the iteration stops at the first k whose local
// scale exponent matches the Newton-polygon value of M, which certifies that
// the step-k lattice is tidy.
struct TidyTrace {
  std::vector<TidyStep> steps;
  unsigned terminal_n = 0;
  PExp terminal_exponent;
};

TidyTrace tidy_iterate(const QMat& m, const Lattice& l,
                       unsigned cap = kDefaultIterationCap);

struct EntropyResult {
  PExp increment;            // stabilized increment of log_p [L : L_{-n}]
  unsigned stabilization_n;  // first n of the stabilized run
  std::vector<long long> increments;  // full increment sequence observed
};

// Computes c_n = log_p [L : intersection of backward iterates up to n] and
// returns the increment once it repeats `window` consecutive times.  Throws
// iteration_limit_error (with the partial increments) if the cap is hit.
EntropyResult entropy_exponent(const QMat& m, const Lattice& l,
                               unsigned window = kDefaultEntropyWindow,
                               unsigned cap = kDefaultIterationCap);

// Independent index oracle: counts cosets of sub inside sup explicitly in
// the finite quotient sup / p^k sup.  Requires p^k * sup to be contained in
// sub; refuses (enumeration_limit_error) when p^{k*n} exceeds the budget.
PExp enumerated_index(const Lattice& sub, const Lattice& sup, unsigned k,
                      unsigned long long budget = 1u << 20);

}  // namespace tdlc
