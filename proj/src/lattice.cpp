#include "tdlc/lattice.hpp"

#include <algorithm>
#include <string>

#include "tdlc/errors.hpp"

namespace tdlc {

namespace {

long long vp_or_throw(const Rat& q, long p) { return valuation(q, p).value(); }

// Canonical representative of q + p^k Z_(p): t * p^v with v = vp(q) and
// 0 <= t < p^{k-v} the residue of the unit part, or 0 when vp(q) >= k.
Rat canonical_rep(const Rat& q, long long k, long p) {
  if (q == 0) return Rat(0);
  long long v = vp_or_throw(q, p);
  if (v >= k) return Rat(0);
  Rat unit = q / p_power(p, v);  // numerator and denominator prime to p
  Int modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k - v));
  Int b_inv;
  if (mpz_invert(b_inv.get_mpz_t(), unit.get_den().get_mpz_t(),
                 modulus.get_mpz_t()) == 0)
    throw error("canonical_rep: denominator not invertible (internal)");
  Int t = (unit.get_num() % modulus) * b_inv % modulus;
  if (t < 0) t += modulus;
  return Rat(t) * p_power(p, v);
}

// Column echelon form over the localization of Z at p.  Allowed column
// operations: swaps, scaling by units of Z_(p), adding Z_(p)-multiples of
// one column to another.  Result: n x n lower triangular, pivots p^{k_r},
// entries left of each pivot reduced mod pivot.  det_vp collects the pivot
// exponents.
QMat hermite_local(long p, QMat g, long long& det_vp) {
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  if (m < n) throw singular_matrix_error("lattice generators do not span");
  det_vp = 0;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t i = 0; i < n; ++i) g.at(i, dst) -= f * g.at(i, src);
  };

  std::vector<long long> pivot_exp(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    // Pivot: minimal valuation in row r among the free columns (the gcd
    // over Z_(p) of the row, up to a unit).
    std::size_t best = m;
    long long best_v = 0;
    for (std::size_t j = r; j < m; ++j) {
      if (g.at(r, j) == 0) continue;
      long long v = vp_or_throw(g.at(r, j), p);
      if (best == m || v < best_v) {
        best = j;
        best_v = v;
      }
    }
    if (best == m) throw singular_matrix_error("lattice generators do not span");
    if (best != r)
      for (std::size_t i = 0; i < n; ++i) std::swap(g.at(i, r), g.at(i, best));

    Rat pivot = p_power(p, best_v);
    Rat unit = g.at(r, r) / pivot;
    for (std::size_t i = 0; i < n; ++i) g.at(i, r) /= unit;
    pivot_exp[r] = best_v;
    det_vp += best_v;

    for (std::size_t j = r + 1; j < m; ++j) {
      if (g.at(r, j) == 0) continue;
      col_axpy(j, r, g.at(r, j) / pivot);
      g.at(r, j) = 0;
    }
  }

  QMat h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) = g.at(i, j);

  // Reduce entries left of each pivot to canonical residues.  Rows are
  // processed upward-first: fixing row r only perturbs rows > r of earlier
  // columns, which are reduced later.
  for (std::size_t r = 1; r < n; ++r) {
    Rat pivot = p_power(p, pivot_exp[r]);
    for (std::size_t c = 0; c < r; ++c) {
      Rat rep = canonical_rep(h.at(r, c), pivot_exp[r], p);
      if (rep == h.at(r, c)) continue;
      Rat q = (h.at(r, c) - rep) / pivot;
      for (std::size_t i = r; i < n; ++i) h.at(i, c) -= q * h.at(i, r);
      h.at(r, c) = rep;
    }
  }
  return h;
}

}  // namespace

Lattice Lattice::standard(long p, std::size_t n) {
  require_prime(p);
  if (n == 0) throw input_error("lattice dimension must be positive");
  return Lattice(p, n, QMat::identity(n), 0);
}

Lattice Lattice::from_generators(long p, const QMat& gens) {
  require_prime(p);
  if (gens.rows() == 0) throw input_error("lattice dimension must be positive");
  long long det_vp = 0;
  QMat h = hermite_local(p, gens, det_vp);
  return Lattice(p, gens.rows(), std::move(h), det_vp);
}

bool Lattice::contains(const Lattice& sub) const {
  if (p_ != sub.p_ || n_ != sub.n_)
    throw input_error("lattice containment: prime or dimension mismatch");
  QMat x = basis_.inverse() * sub.basis_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Rat& q = x.at(i, j);
      if (q != 0 && valuation(q, p_).value() < 0) return false;
    }
  return true;
}

Lattice image(const QMat& m, const Lattice& l) {
  if (!m.is_square() || m.rows() != l.dim())
    throw input_error("image: matrix shape does not match lattice dimension");
  if (m.det() == 0) throw singular_matrix_error("image: matrix is singular");
  return Lattice::from_generators(l.p(), m * l.basis());
}

Lattice sum(const Lattice& a, const Lattice& b) {
  if (a.p() != b.p() || a.dim() != b.dim())
    throw input_error("lattice sum: prime or dimension mismatch");
  const std::size_t n = a.dim();
  QMat gens(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gens.at(i, j) = a.basis().at(i, j);
      gens.at(i, n + j) = b.basis().at(i, j);
    }
  return Lattice::from_generators(a.p(), gens);
}

Lattice dual_lattice(const Lattice& l) {
  return Lattice::from_generators(l.p(), l.basis().inverse().transpose());
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.p() != b.p() || a.dim() != b.dim())
    throw input_error("lattice intersection: prime or dimension mismatch");
  return dual_lattice(sum(dual_lattice(a), dual_lattice(b)));
}

PExp index_exponent(const Lattice& sub, const Lattice& sup) {
  if (!sup.contains(sub))
    throw containment_error("index_exponent: subgroups are not nested");
  return PExp(sub.det_valuation() - sup.det_valuation());
}

PExp local_scale_exponent(const QMat& m, const Lattice& l) {
  Lattice img = image(m, l);
  return index_exponent(intersect(l, img), img);
}

Lattice chain(const QMat& m, const Lattice& l, unsigned n, Direction dir) {
  QMat step = dir == Direction::Forward ? m : m.inverse();
  if (step.det() == 0) throw singular_matrix_error("chain: matrix is singular");
  Lattice acc = l;
  QMat iter = step;
  for (unsigned k = 1; k <= n; ++k) {
    acc = intersect(acc, Lattice::from_generators(l.p(), iter * l.basis()));
    if (k < n) iter = step * iter;
  }
  return acc;
}

TidyTrace tidy_iterate(const QMat& m, const Lattice& l, unsigned cap) {
  PExp target = scale_exponent(m, l.p());
  TidyTrace trace;
  Lattice u = l;
  QMat iter = m;
  std::vector<long long> seen;
  for (unsigned k = 0; k <= cap; ++k) {
    if (k > 0) {
      u = intersect(u, Lattice::from_generators(l.p(), iter * l.basis()));
      iter = m * iter;
    }
    PExp e = local_scale_exponent(m, u);
    trace.steps.push_back({k, u, e});
    seen.push_back(e.value());
    if (e == target) {
      trace.terminal_n = k;
      trace.terminal_exponent = e;
      return trace;
    }
  }
  throw iteration_limit_error(
      "tidy_iterate: no tidy step within " + std::to_string(cap) +
          " iterations (target exponent " + target.str() + ")",
      std::move(seen));
}

EntropyResult entropy_exponent(const QMat& m, const Lattice& l, unsigned window,
                               unsigned cap) {
  if (window == 0) throw input_error("entropy window must be >= 1");
  QMat inv = m.inverse();
  Lattice u = l;
  QMat iter = inv;
  std::vector<long long> increments;
  long long prev_total = 0;
  unsigned run_start = 0;
  for (unsigned n = 1; n <= cap; ++n) {
    u = intersect(u, Lattice::from_generators(l.p(), iter * l.basis()));
    iter = inv * iter;
    long long total = index_exponent(u, l).value();
    long long inc = total - prev_total;
    prev_total = total;
    increments.push_back(inc);
    if (n == 1 || inc != increments[n - 2]) run_start = n;
    if (n - run_start + 1 >= window)
      return {PExp(inc), run_start, std::move(increments)};
  }
  throw iteration_limit_error(
      "entropy_exponent: increments did not stabilize within " +
          std::to_string(cap) + " iterations",
      std::move(increments));
}

PExp enumerated_index(const Lattice& sub, const Lattice& sup, unsigned k,
                      unsigned long long budget) {
  if (sub.p() != sup.p() || sub.dim() != sup.dim())
    throw input_error("enumerated_index: prime or dimension mismatch");
  if (!sup.contains(sub))
    throw containment_error("enumerated_index: subgroups are not nested");
  const long p = sup.p();
  const std::size_t n = sup.dim();

  // p^k * sup must sit inside sub, so the quotient is visible mod p^k.
  Lattice scaled = Lattice::from_generators(p, sup.basis() * p_power(p, k));
  if (!sub.contains(scaled))
    throw input_error("enumerated_index: p^k * sup is not inside sub");

  double size = 1;
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n * k; ++i) {
    size *= static_cast<double>(p);
    if (size > static_cast<double>(budget))
      throw enumeration_limit_error("enumerated_index: quotient too large");
    total *= static_cast<unsigned long long>(p);
  }

  // Walk sup / p^k sup as coordinate vectors c in [0, p^k)^n with respect to
  // the basis of sup; the point lies in sub iff basis(sub)^{-1} * point is
  // p-integral.
  QMat t = sub.basis().inverse() * sup.basis();
  unsigned long long pk = 1;
  for (unsigned u = 0; u < k; ++u) pk *= static_cast<unsigned long long>(p);
  std::vector<unsigned long long> c(n, 0);
  unsigned long long members = 0;
  for (unsigned long long it = 0; it < total; ++it) {
    bool in_sub = true;
    for (std::size_t i = 0; i < n && in_sub; ++i) {
      Rat y(0);
      for (std::size_t j = 0; j < n; ++j)
        if (c[j]) y += t.at(i, j) * Rat(static_cast<unsigned long>(c[j]));
      if (y != 0 && valuation(y, p).value() < 0) in_sub = false;
    }
    if (in_sub) ++members;
    for (std::size_t j = 0; j < n; ++j) {
      if (++c[j] < pk) break;
      c[j] = 0;
    }
  }

  // [sup : sub] = p^{kn} / |sub / p^k sup|; the count is a p-power.
  unsigned long long quot = total / members;
  if (quot * members != total)
    throw error("enumerated_index: coset count is not a p-power (internal)");
  long long e = 0;
  while (quot > 1) {
    if (quot % static_cast<unsigned long long>(p) != 0)
      throw error("enumerated_index: coset count is not a p-power (internal)");
    quot /= static_cast<unsigned long long>(p);
    ++e;
  }
  return PExp(e);
}

}  // namespace tdlc
