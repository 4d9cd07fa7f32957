#include "tdlc/scale.hpp"

#include <string>

#include "tdlc/errors.hpp"

namespace tdlc {

namespace {

std::string trace_str(const TidyTrace& t) {
  std::string s = "[";
  for (const auto& step : t.steps) {
    if (step.n) s += ", ";
    s += step.s_exponent.str();
  }
  return s + "]";
}

}  // namespace

ScaleReport scale(const QMat& m, long p, unsigned window, unsigned cap) {
  require_prime(p);
  if (!m.is_square() || m.rows() == 0)
    throw input_error("scale: matrix must be square and non-empty");
  if (m.det() == 0) throw singular_matrix_error("scale: matrix is singular");

  ScaleReport r;
  r.p = p;
  r.n = m.rows();
  MonicPoly f = char_poly(m);
  r.newton = newton_polygon(f, p);
  r.scale_exp = scale_exponent(r.newton);

  Lattice std_lattice = Lattice::standard(p, r.n);
  r.witness = tidy_iterate(m, std_lattice, cap);
  EntropyResult ent = entropy_exponent(m, std_lattice, window, cap);
  r.entropy_exp = ent.increment;
  r.entropy_stabilized_at = ent.stabilization_n;

  if (r.witness.terminal_exponent != r.scale_exp ||
      r.entropy_exp != r.scale_exp)
    throw verification_error(
        "engine disagreement: newton = " + r.scale_exp.str() +
        ", tidy trace " + trace_str(r.witness) +
        ", entropy increment = " + r.entropy_exp.str());
  return r;
}

LawReport check_laws(const QMat& m, const QMat& n, const QMat& q, unsigned k,
                     long p, const std::optional<QMat>& r_opt) {
  require_prime(p);
  if (!q.is_square() || q.rows() != m.rows() || q.det() == 0)
    throw input_error("check_laws: q must be invertible with the shape of m");

  LawReport rep;
  rep.base_m = scale_exponent(m, p);
  rep.base_n = scale_exponent(n, p);

  rep.power_ok =
      scale_exponent(m.pow(static_cast<long long>(k)), p) ==
      static_cast<long long>(k) * rep.base_m;
  rep.conj_ok = scale_exponent(q * m * q.inverse(), p) == rep.base_m;
  rep.block_diag_ok =
      scale_exponent(QMat::block_diag(m, n), p) == rep.base_m + rep.base_n;

  QMat r = r_opt ? *r_opt : QMat(m.rows(), n.cols());
  if (!r_opt) {
    // deterministic nonzero mix so the triangular case is not secretly diagonal
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        r.at(i, j) = m.at(i, i % m.cols()) + n.at(i % n.rows(), j);
  }
  rep.block_tri_ok =
      scale_exponent(QMat::block_upper(m, r, n), p) == rep.base_m + rep.base_n;
  return rep;
}

InequalityReport check_inequality(const QMat& m, long p, unsigned trials,
                                  std::mt19937_64& rng) {
  if (trials == 0) throw input_error("check_inequality: trials must be >= 1");
  InequalityReport rep;
  rep.trials = trials;
  rep.scale_exp = scale_exponent(m, p);
  rep.min_local = PExp::infinity();
  for (unsigned t = 0; t < trials; ++t) {
    Lattice l = random_lattice(rng, m.rows(), p);
    PExp e = local_scale_exponent(m, l);
    if (e < rep.min_local) rep.min_local = e;
    if (e < rep.scale_exp) ++rep.violations;
    if (e > rep.scale_exp) rep.strict_seen = true;
  }
  return rep;
}

Rat random_scaled_unit(std::mt19937_64& rng, long p) {
  long long a = static_cast<long long>(rng() % 7) - 3;  // exponent in [-3, 3]
  long u;
  do {
    u = static_cast<long>(rng() % 19) - 9;  // unit in [-9, 9]
  } while (u == 0 || u % p == 0);
  return Rat(u) * p_power(p, a);
}

QMat random_matrix(std::mt19937_64& rng, std::size_t n, long p) {
  for (;;) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scaled_unit(rng, p);
    if (m.det() != 0) return m;
  }
}

QMat random_unimodular_matrix(std::mt19937_64& rng, std::size_t n, long p) {
  for (;;) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = Rat(static_cast<long>(rng() % (2 * p * p)));
    Rat d = m.det();
    if (d != 0 && valuation(d, p).value() == 0) return m;
  }
}

Lattice random_lattice(std::mt19937_64& rng, std::size_t n, long p) {
  return Lattice::from_generators(p, random_matrix(rng, n, p));
}

}  // namespace tdlc
