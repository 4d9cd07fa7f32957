#include "tdlc/duality.hpp"

#include "tdlc/errors.hpp"

namespace tdlc {

BridgeReport check_bridge(const QMat& m, const Lattice& l, unsigned cap) {
  BridgeReport r;
  Lattice ann = dual_lattice(l);
  r.local_lhs = local_scale_exponent(m, l);
  r.local_rhs = local_scale_exponent(m.transpose(), ann);
  r.global_lhs = scale_exponent(m, l.p());
  r.global_rhs = scale_exponent(m.transpose(), l.p());
  r.involution_ok = dual_lattice(ann) == l;

  // Minimizing subgroups correspond under the annihilator map; both tidy
  // iterations must land on the same exponent.
  r.witness_lhs = tidy_iterate(m, l, cap).terminal_exponent;
  r.witness_rhs = tidy_iterate(m.transpose(), ann, cap).terminal_exponent;

  r.ok = r.local_lhs == r.local_rhs && r.global_lhs == r.global_rhs &&
         r.involution_ok && r.witness_lhs == r.witness_rhs;
  if (!r.ok)
    throw verification_error(
        "duality bridge failed: s(M,L) = " + r.local_lhs.str() +
        ", s(M^T,L*) = " + r.local_rhs.str() + ", scale(M) = " +
        r.global_lhs.str() + ", scale(M^T) = " + r.global_rhs.str() +
        (r.involution_ok ? "" : ", involution violated"));
  return r;
}

}  // namespace tdlc
