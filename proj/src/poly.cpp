#include "tdlc/poly.hpp"

#include "tdlc/errors.hpp"

namespace tdlc {

MonicPoly char_poly(const QMat& m) {
  if (!m.is_square()) throw input_error("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return MonicPoly{{Rat(1)}};
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  QMat mk = m;
  c[n - 1] = -mk.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    QMat shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
    mk = m * shifted;
    c[n - k] = -mk.trace() / Rat(static_cast<long>(k));
  }
  return MonicPoly{std::move(c)};
}

NewtonPolygon newton_polygon(const MonicPoly& f, long p) {
  require_prime(p);
  if (f.coeff.empty() || f.coeff.back() != 1)
    throw input_error("newton_polygon: polynomial is not monic");
  if (f.coeff.front() == 0)
    throw singular_matrix_error(
        "newton_polygon: constant term is zero (not an automorphism)");
  const long long n = static_cast<long long>(f.degree());

  struct Pt {
    long long i, v;
  };
  std::vector<Pt> pts;
  for (long long i = 0; i <= n; ++i) {
    const Rat& a = f.coeff[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    pts.push_back({i, valuation(a, p).value()});
  }

  // Monotone-chain lower hull; abscissas are already strictly increasing.
  std::vector<Pt> hull;
  for (const Pt& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // keep only strictly increasing slopes: pop b unless slope(a,b) < slope(b,q)
      if ((b.v - a.v) * (q.i - b.i) >= (q.v - b.v) * (b.i - a.i))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }

  NewtonPolygon np;
  for (const Pt& q : hull) np.vertices.push_back({q.i, q.v});
  for (std::size_t k = 1; k < hull.size(); ++k) {
    Rat slope(static_cast<long>(hull[k].v - hull[k - 1].v),
              static_cast<long>(hull[k].i - hull[k - 1].i));
    slope.canonicalize();
    np.segments.push_back({slope, hull[k].i - hull[k - 1].i});
  }

  // Hull sanity: spans 0..n, ends at height 0 (monic), total width n.
  long long width = 0;
  for (const auto& s : np.segments) width += s.width;
  if (np.vertices.front().i != 0 || np.vertices.back().i != n ||
      np.vertices.back().v != 0 || width != n)
    throw error("newton_polygon: malformed hull (internal)");
  return np;
}

PExp scale_exponent(const NewtonPolygon& np) {
  long long e = 0;
  for (std::size_t k = 1; k < np.vertices.size(); ++k) {
    long long rise = np.vertices[k].v - np.vertices[k - 1].v;
    if (rise > 0) e += rise;  // rise == width * slope for this segment
  }
  return PExp(e);
}

PExp scale_exponent(const MonicPoly& f, long p) {
  return scale_exponent(newton_polygon(f, p));
}

PExp scale_exponent(const QMat& m, long p) {
  return scale_exponent(char_poly(m), p);
}

}  // namespace tdlc
