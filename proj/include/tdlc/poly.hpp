#pragma once

#include <vector>

#include "tdlc/matrix.hpp"
#include "tdlc/pexp.hpp"
#include "tdlc/rational.hpp"

namespace tdlc {

// Monic polynomial a_0 + a_1 x + ... + x^n over the rationals.
struct MonicPoly {
  std::vector<Rat> coeff;  // coeff[i] multiplies x^i; coeff.back() == 1

  std::size_t degree() const { return coeff.size() - 1; }
  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;
};

// det(xI - M), computed exactly over Q (Faddeev-LeVerrier; the divisions are
// by integers, so the result is exact).
MonicPoly char_poly(const QMat& m);

// Lower convex hull of the points (i, vp(a_i)) over the nonzero coefficients.
// A segment of slope s and horizontal width w certifies exactly w roots with
// valuation -s in an algebraic closure, i.e. w roots of p-adic norm p^s.
struct NewtonPolygon {
  struct Vertex {
    long long i;  // coefficient index
    long long v;  // valuation of that coefficient
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  struct Segment {
    Rat slope;
    long long width;
    friend bool operator==(const Segment&, const Segment&) = default;
  };
  std::vector<Vertex> vertices;
  std::vector<Segment> segments;
};

// Requires a_0 != 0 (the matrix behind f must be invertible); throws
// singular_matrix_error otherwise.
NewtonPolygon newton_polygon(const MonicPoly& f, long p);

// Exponent E with s = p^E: the sum of width*slope over the segments of
// positive slope.  Each such product is the integer vertical rise of the
// hull, so E is a non-negative integer.
PExp scale_exponent(const NewtonPolygon& np);
PExp scale_exponent(const MonicPoly& f, long p);
PExp scale_exponent(const QMat& m, long p);

}  // namespace tdlc
