#include <doctest.h>

#include <random>

#include "tdlc/errors.hpp"
#include "tdlc/poly.hpp"
#include "tdlc/scale.hpp"

using namespace tdlc;

namespace {

// 2x2 cofactor oracle: x^2 - (a + d)x + (ad - bc).
MonicPoly cofactor_2x2(const QMat& m) {
  return MonicPoly{{m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0),
                    -(m.at(0, 0) + m.at(1, 1)), Rat(1)}};
}

// (x - 1)^n by Pascal's rule.
MonicPoly binomial_power(std::size_t n) {
  std::vector<Rat> c{Rat(1)};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i];
    }
    c = std::move(next);
  }
  return MonicPoly{std::move(c)};
}

}  // namespace

TEST_CASE("characteristic polynomial on pinned matrices") {
  for (long p : {2L, 3L, 5L}) {
    QMat m{{Rat(0), Rat(p)}, {Rat(1, p), Rat(0)}};
    MonicPoly f = char_poly(m);
    CHECK((f == MonicPoly{{Rat(-1), Rat(0), Rat(1)}}));  // x^2 - 1
    CHECK(f == cofactor_2x2(m));
  }
  for (std::size_t n : {1u, 2u, 3u, 4u})
    CHECK(char_poly(QMat::identity(n)) == binomial_power(n));
  QMat t{{Rat(2), Rat(1)}, {Rat(0), Rat(3)}};
  CHECK((char_poly(t) == MonicPoly{{Rat(6), Rat(-5), Rat(1)}}));
  CHECK(char_poly(t) == cofactor_2x2(t));
}

TEST_CASE("characteristic polynomial matches the cofactor oracle on random 2x2") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    QMat m = random_matrix(rng, 2, 3);
    CHECK(char_poly(m) == cofactor_2x2(m));
  }
}

TEST_CASE("newton polygon on pinned polynomials") {
  {
    MonicPoly f{{Rat(-1), Rat(0), Rat(1)}};  // x^2 - 1
    NewtonPolygon np = newton_polygon(f, 3);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == 0);
    CHECK(np.segments[0].width == 2);
  }
  for (long p : {2L, 3L, 5L}) {
    MonicPoly f{{Rat(-1, p), Rat(1)}};  // x - 1/p
    NewtonPolygon np = newton_polygon(f, p);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == 1);
    CHECK(np.segments[0].width == 1);
  }
  {
    long p = 2;
    // (x - p)(x - 1/p) = x^2 - (p + 1/p)x + 1
    MonicPoly f{{Rat(1), -(Rat(p) + Rat(1, p)), Rat(1)}};
    NewtonPolygon np = newton_polygon(f, p);
    REQUIRE(np.segments.size() == 2);
    CHECK(np.segments[0].slope == -1);
    CHECK(np.segments[0].width == 1);
    CHECK(np.segments[1].slope == 1);
    CHECK(np.segments[1].width == 1);
  }
  MonicPoly singular{{Rat(0), Rat(1)}};
  CHECK_THROWS_AS(newton_polygon(singular, 2), singular_matrix_error);
}

TEST_CASE("scale exponent on pinned matrices") {
  for (long p : {2L, 3L, 5L}) {
    QMat m{{Rat(0), Rat(p)}, {Rat(1, p), Rat(0)}};
    CHECK(scale_exponent(m, p) == PExp(0));
    CHECK(scale_exponent(QMat::diagonal({Rat(1, p)}), p) == PExp(1));
    CHECK(scale_exponent(
              QMat::diagonal({Rat(1, p), Rat(1, p * p), Rat(p)}), p) ==
          PExp(3));
  }
}

TEST_CASE("newton polygon structure and triangular-matrix oracle") {
  std::mt19937_64 rng(101);
  for (long p : {2L, 3L, 5L}) {
    for (int t = 0; t < 60; ++t) {
      // random upper triangular with diagonal p^{k_i} * unit: eigenvalues are
      // the diagonal, so the exponent is the sum of max(0, -k_i)
      std::size_t n = 1 + rng() % 3;
      QMat m(n, n);
      long long expected = 0;
      for (std::size_t i = 0; i < n; ++i) {
        long long k = static_cast<long long>(rng() % 7) - 3;
        long u = 1 + static_cast<long>(rng() % 4);
        while (u % p == 0) ++u;
        m.at(i, i) = Rat(u) * p_power(p, k);
        expected += std::max(0ll, -k);
        for (std::size_t j = i + 1; j < n; ++j)
          m.at(i, j) = random_scaled_unit(rng, p);
      }
      CHECK(scale_exponent(m, p) == PExp(expected));

      NewtonPolygon np = newton_polygon(char_poly(m), p);
      long long width = 0;
      Rat prev_slope;
      for (std::size_t s = 0; s < np.segments.size(); ++s) {
        width += np.segments[s].width;
        Rat rise =
            np.segments[s].slope * Rat(static_cast<long>(np.segments[s].width));
        CHECK(rise.get_den() == 1);  // width * slope is an integer
        if (s) CHECK(np.segments[s].slope > prev_slope);
        prev_slope = np.segments[s].slope;
      }
      CHECK(width == static_cast<long long>(n));
    }
  }
}
