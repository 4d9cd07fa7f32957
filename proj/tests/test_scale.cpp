#include <doctest.h>

#include <random>

#include "tdlc/errors.hpp"
#include "tdlc/json_io.hpp"
#include "tdlc/scale.hpp"

using namespace tdlc;

TEST_CASE("scale report on pinned automorphisms") {
  {
    QMat m{{Rat(0), Rat(3)}, {Rat(1, 3), Rat(0)}};
    ScaleReport r = scale(m, 3);
    CHECK(r.scale_exp == PExp(0));
    CHECK(r.entropy_exp == PExp(0));
    CHECK(r.witness.terminal_exponent == PExp(0));
    CHECK(r.witness.steps.front().s_exponent == PExp(1));
  }
  {
    ScaleReport r = scale(QMat::identity(3), 2);
    CHECK(r.scale_exp == PExp(0));
    CHECK(r.entropy_exp == PExp(0));
    CHECK(r.witness.terminal_n == 0);
  }
  {
    ScaleReport r = scale(QMat::diagonal({Rat(1, 2), Rat(1, 4), Rat(2)}), 2);
    CHECK(r.scale_exp == PExp(3));
    CHECK(r.entropy_exp == PExp(3));
  }
  CHECK_THROWS_AS(scale(QMat(2, 2), 2), singular_matrix_error);
  CHECK_THROWS_AS(scale(QMat::identity(2), 6), input_error);
}

TEST_CASE("exponent laws on pinned matrices") {
  long p = 3;
  QMat m{{Rat(0), Rat(p)}, {Rat(1, p), Rat(0)}};
  CHECK(scale_exponent(m.pow(2), p) == PExp(0));

  LawReport with_identity =
      check_laws(m, QMat::diagonal({Rat(1, p)}), QMat::identity(2), 2, p);
  CHECK(with_identity.all());

  QMat a = QMat::diagonal({Rat(1, p)});
  QMat b = QMat::diagonal({Rat(1, p * p)});
  CHECK(scale_exponent(QMat::block_diag(a, b), p) == PExp(3));
}

TEST_CASE("conjugation by the worked change of basis") {
  for (long p : {2L, 3L, 5L}) {
    QMat m{{Rat(0), Rat(p)}, {Rat(1, p), Rat(0)}};
    QMat xi{{Rat(p), Rat(-p)}, {Rat(1), Rat(1)}};
    QMat psi = QMat::diagonal({Rat(1), Rat(-1)});
    CHECK(xi * psi * xi.inverse() == m);
    CHECK(scale_exponent(psi, p) == PExp(0));
    CHECK(local_scale_exponent(psi, Lattice::standard(p, 2)) == PExp(0));
    CHECK(scale_exponent(m, p) == scale_exponent(psi, p));
  }
}

TEST_CASE("minimum inequality over random lattices") {
  std::mt19937_64 rng(2024);
  {
    InequalityReport r = check_inequality(QMat::identity(2), 3, 10, rng);
    CHECK(r.violations == 0);
    CHECK(r.scale_exp == PExp(0));
  }
  {
    QMat m{{Rat(0), Rat(3)}, {Rat(1, 3), Rat(0)}};
    InequalityReport r = check_inequality(m, 3, 25, rng);
    CHECK(r.violations == 0);
    // the standard lattice already witnesses strictness for this map
    CHECK(local_scale_exponent(m, Lattice::standard(3, 2)) > r.scale_exp);
  }
  for (long p : {2L, 5L}) {
    QMat m = random_matrix(rng, 3, p);
    InequalityReport r = check_inequality(m, p, 50, rng);
    CHECK(r.violations == 0);
    CHECK(r.min_local >= r.scale_exp);
  }
}

TEST_CASE("seeded runs serialize identically") {
  QMat m{{Rat(0), Rat(5)}, {Rat(1, 5), Rat(0)}};
  json a = scale_report_json(scale(m, 5));
  json b = scale_report_json(scale(m, 5));
  CHECK(a.dump() == b.dump());

  std::mt19937_64 r1(42), r2(42);
  QMat m1 = random_matrix(r1, 3, 3);
  QMat m2 = random_matrix(r2, 3, 3);
  CHECK(m1 == m2);
}

TEST_CASE("random laws hold as exact exponent identities") {
  std::mt19937_64 rng(1234);
  for (long p : {2L, 3L, 5L}) {
    for (int t = 0; t < 15; ++t) {
      std::size_t n1 = 1 + rng() % 2, n2 = 1 + rng() % 2;
      QMat m = random_matrix(rng, n1, p);
      QMat nm = random_matrix(rng, n2, p);
      QMat q = random_matrix(rng, n1, p);
      unsigned k = rng() % 5;
      LawReport rep = check_laws(m, nm, q, k, p);
      CHECK(rep.power_ok);
      CHECK(rep.conj_ok);
      CHECK(rep.block_diag_ok);
      CHECK(rep.block_tri_ok);
    }
  }
}

TEST_CASE("ramified eigenvalues: fractional slopes with integer rises") {
  // companion matrix of x^3 - 1/p: three conjugate eigenvalues of valuation
  // -1/3, one polygon segment of slope 1/3 and width 3
  for (long p : {2L, 3L}) {
    QMat m(3, 3);
    m.at(0, 2) = Rat(1, p);
    m.at(1, 0) = 1;
    m.at(2, 1) = 1;
    NewtonPolygon np = newton_polygon(char_poly(m), p);
    REQUIRE(np.segments.size() == 1);
    CHECK(np.segments[0].slope == Rat(1, 3));
    CHECK(np.segments[0].width == 3);
    ScaleReport r = scale(m, p);
    CHECK(r.scale_exp == PExp(1));
    CHECK(r.entropy_exp == PExp(1));
  }
  // a non-diagonalizable block: repeated eigenvalue 1/p with multiplicity 3
  QMat j(3, 3);
  for (int i = 0; i < 3; ++i) j.at(i, i) = Rat(1, 2);
  j.at(0, 1) = 1;
  j.at(1, 2) = 1;
  CHECK(scale(j, 2).scale_exp == PExp(3));
}
