#include <doctest.h>

#include <random>

#include "tdlc/duality.hpp"
#include "tdlc/scale.hpp"

using namespace tdlc;

TEST_CASE("annihilator lattices on pinned inputs") {
  for (long p : {2L, 3L}) {
    for (std::size_t n : {1u, 2u, 3u}) {
      Lattice zpn = Lattice::standard(p, n);
      CHECK(dual_lattice(zpn) == zpn);  // the standard lattice is self-dual
    }
    Lattice scaled = Lattice::from_generators(p, QMat::diagonal({Rat(p)}));
    CHECK(dual_lattice(scaled) ==
          Lattice::from_generators(p, QMat::diagonal({Rat(1, p)})));
  }
}

TEST_CASE("annihilator is an involution and reverses inclusions") {
  std::mt19937_64 rng(555);
  for (long p : {2L, 3L, 5L}) {
    for (int t = 0; t < 30; ++t) {
      std::size_t n = 1 + rng() % 3;
      Lattice l = random_lattice(rng, n, p);
      CHECK(dual_lattice(dual_lattice(l)) == l);

      Lattice big = random_lattice(rng, n, p);
      Lattice small = intersect(big, random_lattice(rng, n, p));
      CHECK(dual_lattice(small).contains(dual_lattice(big)));
      CHECK(index_exponent(small, big) ==
            index_exponent(dual_lattice(big), dual_lattice(small)));
    }
  }
}

TEST_CASE("bridge identities on pinned inputs") {
  for (long p : {2L, 3L, 5L}) {
    QMat m{{Rat(0), Rat(p)}, {Rat(1, p), Rat(0)}};
    Lattice zp2 = Lattice::standard(p, 2);
    BridgeReport r = check_bridge(m, zp2);
    CHECK(r.local_lhs == PExp(1));
    CHECK(r.local_rhs == PExp(1));
    CHECK(r.global_lhs == PExp(0));
    CHECK(r.ok);
    BridgeReport id = check_bridge(QMat::identity(2), zp2);
    CHECK(id.local_lhs == PExp(0));
    CHECK(id.local_rhs == PExp(0));
  }
}

TEST_CASE("bridge identities on random automorphisms and lattices") {
  std::mt19937_64 rng(99);
  for (long p : {2L, 3L}) {
    for (int t = 0; t < 25; ++t) {
      std::size_t n = 1 + rng() % 3;
      QMat m = random_matrix(rng, n, p);
      Lattice l = random_lattice(rng, n, p);
      BridgeReport r = check_bridge(m, l);
      CHECK(r.ok);
      // transposition preserves the characteristic polynomial, which is the
      // independent reason the global exponents agree
      CHECK((char_poly(m) == char_poly(m.transpose())));
    }
  }
}
