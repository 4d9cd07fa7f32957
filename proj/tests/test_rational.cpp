#include <doctest.h>

#include <random>

#include "tdlc/errors.hpp"
#include "tdlc/rational.hpp"

using namespace tdlc;

namespace {

// Trial-division oracle for integer valuations, independent of mpz_remove.
long long trial_division_vp(long long n, long p) {
  REQUIRE(n != 0);
  if (n < 0) n = -n;
  long long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Rat random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 2001) - 1000;
  long den = static_cast<long>(rng() % 999) + 1;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rational wire format round trips") {
  CHECK(rat_str(parse_rat("3/4")) == "3/4");
  CHECK(rat_str(parse_rat("-12")) == "-12");
  CHECK(rat_str(parse_rat("0")) == "0");
  CHECK(rat_str(parse_rat("6/4")) == "3/2");  // canonicalized on parse
  CHECK(rat_str(parse_rat("0/5")) == "0");    // zero is uniquely 0/1
  CHECK(parse_rat("0/5").get_den() == 1);
  CHECK(parse_rat("-6/4") == Rat(-3, 2));

  CHECK_THROWS_AS(parse_rat(""), input_error);
  CHECK_THROWS_AS(parse_rat("1/0"), input_error);
  CHECK_THROWS_AS(parse_rat("x"), input_error);
  CHECK_THROWS_AS(parse_rat("3/-4"), input_error);
  CHECK_THROWS_AS(parse_rat("1.5"), input_error);
  CHECK_THROWS_AS(parse_rat("1/2/3"), input_error);
  CHECK_THROWS_AS(parse_rat(" 1"), input_error);
}

TEST_CASE("valuation on pinned inputs") {
  for (long p : {2L, 3L, 5L}) {
    CHECK(valuation(Rat(1, p), p) == PExp(-1));
    CHECK(valuation(Rat(0), p) == PExp::infinity());
  }
  CHECK(valuation(Rat(12), 2) == PExp(2));
  CHECK(valuation(Rat(12), 3) == PExp(1));
  CHECK(valuation(Rat(12), 2).value() == trial_division_vp(12, 2));
  CHECK(valuation(Rat(12), 3).value() == trial_division_vp(12, 3));

  CHECK_THROWS_AS(valuation(Rat(1), 4), input_error);
  CHECK_THROWS_AS(valuation(Rat(1), 1), input_error);
  CHECK_THROWS_AS(valuation(Rat(1), -3), input_error);
}

TEST_CASE("valuation agrees with trial division on integers") {
  std::mt19937_64 rng(11);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int t = 0; t < 200; ++t) {
      long long n = static_cast<long long>(rng() % 100000) + 1;
      if (rng() & 1) n = -n;
      CHECK(valuation(Rat(static_cast<long>(n)), p).value() ==
            trial_division_vp(n, p));
    }
  }
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  std::mt19937_64 rng(7);
  for (long p : {2L, 3L, 5L}) {
    for (int t = 0; t < 300; ++t) {
      Rat a = random_rational(rng);
      Rat b = random_rational(rng);
      if (a != 0 && b != 0)
        CHECK(valuation(a * b, p) == valuation(a, p) + valuation(b, p));
      PExp va = valuation(a, p), vb = valuation(b, p);
      PExp lower = va < vb ? va : vb;
      PExp vs = valuation(a + b, p);
      CHECK(vs >= lower);
      if (va != vb) CHECK(vs == lower);
    }
  }
}

TEST_CASE("p-power exponents behave like products of p-powers") {
  CHECK(PExp(2) + PExp(3) == PExp(5));
  CHECK(PExp(2) + PExp::infinity() == PExp::infinity());
  CHECK(4 * PExp(-2) == PExp(-8));
  CHECK(PExp(1) < PExp::infinity());
  CHECK(PExp::infinity() == PExp::infinity());
  CHECK(PExp(3) - PExp(5) == PExp(-2));
  CHECK_THROWS_AS(PExp::infinity().value(), error);
  CHECK(p_power(3, -2) == Rat(1, 9));
  CHECK(p_power(2, 5) == Rat(32));
}
