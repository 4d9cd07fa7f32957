#pragma once

#include <gmpxx.h>

#include <string>

#include "tdlc/pexp.hpp"

namespace tdlc {

// Exact scalar arithmetic.  Scalars are plain rationals (GMP-backed), kept
// canonical: denominator > 0, gcd(num, den) = 1, zero is 0/1.  The context
// prime p travels with each computation, never with the scalar.
using Int = mpz_class;
using Rat = mpq_class;

// p^e as an exact rational, e may be negative.
Rat p_power(long p, long long e);

// True for primes; uses a deterministic test for the word-sized inputs
// accepted here.
bool is_prime(long p);

// Throws input_error unless p is prime.
void require_prime(long p);

// p-adic valuation: q = p^v * (unit of the local ring at p), vp(0) = +inf.
// The p-adic norm is |q|_p = p^{-v}.
PExp valuation(const Rat& q, long p);
PExp valuation(const Int& z, long p);

// Wire format: "a" or "a/b", base 10, optional leading minus, b > 0.
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& q);

}  // namespace tdlc
