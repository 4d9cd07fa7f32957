#include "tdlc/rational.hpp"

#include <cctype>

#include "tdlc/errors.hpp"

namespace tdlc {

Rat p_power(long p, long long e) {
  Int num = 1, den = 1;
  if (e >= 0) {
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(-e));
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  Int z(p);
  // 2 = definitely prime, 1 = probable; for word-sized inputs the GMP test
  // (BPSW + Miller-Rabin rounds) has no known pseudoprimes.
  return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

void require_prime(long p) {
  if (!is_prime(p)) throw input_error("p = " + std::to_string(p) + " is not prime");
}

PExp valuation(const Int& z, long p) {
  require_prime(p);
  if (z == 0) return PExp::infinity();
  Int rest, f(p);
  auto count = mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), f.get_mpz_t());
  return PExp(static_cast<long long>(count));
}

PExp valuation(const Rat& q, long p) {
  require_prime(p);
  if (q == 0) return PExp::infinity();
  Int rest, f(p);
  auto vn = mpz_remove(rest.get_mpz_t(), q.get_num().get_mpz_t(), f.get_mpz_t());
  auto vd = mpz_remove(rest.get_mpz_t(), q.get_den().get_mpz_t(), f.get_mpz_t());
  return PExp(static_cast<long long>(vn) - static_cast<long long>(vd));
}

Rat parse_rat(const std::string& text) {
  // Accept exactly: -?digits or -?digits/digits.
  auto fail = [&] { throw input_error("malformed rational \"" + text + "\""); };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) fail();
    Int den(text.substr(den_start));
    if (den == 0) throw input_error("zero denominator in \"" + text + "\"");
  }
  Rat q(text);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tdlc
