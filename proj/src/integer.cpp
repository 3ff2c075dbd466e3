/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/integer.hpp"

#include <limits>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(std::int64_t n) { return is_prime(Integer(static_cast<long>(n))); }

unsigned padic_valuation(const Integer& n, std::int64_t p) {
  if (n == 0) throw Error(Errc::ZeroArgument, "valuation of 0 is infinite");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p));
  Integer m = abs(n);
  Integer P(static_cast<long>(p));
  unsigned e = 0;
  while (mpz_divisible_p(m.get_mpz_t(), P.get_mpz_t())) {
    m /= P;
    ++e;
  }
  return e;
}

std::vector<std::int64_t> prime_divisors(const Integer& n) {
  std::vector<std::int64_t> out;
  Integer m = abs(n);
  if (m == 0) throw Error(Errc::ZeroArgument, "prime divisors of 0");
  constexpr long kTrialBound = 1000000;
  for (long d = 2; d <= kTrialBound && Integer(d) * d <= m; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
      out.push_back(d);
      while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) m /= d;
    }
  }
  if (m > 1) {
    if (!is_prime(m) || !m.fits_slong_p())
      throw Error(Errc::TooLarge, "cannot factor coefficient " + n.get_str());
    out.push_back(m.get_si());
  }
  return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; k <= bound; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

std::int64_t to_int64(const Integer& n) {
  if (!n.fits_slong_p()) throw Error(Errc::TooLarge, "integer " + n.get_str() + " exceeds 64 bits");
  return n.get_si();
}

std::int64_t mod_p(const Integer& n, std::int64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace sigmaforge
