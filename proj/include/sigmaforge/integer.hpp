/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sigmaforge {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(const Integer& n);
bool is_prime(std::int64_t n);

/// Largest e with p^e | n. Throws ZeroArgument for n = 0 and NotPrime for
/// composite p.
unsigned padic_valuation(const Integer& n, std::int64_t p);

/// Distinct prime divisors of |n| in increasing order. Trial division up to
/// 10^6; a larger cofactor is accepted only when it is prime, otherwise
/// TooLarge is thrown.
std::vector<std::int64_t> prime_divisors(const Integer& n);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

std::int64_t to_int64(const Integer& n);

/// Least nonnegative residue of n modulo p.
std::int64_t mod_p(const Integer& n, std::int64_t p);

/// Ceiling and floor of a rational as integers.
Integer ceil_q(const Rational& q);
Integer floor_q(const Rational& q);

}  // namespace sigmaforge
