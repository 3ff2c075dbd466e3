/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <random>

#include "sigmaforge/laurent.hpp"
#include "sigmaforge/parse.hpp"

namespace sigmaforge::test_support {

inline LaurentPolynomial P(const char* text, int rank = 2) { return parse_poly(text, rank); }

/// Pseudorandom sparse Laurent polynomial with small coefficients.
inline LaurentPolynomial random_poly(std::mt19937_64& rng, int rank, int max_terms, int exp_lo, int exp_hi,
                                     int coeff_bound = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> ex(exp_lo, exp_hi);
  std::uniform_int_distribution<int> co(-coeff_bound, coeff_bound);
  LaurentPolynomial f(rank);
  while (f.is_zero()) {
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      Exponent e(rank);
      for (auto& v : e) v = ex(rng);
      f += LaurentPolynomial::monomial(e, co(rng));
    }
  }
  return f;
}

}  // namespace sigmaforge::test_support
