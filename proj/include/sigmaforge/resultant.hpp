/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "sigmaforge/laurent.hpp"

namespace sigmaforge {

/// Coefficients of f viewed as a polynomial in variable `var` over the ring
/// of the remaining variables, lowest degree first. Negative exponents of
/// `var` are shifted up so the lowest occurring one becomes 0.
std::vector<LaurentPolynomial> coefficients_in(const LaurentPolynomial& f, int var);

/// Res_var(a, b): determinant of the Sylvester matrix, computed by
/// fraction-free (Bareiss) elimination with exact Laurent division. The
/// result does not involve `var`. ZeroInput if either argument is zero.
LaurentPolynomial resultant_univariate(const LaurentPolynomial& a, const LaurentPolynomial& b, int var);

}  // namespace sigmaforge
