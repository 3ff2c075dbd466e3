/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "sigmaforge/integer.hpp"

namespace sigmaforge {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& a);
int degree(const ZPoly& a);
ZPoly primitive_part(ZPoly a);
ZPoly derivative(const ZPoly& a);
ZPoly multiply(const ZPoly& a, const ZPoly& b);
/// Pseudo-remainder of a by b (b nonzero).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b);
/// Exact quotient a / b over Q scaled back into Z, assuming b | a over Q.
ZPoly exact_quotient(const ZPoly& a, const ZPoly& b);
/// Primitive gcd, equal to the gcd over Q up to a constant.
ZPoly gcd_z(ZPoly a, ZPoly b);
/// Primitive polynomial with the same roots as q (denominators cleared).
ZPoly from_rationals(const std::vector<Rational>& q);
Rational evaluate(const ZPoly& a, const Rational& x);
/// Distinct rational roots in increasing order (rational root theorem).
std::vector<Rational> rational_roots(const ZPoly& a);
/// Exact b-th root of a rational when one exists in Q.
bool rational_root_of(const Rational& u, unsigned b, Rational& out);
/// Capelli: z^b - u is irreducible over Q.
bool binomial_irreducible(const Rational& u, unsigned b);

}  // namespace sigmaforge
