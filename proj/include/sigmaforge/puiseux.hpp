/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmaforge/laurent.hpp"
#include "sigmaforge/series.hpp"

namespace sigmaforge {

/// One branch of a plane curve at x = 0: x = t^d, y = g(t). The series is
/// stored in powers of x^(1/d), so its exponent numerators are exactly the
/// exponents of t.
struct PuiseuxBranch {
  std::int64_t d = 1;
  FractionalSeries series;
  /// Number of conjugate branches this one stands for (Galois conjugates of
  /// the coefficients and the d substitutions t -> zeta t).
  int conjugacy_size = 1;

  /// g(t), the same coefficients over ramification 1.
  FractionalSeries in_t() const;
};

/// Newton-Puiseux expansion of every branch of F (monomials cleared) in y
/// over Q((x)). Each branch is carried to at least `nterms` terms past its
/// last ramification. Branches whose next term would need a second
/// algebraic extension raise ExtensionRequired.
std::vector<PuiseuxBranch> puiseux_expand(const LaurentPolynomial& f, int nterms);

/// F(t^d, g(t)) with the monomials of F cleared, as a series in t.
FractionalSeries branch_residual(const LaurentPolynomial& f, const PuiseuxBranch& branch);

/// exp(2 pi i k / m), kept symbolic until it has to be materialized.
struct RootOfUnity {
  std::int64_t order = 1;
  std::int64_t exponent = 0;
};

/// zeta * s^e through the binomial series around the lowest term of s. An
/// exact input with a genuinely infinite expansion is cut after `terms`
/// multiples of the valuation of s / (lowest term) - 1.
FractionalSeries series_power_twist(const FractionalSeries& s, const Rational& e, RootOfUnity zeta = {},
                                    int terms = 20);

/// Minimal total degree integer relation R(U, V) with R(u, v) = 0 to the
/// available precision, primitive, leading coefficient positive in the
/// order (V-degree, U-degree). U is variable 0, V is variable 1. nullopt
/// when nothing of degree <= degree_bound exists.
std::optional<LaurentPolynomial> find_integer_relation(const FractionalSeries& u, const FractionalSeries& v,
                                                       int degree_bound);

enum class HomothetyVerdict { True, False, Undetermined };

std::string_view homothety_verdict_name(HomothetyVerdict v);

struct HomothetyResult {
  HomothetyVerdict verdict = HomothetyVerdict::Undetermined;
  /// Minimal relation R_n of (x^n, y^n) on the curve.
  LaurentPolynomial relation;
  /// Decided by exact division by F rather than by series substitution.
  bool exact = false;
};

/// Whether x^n -> x^c1, y^n -> y^c2 defines a ring map between the
/// subrings generated by those monomials on the curve F = 0.
HomothetyResult homothety_check(const LaurentPolynomial& f, int n, int c1, int c2);

struct HomothetyScan {
  std::vector<std::array<int, 3>> accepted;
  std::vector<std::array<int, 3>> undetermined;
};

/// homothety_check over [1..bound]^3 in lexicographic order.
HomothetyScan homothety_scan(const LaurentPolynomial& f, int bound, int max_bound = 4);

}  // namespace sigmaforge
