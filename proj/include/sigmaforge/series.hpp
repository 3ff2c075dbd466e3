/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sigmaforge/number_field.hpp"

namespace sigmaforge {

/// Truncated series sum c_k t^(k/d) with coefficients in a number field.
/// Exponents are stored as integer numerators over the ramification d. A
/// precision N (also a numerator over d) means every term with exponent
/// >= N/d is unknown; no precision means the series is exact.
class FractionalSeries {
 public:
  using Terms = std::map<std::int64_t, FieldElem>;

  FractionalSeries() : FractionalSeries(1, {}, std::nullopt) {}
  FractionalSeries(std::int64_t ramification, Terms terms, std::optional<std::int64_t> precision);
  static FractionalSeries constant(const FieldElem& c);
  static FractionalSeries monomial(const Rational& exponent, const FieldElem& c = FieldElem(1));

  std::int64_t ramification() const { return d_; }
  const Terms& terms() const { return terms_; }
  const std::optional<std::int64_t>& precision_units() const { return precision_; }
  std::optional<Rational> precision() const;
  bool is_exact() const { return !precision_.has_value(); }
  bool is_zero() const { return terms_.empty(); }
  /// Field holding every coefficient (Q for the empty series).
  FieldPtr field() const;

  /// Lowest exponent, in units of 1/d. For a zero series this is the
  /// precision (everything below it is known to vanish). Throws ZeroSeries
  /// for the exact zero.
  std::int64_t order_units() const;
  Rational order() const;
  FieldElem coefficient(const Rational& exponent) const;
  FieldElem leading_coefficient() const;

  /// Same series over ramification d2 (a multiple of d).
  FractionalSeries with_ramification(std::int64_t d2) const;
  /// Smallest ramification able to hold the exponents and the precision.
  FractionalSeries normalized() const;
  FractionalSeries truncated(const Rational& n) const;
  FractionalSeries scaled(const FieldElem& c) const;

  FractionalSeries operator-() const { return scaled(FieldElem(-1)); }
  friend FractionalSeries operator+(const FractionalSeries& a, const FractionalSeries& b);
  friend FractionalSeries operator-(const FractionalSeries& a, const FractionalSeries& b) { return a + (-b); }
  friend FractionalSeries operator*(const FractionalSeries& a, const FractionalSeries& b);
  FractionalSeries pow(unsigned k) const;

  /// Equal coefficients below the smaller of the two precisions.
  bool agrees_with(const FractionalSeries& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::int64_t d_;
  Terms terms_;
  std::optional<std::int64_t> precision_;
};

/// Lowest common ramification of two series, both rescaled onto it.
std::int64_t common_ramification(const FractionalSeries& a, const FractionalSeries& b);

}  // namespace sigmaforge
