/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sigmaforge/integer.hpp"

namespace sigmaforge {

/// Q, or Q(a) = Q[z]/(m) for a monic minimal polynomial m whose
/// irreducibility over Q is proven at construction.
class NumberField {
 public:
  /// The rational field, shared.
  static std::shared_ptr<const NumberField> rationals();
  /// Q[z]/(m); m given lowest degree first, need not be monic. Throws
  /// ExtensionRequired when irreducibility cannot be proven.
  static std::shared_ptr<const NumberField> extension(const std::vector<Rational>& m);

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  /// Monic, lowest degree first.
  const std::vector<Rational>& minimal_polynomial() const { return minpoly_; }
  std::string to_string() const;

 private:
  explicit NumberField(std::vector<Rational> m) : minpoly_(std::move(m)) {}
  std::vector<Rational> minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField, stored as coordinates in the power basis.
/// Rational elements mix freely with elements of any field.
class FieldElem {
 public:
  FieldElem() : FieldElem(Rational(0)) {}
  FieldElem(const Rational& q);  // NOLINT: implicit by design
  FieldElem(int q) : FieldElem(Rational(q)) {}  // NOLINT
  FieldElem(FieldPtr field, std::vector<Rational> coords);
  /// The generator a of the field.
  static FieldElem generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Value when is_rational().
  Rational rational() const;

  FieldElem operator-() const;
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem inverse() const;
  FieldElem pow(long k) const;
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// "3/2" or "1/2 + 3*a - a^2".
  std::string to_string(const std::string& gen = "a") const;

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

/// The field both operands live in (one of them may be Q). Throws
/// InvalidArgument for two distinct extensions.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace sigmaforge
