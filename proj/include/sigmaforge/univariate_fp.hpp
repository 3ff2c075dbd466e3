/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sigmaforge {

/// Dense univariate polynomial over F_p, coefficients lowest degree first.
struct UPolyFp {
  std::int64_t p = 2;
  std::vector<std::int64_t> c;

  UPolyFp() = default;
  UPolyFp(std::int64_t prime, std::vector<std::int64_t> coeffs);

  static UPolyFp x(std::int64_t prime) { return UPolyFp(prime, {0, 1}); }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::int64_t lead() const { return c.empty() ? 0 : c.back(); }
  UPolyFp monic() const;
  void trim();

  bool operator==(const UPolyFp&) const = default;
};

UPolyFp operator+(const UPolyFp& a, const UPolyFp& b);
UPolyFp operator-(const UPolyFp& a, const UPolyFp& b);
UPolyFp operator*(const UPolyFp& a, const UPolyFp& b);
std::pair<UPolyFp, UPolyFp> divmod(const UPolyFp& a, const UPolyFp& b);
UPolyFp operator%(const UPolyFp& a, const UPolyFp& b);
UPolyFp gcd(UPolyFp a, UPolyFp b);
UPolyFp derivative(const UPolyFp& a);

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. The leading coefficient of the input is dropped.
std::vector<std::pair<UPolyFp, int>> factor_fp(const UPolyFp& f);

bool is_irreducible_fp(const UPolyFp& f);

}  // namespace sigmaforge
