/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigmaforge/integer.hpp"

namespace sigmaforge {

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponent = std::vector<std::int64_t>;

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);

/// Sparse Laurent polynomial with integer coefficients in `rank` variables.
///
/// Terms are kept in a std::map keyed by exponent, so iteration order is the
/// lexicographic order on exponents and two equal polynomials always
/// serialize identically. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit LaurentPolynomial(int rank = 2);
  LaurentPolynomial(int rank, TermMap terms);

  static LaurentPolynomial constant(int rank, const Integer& c);
  static LaurentPolynomial monomial(const Exponent& e, const Integer& c = 1);
  /// The i-th variable x_i.
  static LaurentPolynomial variable(int rank, int index);

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Units of the Laurent ring are exactly the monomials with coefficient +-1.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Integer coefficient(const Exponent& e) const;
  std::vector<Exponent> support() const;

  /// Coordinatewise minimum / maximum of the support.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  /// Multiply by the monomial x^-min so that every exponent is >= 0 and each
  /// variable occurs with exponent 0 somewhere.
  LaurentPolynomial clear_monomial() const;
  std::int64_t degree_in(int var) const;  // max - min exponent span

  LaurentPolynomial shifted(const Exponent& e) const;
  LaurentPolynomial swapped(int i, int j) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const Integer& c, const LaurentPolynomial& a);
  LaurentPolynomial pow(unsigned k) const;

  /// Exact quotient a / b in the Laurent ring over Z, or nullopt when b does
  /// not divide a there.
  friend std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a,
                                                       const LaurentPolynomial& b);

  /// Divide every coefficient by an integer that divides all of them.
  LaurentPolynomial divided_by(const Integer& c) const;

  bool operator==(const LaurentPolynomial& o) const = default;

  /// Canonical text form using the given variable names: terms in
  /// decreasing lexicographic exponent order, explicit signs, `*` between
  /// factors and bare negative exponents (`x^-1`).
  std::string to_string(const std::vector<std::string>& vars) const;
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Integer& c);

  int rank_;
  TermMap terms_;
};

/// gcd of all coefficients; ZeroPolynomial for f = 0.
Integer content(const LaurentPolynomial& f);

std::vector<std::string> default_variable_names(int rank);

/// Polynomial with coefficients in F_p, all stored residues in [1, p-1].
class ResiduePolynomial {
 public:
  using TermMap = std::map<Exponent, std::int64_t>;

  ResiduePolynomial(int rank, std::int64_t prime);
  ResiduePolynomial(int rank, std::int64_t prime, TermMap terms);

  int rank() const { return rank_; }
  std::int64_t prime() const { return prime_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const Exponent& e) const;
  std::vector<Exponent> support() const;
  Exponent min_exponent() const;
  ResiduePolynomial clear_monomial() const;
  ResiduePolynomial shifted(const Exponent& e) const;
  /// Scale so that the lexicographically largest term has coefficient 1.
  ResiduePolynomial monic() const;
  std::int64_t degree_in(int var) const;

  ResiduePolynomial& operator+=(const ResiduePolynomial& o);
  ResiduePolynomial& operator-=(const ResiduePolynomial& o);
  friend ResiduePolynomial operator+(ResiduePolynomial a, const ResiduePolynomial& b) { return a += b; }
  friend ResiduePolynomial operator-(ResiduePolynomial a, const ResiduePolynomial& b) { return a -= b; }
  friend ResiduePolynomial operator*(const ResiduePolynomial& a, const ResiduePolynomial& b);
  ResiduePolynomial scaled(std::int64_t c) const;

  /// Exact quotient in the Laurent ring over F_p, or nullopt.
  friend std::optional<ResiduePolynomial> divide_exact(const ResiduePolynomial& a,
                                                       const ResiduePolynomial& b);

  bool operator==(const ResiduePolynomial& o) const = default;

  /// Lift to integer coefficients in [1, p-1].
  LaurentPolynomial lift() const;
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  void add_term(const Exponent& e, std::int64_t c);

  int rank_;
  std::int64_t prime_;
  TermMap terms_;
};

/// Coefficientwise reduction; the result may be zero. NotPrime for composite p.
ResiduePolynomial reduce_mod_p(const LaurentPolynomial& f, std::int64_t p);

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p);
std::int64_t invmod(std::int64_t a, std::int64_t p);

/// Valuation on the coefficient ring Z used to lift the support of f.
struct CoefficientValuation {
  enum class Kind { Zero, PAdic, ResidueZero };

  Kind kind = Kind::Zero;
  std::int64_t prime = 0;

  static CoefficientValuation zero() { return {}; }
  static CoefficientValuation padic(std::int64_t p);
  static CoefficientValuation residue_zero(std::int64_t p);

  /// Height of a nonzero integer coefficient (v(p) = 1 for PAdic).
  std::int64_t height(const Integer& c) const;

  std::string to_string() const;
  auto operator<=>(const CoefficientValuation&) const = default;
};

}  // namespace sigmaforge
