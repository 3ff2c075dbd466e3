/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmaforge/laurent.hpp"

namespace sigmaforge {

// ---------------------------------------------------------------------------
// factorization over F_p

struct FactorLimits {
  std::size_t max_support = 8;
  std::size_t max_univariate_factors = 16;
};

/// Irreducible factorization of f mod p in the Laurent ring over F_p.
/// Factors are monomial-free, scaled so their lexicographically largest term
/// is 1, sorted, and repeated according to multiplicity. Unit factors are
/// dropped, so the product equals f mod p up to c * x^a.
struct ModPFactorization {
  bool complete = true;
  std::vector<ResiduePolynomial> factors;
  std::string reason;  // why the search gave up when !complete
};

/// ZeroResidue when f = 0 mod p. Bivariate inputs that are not primitive of
/// degree <= 1 in a variable go through Kronecker substitution and subset
/// recombination, bounded by `limits`.
ModPFactorization factor_mod_p(const LaurentPolynomial& f, std::int64_t p, const FactorLimits& limits = {});
ModPFactorization factor_residue(const ResiduePolynomial& f, const FactorLimits& limits = {});

// ---------------------------------------------------------------------------
// ring-theoretic hypotheses

struct TorsionFreeResult {
  bool torsion_free = false;
  std::optional<std::string> warning;  // constant input
};

/// content(f) = 1. ZeroPolynomial for f = 0.
TorsionFreeResult torsionfree_check(const LaurentPolynomial& f);

/// Coefficient field: Q when prime = 0, otherwise F_p.
struct Field {
  std::int64_t prime = 0;
  static Field rationals() { return {}; }
  static Field fp(std::int64_t p) { return {p}; }
  bool is_q() const { return prime == 0; }
  std::string to_string() const;
};

enum class IrreducibilityVerdict { Irreducible, Reducible, Unit, Zero, Undetermined };
enum class IrreducibilityMethod { None, LinearInVariable, MinkowskiSearch, ModPLift, FiniteFieldFactorization };

std::string verdict_name(IrreducibilityVerdict v);
std::string method_name(IrreducibilityMethod m);

struct IrreducibilityStatus {
  IrreducibilityVerdict verdict = IrreducibilityVerdict::Undetermined;
  Field field;
  IrreducibilityMethod method = IrreducibilityMethod::None;
  std::vector<LaurentPolynomial> factors;         // witnesses over Q
  std::vector<ResiduePolynomial> residue_factors;  // witnesses over F_p
  std::optional<std::int64_t> lift_prime;          // the prime used by ModPLift
  std::string note;
};

struct IrreducibilityLimits {
  std::size_t lift_primes = 10;             // good primes tried by ModPLift
  std::int64_t coefficient_bound = 3;       // non-vertex coefficients in MinkowskiSearch
  std::size_t max_candidates = 200000;      // per summand pair
  std::size_t max_lattice_points = 64;
};

/// Irreducibility in the Laurent ring over the field (units are c * x^a).
/// Over Q: clear monomials; LinearInVariable by gcd when f has degree 1 in a
/// variable; ModPLift (irreducible mod a prime that keeps every vertex
/// coefficient) proves irreducibility; MinkowskiSearch over summand pairs of
/// the Newton polytope with bounded integer coefficients proves
/// reducibility; otherwise Undetermined. Over F_p: factor_mod_p.
IrreducibilityStatus irreducibility_status(const LaurentPolynomial& f, Field field = Field::rationals(),
                                           const IrreducibilityLimits& limits = {});

struct ModPDomainResult {
  std::int64_t prime = 0;
  std::optional<bool> domain;  // nullopt: undetermined
  bool infinite = false;
  IrreducibilityStatus status;
};

/// A/pA is a domain iff f mod p is irreducible and not a unit; it is infinite
/// iff f mod p is not a monomial. ZeroResidue when p | content(f).
ModPDomainResult mod_p_domain_check(const LaurentPolynomial& f, std::int64_t p);

enum class CertificateStatus { Certified, FiniteListOnly };

struct AllPrimesCertificate {
  CertificateStatus status = CertificateStatus::FiniteListOnly;
  std::vector<std::int64_t> checked;
  std::vector<ModPDomainResult> results;  // one per checked prime
  std::optional<Integer> resultant;       // Res(A, B) for f = A*y + B
  std::string justification;
};

/// Certified when f = A*y + B (or with x) with Res(A, B) != 0: every prime not
/// dividing Res(A, B) * lc(A) * lc(B) keeps A, B coprime of the same degrees,
/// so f mod p stays irreducible. Those primes and the coefficient primes are
/// checked directly. Otherwise FiniteListOnly over coefficient primes and
/// primes <= 13. InvalidArgument when content(f) != 1.
AllPrimesCertificate all_primes_certificate(const LaurentPolynomial& f);

/// Primitive exponent directions w (first nonzero entry positive) with x^w
/// algebraic over Q in Q[x^{+-1}, y^{+-1}]/(f): empty for a two-dimensional
/// Newton polytope, the segment direction otherwise. NotIrreducible when f is
/// reducible, a unit or zero.
std::vector<Exponent> algebraic_monomial_directions(const LaurentPolynomial& f);

struct KrullVerdict {
  std::optional<int> dim;
  std::string justification;
};

/// Rank 2 only. UnitPolynomial when the quotient is the zero ring.
KrullVerdict krull_dimension_verdict(const LaurentPolynomial& f);
KrullVerdict krull_dimension_zero_ideal(int rank);

}  // namespace sigmaforge
