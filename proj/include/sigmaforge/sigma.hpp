/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigmaforge/ring_checks.hpp"
#include "sigmaforge/sphere.hpp"
#include "sigmaforge/tropical.hpp"

namespace sigmaforge {

/// Corner locus of every irreducible factor of f mod p under ResidueZero(p).
/// ZeroResidue when p | content(f); FactorizationIncomplete when the bounded
/// factorizer gives up.
std::vector<TropicalComplex> residue_branches(const LaurentPolynomial& f, std::int64_t p,
                                              const FactorLimits& limits = {});

/// Primes dividing some coefficient of f, the only candidates for exceptional primes.
std::vector<std::int64_t> candidate_primes(const LaurentPolynomial& f);

/// Candidates p whose p-adic or residue corner locus differs from the Zero
/// locus as a point set. The residue locus is the corner locus of f mod p,
/// which equals the union of the residue branches.
std::vector<std::int64_t> exceptional_primes(const LaurentPolynomial& f);

struct SigmaReport {
  int rank = 2;
  SphericalSet sigma_complement;
  std::map<CoefficientValuation, TropicalComplex> per_valuation;
  std::vector<std::int64_t> exceptional_primes;
  bool two_tame = false;
  std::vector<Direction> antipodal;  // witnesses d with d and -d in the set
  std::vector<Direction> boundary;   // empty for the whole sphere
  bool great_circle = false;         // rank 2 only
  bool spans = false;
  std::vector<std::string> warnings;
};

/// Sigma^c of Z[x^{+-1}]/(f) over the Zero valuation, p-adic valuations of
/// the exceptional primes, and their residue cases. UnsupportedRank for s >= 3.
SigmaReport sigma_complement(const LaurentPolynomial& f);
/// The zero ideal: Sigma^c is the whole sphere.
SigmaReport sigma_complement_zero_ideal(int rank);

/// Independent oracle: whether the direction of chi lies in Sigma^c,
/// decided from the min-attained-twice predicate along the ray r * chi,
/// r > 0, for every relevant valuation, without building any complex.
bool membership(const LaurentPolynomial& f, const Character& chi);

}  // namespace sigmaforge
