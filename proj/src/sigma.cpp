/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/sigma.hpp"

#include <algorithm>
#include <set>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

namespace {

void require_rank(int rank) {
  if (rank < 1 || rank > 2) throw Error(Errc::UnsupportedRank, "rank " + std::to_string(rank) + " (only s <= 2)");
}

Rational dot(const Exponent& e, const std::vector<Rational>& chi) {
  Rational s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += Rational(static_cast<long>(e[i])) * chi[i];
  return s;
}

// Is min_e (r * chi.e + h_e) attained twice for some r > 0? The minimum can
// only switch or tie where two of the affine functions of r meet.
bool some_positive_multiple(const std::map<Exponent, Rational>& heights, const std::vector<Rational>& chi) {
  std::vector<std::pair<Rational, Rational>> lines;  // slope, intercept
  for (const auto& [e, h] : heights) lines.emplace_back(dot(e, chi), h);
  std::set<Rational> rs;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [si, hi] = lines[i];
      const auto& [sj, hj] = lines[j];
      if (si != sj) {
        const Rational r = (hj - hi) / (si - sj);
        if (r > 0) rs.insert(r);
      } else if (hi == hj) {
        rs.insert(Rational(1));
      }
    }
  for (const auto& r : rs) {
    std::vector<Rational> scaled;
    for (const auto& c : chi) scaled.push_back(r * c);
    if (min_attained_twice(heights, scaled)) return true;
  }
  return false;
}

}  // namespace

std::vector<TropicalComplex> residue_branches(const LaurentPolynomial& f, std::int64_t p, const FactorLimits& limits) {
  require_rank(f.rank());
  const ResiduePolynomial g = reduce_mod_p(f, p);
  if (g.is_zero()) throw Error(Errc::ZeroResidue, "f vanishes mod " + std::to_string(p));
  const auto fac = factor_residue(g, limits);
  if (!fac.complete)
    throw Error(Errc::FactorizationIncomplete, "mod " + std::to_string(p) + ": " + fac.reason);
  std::vector<TropicalComplex> out;
  for (const auto& h : fac.factors) out.push_back(corner_locus(h));
  return out;
}

std::vector<std::int64_t> candidate_primes(const LaurentPolynomial& f) {
  std::set<std::int64_t> ps;
  for (const auto& [e, c] : f.terms())
    if (abs(c) > 1)
      for (auto p : prime_divisors(c)) ps.insert(p);
  return {ps.begin(), ps.end()};
}

std::vector<std::int64_t> exceptional_primes(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "exceptional primes of 0");
  require_rank(f.rank());
  const auto zero = corner_locus(f, CoefficientValuation::zero());
  std::vector<std::int64_t> out;
  for (auto p : candidate_primes(f)) {
    if (!same_point_set(corner_locus(f, CoefficientValuation::padic(p)), zero) ||
        !same_point_set(corner_locus(f, CoefficientValuation::residue_zero(p)), zero))
      out.push_back(p);
  }
  return out;
}

namespace {

void fill_diagnostics(SigmaReport& r) {
  r.sigma_complement = normalize(r.sigma_complement);
  r.antipodal = antipodal_witnesses(r.sigma_complement);
  r.two_tame = r.antipodal.empty();
  if (!r.sigma_complement.whole) r.boundary = boundary_points(r.sigma_complement);
  if (r.rank == 2) {
    const auto d = sphere_diagnostics(r.sigma_complement);
    r.great_circle = d.great_circle;
    r.spans = d.spans;
  } else {
    r.spans = r.sigma_complement.whole || !r.sigma_complement.points.empty();
  }
}

}  // namespace

SigmaReport sigma_complement(const LaurentPolynomial& f) {
  require_rank(f.rank());
  if (f.is_zero()) return sigma_complement_zero_ideal(f.rank());
  SigmaReport r;
  r.rank = f.rank();
  r.exceptional_primes = exceptional_primes(f);
  r.per_valuation.emplace(CoefficientValuation::zero(), corner_locus(f, CoefficientValuation::zero()));
  for (auto p : r.exceptional_primes) {
    r.per_valuation.emplace(CoefficientValuation::padic(p), corner_locus(f, CoefficientValuation::padic(p)));
    r.per_valuation.emplace(CoefficientValuation::residue_zero(p),
                            corner_locus(f, CoefficientValuation::residue_zero(p)));
  }
  std::vector<SphericalSet> parts;
  for (const auto& [v, c] : r.per_valuation) {
    parts.push_back(project(c));
    for (const auto& w : c.warnings)
      if (std::find(r.warnings.begin(), r.warnings.end(), w) == r.warnings.end()) r.warnings.push_back(w);
  }
  r.sigma_complement = united(parts, r.rank);
  fill_diagnostics(r);
  return r;
}

SigmaReport sigma_complement_zero_ideal(int rank) {
  require_rank(rank);
  SigmaReport r;
  r.rank = rank;
  r.per_valuation.emplace(CoefficientValuation::zero(), full_space_complex(rank));
  r.sigma_complement = whole_sphere(rank);
  fill_diagnostics(r);
  return r;
}

bool membership(const LaurentPolynomial& f, const Character& chi) {
  require_rank(f.rank());
  if (f.is_zero()) return true;
  if (some_positive_multiple(lift_heights(f, CoefficientValuation::zero()), chi.coords)) return true;
  for (auto p : candidate_primes(f)) {
    if (some_positive_multiple(lift_heights(f, CoefficientValuation::padic(p)), chi.coords)) return true;
    const auto residue = lift_heights(f, CoefficientValuation::residue_zero(p));
    if (residue.empty()) return true;  // p divides the content
    if (some_positive_multiple(residue, chi.coords)) return true;
  }
  return false;
}

}  // namespace sigmaforge
