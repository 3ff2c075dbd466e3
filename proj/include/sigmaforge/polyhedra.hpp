/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sigmaforge/laurent.hpp"

namespace sigmaforge {

/// Convex lattice polytope in Z^s, s <= 2, stored by its extreme points only.
/// In rank 2 a polygon lists its vertices counterclockwise starting from the
/// lexicographically smallest; a segment lists its two endpoints in
/// lexicographic order.
struct LatticePolytope {
  int rank = 2;
  int dim = 0;
  std::vector<Exponent> vertices;

  bool operator==(const LatticePolytope&) const = default;
  auto operator<=>(const LatticePolytope&) const = default;
};

/// Exact convex hull of a nonempty point set (Andrew's monotone chain in rank
/// 2). UnsupportedRank for s >= 3.
LatticePolytope convex_hull(const std::vector<Exponent>& points);

LatticePolytope newton_polytope(const LaurentPolynomial& f);
LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope translated(const LatticePolytope& p, const Exponent& by);

/// Twice the Euclidean area (0 unless dim = 2).
Integer twice_area(const LatticePolytope& p);
/// Number of lattice points (Pick's formula for polygons).
Integer lattice_point_count(const LatticePolytope& p);
std::vector<Exponent> lattice_points(const LatticePolytope& p);
bool contains(const LatticePolytope& p, const Exponent& point);

/// Regular subdivision induced by lifting each support point to a height.
struct LiftedSubdivision {
  std::vector<LatticePolytope> cells;
  std::map<Exponent, Rational> heights;
};

/// Projection of the lower faces of {(e, h_e)}.
LiftedSubdivision lower_hull_subdivision(const std::map<Exponent, Rational>& heights);

/// Heights are v(coefficient); the Zero valuation yields a single cell.
/// Accepts Zero and PAdic valuations only.
LiftedSubdivision regular_subdivision(const LaurentPolynomial& f, const CoefficientValuation& v);

using SummandPair = std::pair<LatticePolytope, LatticePolytope>;

/// All unordered pairs (P1, P2) of lattice polytopes with P1 + P2 = P, the
/// first summand translated so its lexicographically smallest vertex is the
/// origin. Enumerated by splitting every edge vector of P between the two
/// summands. TooLarge when P has more than `max_lattice_points` points.
std::vector<SummandPair> minkowski_summand_pairs(const LatticePolytope& p, std::size_t max_lattice_points = 64);

}  // namespace sigmaforge
