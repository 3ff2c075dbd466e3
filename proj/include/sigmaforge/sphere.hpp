/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "sigmaforge/tropical.hpp"

namespace sigmaforge {

/// A point of the character sphere: a primitive integer vector.
using Direction = Exponent;

/// Primitive direction of a nonzero rational vector. ZeroArgument for 0.
Direction direction_of(const std::vector<Rational>& v);
Direction direction_of(const Exponent& v);

/// Total order by angle in (-pi, pi]: lower half-plane first, then the
/// positive x-axis, the upper half-plane and the negative x-axis.
bool angle_less(const Direction& a, const Direction& b);

/// Closed counterclockwise arc from `start` to `end`, start != end.
struct Arc {
  Direction start, end;
  bool operator==(const Arc&) const = default;
};

/// Closed subset of S^{s-1}, s in {1, 2}: isolated points plus closed arcs,
/// or the whole sphere.
struct SphericalSet {
  int rank = 2;
  bool whole = false;
  std::vector<Direction> points;
  std::vector<Arc> arcs;

  bool operator==(const SphericalSet&) const = default;
};

SphericalSet whole_sphere(int rank);

/// Merge overlapping and adjacent arcs, absorb points lying on arcs, detect
/// full coverage, and sort everything by angle. Idempotent.
SphericalSet normalize(const SphericalSet& s);

bool contains(const SphericalSet& s, const Direction& d);

/// Closure of the set of directions of the nonzero points of a complex.
SphericalSet project(const TropicalComplex& c);
SphericalSet united(const std::vector<SphericalSet>& parts, int rank);

/// True iff S and -S are disjoint.
bool two_tame(const SphericalSet& s);

/// Arc endpoints and isolated points of the normalized set, sorted by angle.
/// WholeSphere when s covers the sphere.
std::vector<Direction> boundary_points(const SphericalSet& s);

/// Antipodal pairs (d, -d) with both in S, d from the canonical critical set.
std::vector<Direction> antipodal_witnesses(const SphericalSet& s);

struct SphereDiagnostics {
  bool great_circle = false;
  bool spans = false;
};

/// Rank 2 only (UnsupportedRank otherwise).
SphereDiagnostics sphere_diagnostics(const SphericalSet& s);

std::string to_string(const Direction& d);
std::string to_string(const SphericalSet& s);

}  // namespace sigmaforge
