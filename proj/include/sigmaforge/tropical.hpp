/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigmaforge/laurent.hpp"

namespace sigmaforge {

/// Real character of Z^s given by its exact values on the generators.
struct Character {
  std::vector<Rational> coords;
};

enum class PieceKind { Point, Ray, Segment, Line, FullSpace };

std::string piece_kind_name(PieceKind k);

/// One cell of a corner locus.
///   Point:     {vertex}
///   Ray:       vertex + t * generators[0], t >= 0
///   Segment:   conv(vertex, end)
///   Line:      vertex + t * generators[0], t real
///   FullSpace: all of R^s
/// Generators are primitive integer vectors.
struct TropicalPiece {
  PieceKind kind = PieceKind::Point;
  std::vector<Rational> vertex;
  std::vector<Exponent> generators;
  std::vector<Rational> end;

  int dimension() const;
  bool operator==(const TropicalPiece& o) const;
};

bool operator<(const TropicalPiece& a, const TropicalPiece& b);

/// The set of characters at which the lifted minimum min_e (chi.e + h_e) is
/// attained at least twice, as a finite union of pieces.
struct TropicalComplex {
  int rank = 2;
  CoefficientValuation valuation;
  std::vector<TropicalPiece> pieces;
  std::vector<std::string> warnings;

  bool is_full_space() const;
};

/// Corner locus of the lift e -> (e, h_e). Pieces are dual to the cells of
/// the regular subdivision: rank 1 gives points, a segment Newton polytope
/// gives parallel lines, a polygon gives segments (interior edges) and rays
/// (boundary edges). A single-term support yields the empty complex with a
/// warning.
TropicalComplex corner_locus(int rank, const std::map<Exponent, Rational>& heights);

/// Heights v(coeff); ResidueZero(p) uses the support of f mod p with zero
/// heights, and the full space when f vanishes mod p. UnsupportedRank for s >= 3.
TropicalComplex corner_locus(const LaurentPolynomial& f, const CoefficientValuation& v);
TropicalComplex corner_locus(const ResiduePolynomial& f);

TropicalComplex full_space_complex(int rank, const CoefficientValuation& v = {});

/// Direct evaluation of the defining predicate at chi.
bool min_attained_twice(const std::map<Exponent, Rational>& heights, const std::vector<Rational>& chi);
std::map<Exponent, Rational> lift_heights(const LaurentPolynomial& f, const CoefficientValuation& v);

bool piece_contains(const TropicalPiece& piece, const std::vector<Rational>& chi);
bool complex_contains(const TropicalComplex& c, const std::vector<Rational>& chi);

/// Point-set normal form: one-dimensional pieces are grouped by their
/// supporting line and overlapping or touching intervals are merged, so two
/// complexes cover the same set iff their normal forms are equal.
struct LineInterval {
  Exponent normal;  // primitive, first nonzero entry positive
  Rational offset;  // normal . chi = offset
  std::optional<Rational> lo, hi;  // range of rot90(normal) . chi; nullopt is unbounded
  bool operator==(const LineInterval& o) const;
};

struct CanonicalComplex {
  bool full = false;
  std::vector<std::vector<Rational>> points;
  std::vector<LineInterval> intervals;
  bool operator==(const CanonicalComplex& o) const;
};

CanonicalComplex canonical_form(const std::vector<TropicalPiece>& pieces, int rank);
bool same_point_set(const TropicalComplex& a, const TropicalComplex& b);

/// Pieces of all inputs together (the union as a point set).
TropicalComplex union_of(const std::vector<TropicalComplex>& parts, int rank);

std::string to_string(const TropicalPiece& p);

}  // namespace sigmaforge
