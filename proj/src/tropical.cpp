/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigmaforge/error.hpp"
#include "sigmaforge/polyhedra.hpp"

namespace sigmaforge {

namespace {

using I64 = std::int64_t;
using RVec = std::vector<Rational>;

void require_rank(int rank) {
  if (rank < 1 || rank > 2) throw Error(Errc::UnsupportedRank, "rank " + std::to_string(rank) + " (only s <= 2)");
}

RVec to_rvec(const Exponent& e) {
  RVec r;
  for (auto v : e) r.emplace_back(static_cast<long>(v));
  return r;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec minus(const RVec& a, const RVec& b) {
  RVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Exponent primitive(Exponent e) {
  I64 g = 0;
  for (auto v : e) g = std::gcd(g, v < 0 ? -v : v);
  if (g > 1)
    for (auto& v : e) v /= g;
  return e;
}

// Primitive integer vector with the direction of a nonzero rational vector.
Exponent primitive_of(const RVec& v) {
  Integer den = 1;
  for (const auto& c : v) den = lcm(den, Integer(c.get_den()));
  Exponent e;
  for (const auto& c : v) {
    const Integer n = c.get_num() * (den / c.get_den());
    e.push_back(to_int64(n));
  }
  return primitive(e);
}

Exponent positive_first(Exponent e) {
  for (auto v : e) {
    if (v > 0) return e;
    if (v < 0) {
      for (auto& x : e) x = -x;
      return e;
    }
  }
  return e;
}

int cmp_rvec(const RVec& a, const RVec& b) {
  if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) return -1;
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) return 1;
  return 0;
}

std::string rvec_string(const RVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

std::string evec_string(const Exponent& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

// canonical line through the origin-free description normal . chi = offset
TropicalPiece make_line(Exponent normal, Rational offset) {
  normal = primitive(normal);
  if (positive_first(normal) != normal) {
    normal = positive_first(normal);
    offset = -offset;
  }
  RVec vertex(2, Rational(0));
  if (normal[1] != 0)
    vertex[1] = offset / Rational(static_cast<long>(normal[1]));
  else
    vertex[0] = offset / Rational(static_cast<long>(normal[0]));
  return TropicalPiece{PieceKind::Line, vertex, {positive_first({-normal[1], normal[0]})}, {}};
}

}  // namespace

std::string piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::Point: return "point";
    case PieceKind::Ray: return "ray";
    case PieceKind::Segment: return "segment";
    case PieceKind::Line: return "line";
    case PieceKind::FullSpace: return "full-space";
  }
  return "?";
}

int TropicalPiece::dimension() const {
  switch (kind) {
    case PieceKind::Point: return 0;
    case PieceKind::FullSpace: return static_cast<int>(vertex.size());
    default: return 1;
  }
}

bool TropicalPiece::operator==(const TropicalPiece& o) const {
  return kind == o.kind && vertex == o.vertex && generators == o.generators && end == o.end;
}

bool operator<(const TropicalPiece& a, const TropicalPiece& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (int c = cmp_rvec(a.vertex, b.vertex)) return c < 0;
  if (a.generators != b.generators) return a.generators < b.generators;
  return cmp_rvec(a.end, b.end) < 0;
}

bool TropicalComplex::is_full_space() const {
  return std::any_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.kind == PieceKind::FullSpace; });
}

TropicalComplex full_space_complex(int rank, const CoefficientValuation& v) {
  require_rank(rank);
  return TropicalComplex{rank, v, {TropicalPiece{PieceKind::FullSpace, RVec(rank, Rational(0)), {}, {}}}, {}};
}

TropicalComplex corner_locus(int rank, const std::map<Exponent, Rational>& heights) {
  require_rank(rank);
  TropicalComplex out{rank, {}, {}, {}};
  if (heights.size() <= 1) {
    out.warnings.push_back("UnitPolynomialWarning: single-term support, the corner locus is empty");
    return out;
  }
  const auto sub = lower_hull_subdivision(heights);
  const LatticePolytope np = convex_hull([&] {
    std::vector<Exponent> pts;
    for (const auto& [e, h] : heights) pts.push_back(e);
    return pts;
  }());

  if (rank == 1) {
    for (const auto& c : sub.cells) {
      const auto& a = c.vertices[0];
      const auto& b = c.vertices[1];
      const Rational chi = (heights.at(a) - heights.at(b)) / Rational(static_cast<long>(b[0] - a[0]));
      out.pieces.push_back(TropicalPiece{PieceKind::Point, {chi}, {}, {}});
    }
  } else if (np.dim == 1) {
    for (const auto& c : sub.cells) {
      const auto& a = c.vertices[0];
      const auto& b = c.vertices[1];
      const Exponent d = b - a;
      const I64 len = std::gcd(d[0] < 0 ? -d[0] : d[0], d[1] < 0 ? -d[1] : d[1]);
      // chi.(b - a) = h_a - h_b
      out.pieces.push_back(make_line(d, (heights.at(a) - heights.at(b)) / Rational(static_cast<long>(len))));
    }
  } else {
    // vertex dual to a cell: minus the gradient of its supporting plane
    std::vector<RVec> dual;
    for (const auto& c : sub.cells) {
      const auto& o = c.vertices[0];
      const auto& p = c.vertices[1];
      const auto& q = c.vertices[2];
      const Rational x1 = p[0] - o[0], y1 = p[1] - o[1], h1 = heights.at(p) - heights.at(o);
      const Rational x2 = q[0] - o[0], y2 = q[1] - o[1], h2 = heights.at(q) - heights.at(o);
      const Rational D = x1 * y2 - x2 * y1;
      dual.push_back({-(h1 * y2 - h2 * y1) / D, -(x1 * h2 - x2 * h1) / D});
    }
    std::map<std::pair<Exponent, Exponent>, std::vector<std::pair<std::size_t, Exponent>>> edges;
    for (std::size_t i = 0; i < sub.cells.size(); ++i) {
      const auto& v = sub.cells[i].vertices;
      for (std::size_t k = 0; k < v.size(); ++k) {
        const Exponent& a = v[k];
        const Exponent& b = v[(k + 1) % v.size()];
        const Exponent d = b - a;
        edges[std::minmax(a, b)].emplace_back(i, primitive({-d[1], d[0]}));
      }
    }
    for (const auto& [key, cells] : edges) {
      if (cells.size() == 2) {
        RVec u = dual[cells[0].first], w = dual[cells[1].first];
        if (cmp_rvec(w, u) < 0) std::swap(u, w);
        out.pieces.push_back(TropicalPiece{PieceKind::Segment, u, {primitive_of(minus(w, u))}, w});
      } else {
        out.pieces.push_back(TropicalPiece{PieceKind::Ray, dual[cells[0].first], {cells[0].second}, {}});
      }
    }
  }
  std::sort(out.pieces.begin(), out.pieces.end());
  return out;
}

std::map<Exponent, Rational> lift_heights(const LaurentPolynomial& f, const CoefficientValuation& v) {
  std::map<Exponent, Rational> heights;
  if (v.kind == CoefficientValuation::Kind::ResidueZero) {
    const ResiduePolynomial r = reduce_mod_p(f, v.prime);
    for (const auto& [e, c] : r.terms()) heights.emplace(e, Rational(0));
  } else {
    for (const auto& [e, c] : f.terms()) heights.emplace(e, Rational(static_cast<long>(v.height(c))));
  }
  return heights;
}

TropicalComplex corner_locus(const LaurentPolynomial& f, const CoefficientValuation& v) {
  require_rank(f.rank());
  if (f.is_zero()) return full_space_complex(f.rank(), v);
  const auto heights = lift_heights(f, v);
  if (heights.empty()) return full_space_complex(f.rank(), v);  // f vanishes mod p
  TropicalComplex c = corner_locus(f.rank(), heights);
  c.valuation = v;
  return c;
}

TropicalComplex corner_locus(const ResiduePolynomial& f) {
  require_rank(f.rank());
  const auto v = CoefficientValuation::residue_zero(f.prime());
  if (f.is_zero()) return full_space_complex(f.rank(), v);
  std::map<Exponent, Rational> heights;
  for (const auto& [e, c] : f.terms()) heights.emplace(e, Rational(0));
  TropicalComplex c = corner_locus(f.rank(), heights);
  c.valuation = v;
  return c;
}

bool min_attained_twice(const std::map<Exponent, Rational>& heights, const std::vector<Rational>& chi) {
  std::optional<Rational> best;
  int count = 0;
  for (const auto& [e, h] : heights) {
    const Rational val = dot(to_rvec(e), chi) + h;
    if (!best || val < *best) {
      best = val;
      count = 1;
    } else if (val == *best) {
      ++count;
    }
  }
  return count >= 2;
}

bool piece_contains(const TropicalPiece& piece, const RVec& chi) {
  if (piece.kind == PieceKind::FullSpace) return true;
  if (piece.kind == PieceKind::Point) return chi == piece.vertex;
  const RVec d = minus(chi, piece.vertex);
  const RVec g = piece.kind == PieceKind::Segment ? minus(piece.end, piece.vertex) : to_rvec(piece.generators[0]);
  if (d[0] * g[1] - d[1] * g[0] != 0) return false;
  const Rational t = dot(d, g);
  switch (piece.kind) {
    case PieceKind::Line: return true;
    case PieceKind::Ray: return t >= 0;
    default: return t >= 0 && t <= dot(g, g);
  }
}

bool complex_contains(const TropicalComplex& c, const RVec& chi) {
  return std::any_of(c.pieces.begin(), c.pieces.end(), [&](const auto& p) { return piece_contains(p, chi); });
}

bool LineInterval::operator==(const LineInterval& o) const {
  return normal == o.normal && offset == o.offset && lo == o.lo && hi == o.hi;
}

bool CanonicalComplex::operator==(const CanonicalComplex& o) const {
  return full == o.full && points == o.points && intervals == o.intervals;
}

CanonicalComplex canonical_form(const std::vector<TropicalPiece>& pieces, int rank) {
  CanonicalComplex out;
  if (std::any_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.kind == PieceKind::FullSpace; })) {
    out.full = true;
    return out;
  }
  std::map<std::pair<Exponent, std::string>, std::vector<LineInterval>> lines;
  for (const auto& p : pieces) {
    if (p.kind == PieceKind::Point || rank == 1) {
      out.points.push_back(p.vertex);
      continue;
    }
    const Exponent g = p.kind == PieceKind::Segment ? primitive_of(minus(p.end, p.vertex)) : p.generators[0];
    const Exponent n = positive_first({g[1], -g[0]});
    const RVec w{Rational(static_cast<long>(-n[1])), Rational(static_cast<long>(n[0]))};
    LineInterval li{n, dot(to_rvec(n), p.vertex), {}, {}};
    const Rational t0 = dot(w, p.vertex);
    if (p.kind == PieceKind::Segment) {
      const Rational t1 = dot(w, p.end);
      li.lo = std::min(t0, t1);
      li.hi = std::max(t0, t1);
    } else if (p.kind == PieceKind::Ray) {
      if (dot(w, to_rvec(g)) > 0)
        li.lo = t0;
      else
        li.hi = t0;
    }
    lines[{n, li.offset.get_str()}].push_back(li);
  }
  std::sort(out.points.begin(), out.points.end(), [](const RVec& a, const RVec& b) { return cmp_rvec(a, b) < 0; });
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  for (auto& [key, ivs] : lines) {
    std::sort(ivs.begin(), ivs.end(), [](const LineInterval& a, const LineInterval& b) {
      if (!a.lo || !b.lo) return !a.lo && b.lo;
      return *a.lo < *b.lo;
    });
    LineInterval cur = ivs[0];
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      const auto& nx = ivs[i];
      if (!cur.hi || (nx.lo && *nx.lo <= *cur.hi) || !nx.lo) {
        if (cur.hi && (!nx.hi || *nx.hi > *cur.hi)) cur.hi = nx.hi;
      } else {
        out.intervals.push_back(cur);
        cur = nx;
      }
    }
    out.intervals.push_back(cur);
  }
  std::sort(out.intervals.begin(), out.intervals.end(), [](const LineInterval& a, const LineInterval& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    if (a.offset != b.offset) return a.offset < b.offset;
    if (!a.lo || !b.lo) return !a.lo && b.lo;
    return *a.lo < *b.lo;
  });
  return out;
}

bool same_point_set(const TropicalComplex& a, const TropicalComplex& b) {
  return a.rank == b.rank && canonical_form(a.pieces, a.rank) == canonical_form(b.pieces, b.rank);
}

TropicalComplex union_of(const std::vector<TropicalComplex>& parts, int rank) {
  TropicalComplex out{rank, parts.empty() ? CoefficientValuation{} : parts[0].valuation, {}, {}};
  for (const auto& c : parts) {
    out.pieces.insert(out.pieces.end(), c.pieces.begin(), c.pieces.end());
    out.warnings.insert(out.warnings.end(), c.warnings.begin(), c.warnings.end());
  }
  std::sort(out.pieces.begin(), out.pieces.end());
  out.pieces.erase(std::unique(out.pieces.begin(), out.pieces.end()), out.pieces.end());
  return out;
}

std::string to_string(const TropicalPiece& p) {
  switch (p.kind) {
    case PieceKind::Point: return "point " + rvec_string(p.vertex);
    case PieceKind::Ray: return "ray from " + rvec_string(p.vertex) + " along " + evec_string(p.generators[0]);
    case PieceKind::Segment: return "segment " + rvec_string(p.vertex) + " -- " + rvec_string(p.end);
    case PieceKind::Line: return "line through " + rvec_string(p.vertex) + " along " + evec_string(p.generators[0]);
    case PieceKind::FullSpace: return "full space";
  }
  return "?";
}

}  // namespace sigmaforge
