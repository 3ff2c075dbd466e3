/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/sphere.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

namespace {

using I64 = std::int64_t;

I64 cross(const Direction& a, const Direction& b) { return a[0] * b[1] - a[1] * b[0]; }
I64 dot(const Direction& a, const Direction& b) { return a[0] * b[0] + a[1] * b[1]; }
Direction neg(Direction d) {
  for (auto& v : d) v = -v;
  return d;
}

int angle_group(const Direction& d) {
  if (d.size() == 1) return d[0] > 0 ? 1 : 3;
  if (d[1] < 0) return 0;
  if (d[1] == 0) return d[0] > 0 ? 1 : 3;
  return 2;
}

bool angle_leq(const Direction& a, const Direction& b) { return !angle_less(b, a); }

bool in_arc(const Direction& d, const Arc& a) {
  if (angle_leq(a.start, a.end)) return angle_leq(a.start, d) && angle_leq(d, a.end);
  return angle_leq(a.start, d) || angle_leq(d, a.end);
}

// A direction strictly inside the open counterclockwise gap from a to b
// (a == b means the circle minus a).
Direction gap_representative(const Direction& a, const Direction& b) {
  if (a == b) return neg(a);
  const I64 c = cross(a, b);
  if (c > 0) return direction_of(Exponent{a[0] + b[0], a[1] + b[1]});
  if (c == 0) return Direction{-a[1], a[0]};
  return direction_of(Exponent{-(a[0] + b[0]), -(a[1] + b[1])});
}

void sort_by_angle(std::vector<Direction>& ds) {
  std::sort(ds.begin(), ds.end(), angle_less);
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
}

std::vector<Direction> critical_directions(const SphericalSet& s) {
  std::vector<Direction> crit = s.points;
  for (const auto& a : s.arcs) {
    crit.push_back(a.start);
    crit.push_back(a.end);
  }
  sort_by_angle(crit);
  return crit;
}

// Critical directions interleaved with one representative per open gap.
std::vector<Direction> sample_directions(std::vector<Direction> crit) {
  sort_by_angle(crit);
  std::vector<Direction> out;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    out.push_back(crit[i]);
    out.push_back(gap_representative(crit[i], crit[(i + 1) % crit.size()]));
  }
  return out;
}

}  // namespace

Direction direction_of(const Exponent& v) {
  I64 g = 0;
  for (auto c : v) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) throw Error(Errc::ZeroArgument, "direction of the zero vector");
  Direction d = v;
  for (auto& c : d) c /= g;
  return d;
}

Direction direction_of(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& c : v) den = lcm(den, Integer(c.get_den()));
  Exponent e;
  for (const auto& c : v) e.push_back(to_int64(c.get_num() * (den / c.get_den())));
  return direction_of(e);
}

bool angle_less(const Direction& a, const Direction& b) {
  const int ga = angle_group(a), gb = angle_group(b);
  if (ga != gb) return ga < gb;
  if (a.size() == 1) return false;
  return cross(a, b) > 0;
}

SphericalSet whole_sphere(int rank) { return SphericalSet{rank, true, {}, {}}; }

bool contains(const SphericalSet& s, const Direction& d) {
  if (s.whole) return true;
  if (std::find(s.points.begin(), s.points.end(), d) != s.points.end()) return true;
  return std::any_of(s.arcs.begin(), s.arcs.end(), [&](const Arc& a) { return in_arc(d, a); });
}

SphericalSet normalize(const SphericalSet& s) {
  if (s.whole) return whole_sphere(s.rank);
  if (s.rank == 1) {
    SphericalSet out{1, false, s.points, {}};
    sort_by_angle(out.points);
    if (out.points.size() == 2) return whole_sphere(1);
    return out;
  }
  const auto crit = critical_directions(s);
  SphericalSet out{2, false, {}, {}};
  if (crit.empty()) return out;
  const auto samples = sample_directions(crit);
  std::vector<bool> cov;
  for (const auto& d : samples) cov.push_back(contains(s, d));
  if (std::all_of(cov.begin(), cov.end(), [](bool b) { return b; })) return whole_sphere(2);

  const std::size_t n = samples.size();
  std::size_t start = 0;
  while (cov[start]) ++start;
  // walk once around from the first uncovered sample, cutting covered runs
  for (std::size_t k = 1; k <= n;) {
    const std::size_t i = (start + k) % n;
    if (!cov[i]) {
      ++k;
      continue;
    }
    std::size_t len = 0;
    while (k + len <= n && cov[(start + k + len) % n]) ++len;
    const Direction& first = samples[i];
    const Direction& last = samples[(start + k + len - 1) % n];
    if (len == 1)
      out.points.push_back(first);
    else
      out.arcs.push_back(Arc{first, last});
    k += len;
  }
  sort_by_angle(out.points);
  std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) { return angle_less(a.start, b.start); });
  return out;
}

SphericalSet project(const TropicalComplex& c) {
  SphericalSet out{c.rank, false, {}, {}};
  auto add_point = [&](const std::vector<Rational>& v) {
    if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return r != 0; })) out.points.push_back(direction_of(v));
  };
  auto add_short_arc = [&](const Direction& a, const Direction& b) {
    if (cross(a, b) > 0)
      out.arcs.push_back(Arc{a, b});
    else
      out.arcs.push_back(Arc{b, a});
  };
  for (const auto& p : c.pieces) {
    switch (p.kind) {
      case PieceKind::FullSpace: return whole_sphere(c.rank);
      case PieceKind::Point: add_point(p.vertex); break;
      case PieceKind::Ray: {
        const Direction& g = p.generators[0];
        const bool at_origin = std::all_of(p.vertex.begin(), p.vertex.end(), [](const Rational& r) { return r == 0; });
        if (at_origin) {
          out.points.push_back(g);
          break;
        }
        const Direction q = direction_of(p.vertex);
        if (cross(q, g) == 0) {
          out.points.push_back(g);
          if (dot(q, g) < 0) out.points.push_back(q);  // the ray passes through the origin
        } else {
          add_short_arc(q, g);
        }
        break;
      }
      case PieceKind::Segment: {
        add_point(p.vertex);
        add_point(p.end);
        const Rational cr = p.vertex[0] * p.end[1] - p.vertex[1] * p.end[0];
        if (cr != 0) add_short_arc(direction_of(p.vertex), direction_of(p.end));
        break;
      }
      case PieceKind::Line: {
        const Direction& g = p.generators[0];
        const Rational side = Rational(static_cast<long>(g[0])) * p.vertex[1] - Rational(static_cast<long>(g[1])) * p.vertex[0];
        if (side == 0) {
          out.points.push_back(g);
          out.points.push_back(neg(g));
        } else if (side > 0) {
          out.arcs.push_back(Arc{g, neg(g)});
        } else {
          out.arcs.push_back(Arc{neg(g), g});
        }
        break;
      }
    }
  }
  return normalize(out);
}

SphericalSet united(const std::vector<SphericalSet>& parts, int rank) {
  SphericalSet out{rank, false, {}, {}};
  for (const auto& s : parts) {
    out.whole = out.whole || s.whole;
    out.points.insert(out.points.end(), s.points.begin(), s.points.end());
    out.arcs.insert(out.arcs.end(), s.arcs.begin(), s.arcs.end());
  }
  return normalize(out);
}

std::vector<Direction> antipodal_witnesses(const SphericalSet& input) {
  const SphericalSet s = normalize(input);
  std::vector<Direction> out;
  if (s.rank == 1) {
    if (s.whole) out.push_back({1});
    return out;
  }
  if (s.whole) return {Direction{1, 0}};
  std::vector<Direction> crit = critical_directions(s);
  const std::size_t n = crit.size();
  for (std::size_t i = 0; i < n; ++i) crit.push_back(neg(crit[i]));
  if (crit.empty()) return out;
  for (const auto& d : sample_directions(crit))
    if (contains(s, d) && contains(s, neg(d))) out.push_back(d);
  sort_by_angle(out);
  return out;
}

bool two_tame(const SphericalSet& s) { return antipodal_witnesses(s).empty(); }

std::vector<Direction> boundary_points(const SphericalSet& input) {
  const SphericalSet s = normalize(input);
  if (s.whole) throw Error(Errc::WholeSphere, "the whole sphere has no boundary points");
  auto out = critical_directions(s);
  return out;
}

SphereDiagnostics sphere_diagnostics(const SphericalSet& input) {
  if (input.rank != 2) throw Error(Errc::UnsupportedRank, "sphere diagnostics need s = 2");
  const SphericalSet s = normalize(input);
  SphereDiagnostics d;
  d.great_circle = s.whole;
  d.spans = s.whole || !s.arcs.empty();
  for (std::size_t i = 0; i < s.points.size() && !d.spans; ++i)
    for (std::size_t j = i + 1; j < s.points.size(); ++j)
      if (cross(s.points[i], s.points[j]) != 0) d.spans = true;
  return d;
}

std::string to_string(const Direction& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i];
  os << ")";
  return os.str();
}

std::string to_string(const SphericalSet& s) {
  if (s.whole) return "whole sphere";
  std::ostringstream os;
  os << "points {";
  for (std::size_t i = 0; i < s.points.size(); ++i) os << (i ? ", " : "") << to_string(s.points[i]);
  os << "} arcs {";
  for (std::size_t i = 0; i < s.arcs.size(); ++i)
    os << (i ? ", " : "") << "[" << to_string(s.arcs[i].start) << " -> " << to_string(s.arcs[i].end) << "]";
  os << "}";
  return os.str();
}

}  // namespace sigmaforge
