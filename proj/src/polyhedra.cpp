/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

namespace {

using I64 = std::int64_t;

Integer cross(const Exponent& o, const Exponent& a, const Exponent& b) {
  return Integer(static_cast<long>(a[0] - o[0])) * Integer(static_cast<long>(b[1] - o[1])) -
         Integer(static_cast<long>(a[1] - o[1])) * Integer(static_cast<long>(b[0] - o[0]));
}

void require_rank(int rank) {
  if (rank < 1 || rank > 2) throw Error(Errc::UnsupportedRank, "rank " + std::to_string(rank) + " (only s <= 2)");
}

// Counterclockwise polygon starting at the lexicographically smallest vertex.
LatticePolytope canonical_polygon(std::vector<Exponent> ccw) {
  auto it = std::min_element(ccw.begin(), ccw.end());
  std::rotate(ccw.begin(), it, ccw.end());
  return LatticePolytope{2, 2, std::move(ccw)};
}

I64 gcd64(I64 a, I64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

LatticePolytope convex_hull(const std::vector<Exponent>& input) {
  if (input.empty()) throw Error(Errc::ZeroPolynomial, "convex hull of empty set");
  const int rank = static_cast<int>(input.front().size());
  require_rank(rank);
  std::vector<Exponent> pts = input;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return LatticePolytope{rank, 0, {pts[0]}};
  if (rank == 1) return LatticePolytope{1, 1, {pts.front(), pts.back()}};

  const bool collinear = std::all_of(pts.begin(), pts.end(),
                                     [&](const Exponent& q) { return cross(pts.front(), pts.back(), q) == 0; });
  if (collinear) return LatticePolytope{2, 1, {pts.front(), pts.back()}};

  std::vector<Exponent> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& q : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return canonical_polygon(std::move(hull));
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "Newton polytope of 0");
  require_rank(f.rank());
  return convex_hull(f.support());
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  std::vector<Exponent> pts;
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) pts.push_back(u + v);
  return convex_hull(pts);
}

LatticePolytope translated(const LatticePolytope& p, const Exponent& by) {
  LatticePolytope r = p;
  for (auto& v : r.vertices) v = v + by;
  return r;
}

Integer twice_area(const LatticePolytope& p) {
  if (p.dim < 2) return 0;
  Integer a = 0;
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& u = v[i];
    const auto& w = v[(i + 1) % v.size()];
    a += Integer(static_cast<long>(u[0])) * static_cast<long>(w[1]) -
         Integer(static_cast<long>(w[0])) * static_cast<long>(u[1]);
  }
  return abs(a);
}

Integer lattice_point_count(const LatticePolytope& p) {
  if (p.dim == 0) return 1;
  if (p.dim == 1) {
    const Exponent d = p.vertices[1] - p.vertices[0];
    I64 g = 0;
    for (auto c : d) g = gcd64(g, c);
    return g + 1;
  }
  Integer boundary = 0;
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Exponent d = v[(i + 1) % v.size()] - v[i];
    boundary += gcd64(d[0], d[1]);
  }
  // Pick: 2A = 2I + B - 2, total = I + B.
  return (twice_area(p) + boundary + 2) / 2;
}

bool contains(const LatticePolytope& p, const Exponent& q) {
  if (p.dim == 0) return q == p.vertices[0];
  if (p.rank == 1) return p.vertices[0][0] <= q[0] && q[0] <= p.vertices[1][0];
  if (p.dim == 1) {
    const auto& a = p.vertices[0];
    const auto& b = p.vertices[1];
    if (cross(a, b, q) != 0) return false;
    return std::min(a, b) <= q && q <= std::max(a, b);
  }
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], q) < 0) return false;
  return true;
}

std::vector<Exponent> lattice_points(const LatticePolytope& p) {
  std::vector<Exponent> out;
  Exponent lo = p.vertices[0], hi = lo;
  for (const auto& v : p.vertices)
    for (int i = 0; i < p.rank; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  if (p.rank == 1) {
    for (I64 a = lo[0]; a <= hi[0]; ++a) out.push_back({a});
    return out;
  }
  for (I64 a = lo[0]; a <= hi[0]; ++a)
    for (I64 b = lo[1]; b <= hi[1]; ++b)
      if (contains(p, {a, b})) out.push_back({a, b});
  return out;
}

// ---------------------------------------------------------------------------
// lower hulls

namespace {

// Lower hull of (t, h) points, t strictly increasing after sorting; returns
// indices of the hull vertices (collinear interior points dropped).
std::vector<std::size_t> lower_chain(const std::vector<std::pair<Rational, Rational>>& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a] < pts[b]; });
  std::vector<std::size_t> chain;
  for (auto idx : order) {
    if (!chain.empty() && pts[chain.back()].first == pts[idx].first) continue;  // keep lowest h per t
    while (chain.size() >= 2) {
      const auto& o = pts[chain[chain.size() - 2]];
      const auto& a = pts[chain.back()];
      const auto& b = pts[idx];
      const Rational cr = (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
      if (cr <= 0)
        chain.pop_back();
      else
        break;
    }
    chain.push_back(idx);
  }
  return chain;
}

LiftedSubdivision one_dimensional(const std::map<Exponent, Rational>& heights, const Exponent& base,
                                  const Exponent& dir) {
  std::vector<Exponent> pts;
  std::vector<std::pair<Rational, Rational>> th;
  for (const auto& [e, h] : heights) {
    const Exponent d = e - base;
    Rational t = 0;
    for (std::size_t i = 0; i < d.size(); ++i) t += Rational(static_cast<long>(d[i] * dir[i]));
    pts.push_back(e);
    th.emplace_back(t, h);
  }
  LiftedSubdivision out{{}, heights};
  const auto chain = lower_chain(th);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    out.cells.push_back(convex_hull({pts[chain[i]], pts[chain[i + 1]]}));
  return out;
}

}  // namespace

LiftedSubdivision lower_hull_subdivision(const std::map<Exponent, Rational>& heights) {
  if (heights.empty()) throw Error(Errc::ZeroPolynomial, "empty support");
  const int rank = static_cast<int>(heights.begin()->first.size());
  require_rank(rank);
  std::vector<Exponent> pts;
  for (const auto& [e, h] : heights) pts.push_back(e);
  const LatticePolytope np = convex_hull(pts);
  if (np.dim == 0) return LiftedSubdivision{{np}, heights};
  if (np.dim == 1) {
    Exponent dir = np.vertices[1] - np.vertices[0];
    return one_dimensional(heights, np.vertices[0], dir);
  }

  // Rank 2 with a full-dimensional polygon: every lower face is spanned by
  // three lifted points with non-collinear projections whose plane lies
  // weakly below all the others.
  std::set<LatticePolytope> cells;
  std::vector<Rational> h;
  for (const auto& e : pts) h.push_back(heights.at(e));
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Integer det = cross(pts[i], pts[j], pts[k]);
        if (det == 0) continue;
        // plane h = a*x + b*y + c through the three lifted points (Cramer)
        const Rational x1 = pts[j][0] - pts[i][0], y1 = pts[j][1] - pts[i][1], h1 = h[j] - h[i];
        const Rational x2 = pts[k][0] - pts[i][0], y2 = pts[k][1] - pts[i][1], h2 = h[k] - h[i];
        const Rational D = x1 * y2 - x2 * y1;
        const Rational a = (h1 * y2 - h2 * y1) / D;
        const Rational b = (x1 * h2 - x2 * h1) / D;
        std::vector<Exponent> face;
        bool lower = true;
        for (std::size_t m = 0; m < n && lower; ++m) {
          const Rational plane = h[i] + a * (pts[m][0] - pts[i][0]) + b * (pts[m][1] - pts[i][1]);
          if (h[m] < plane)
            lower = false;
          else if (h[m] == plane)
            face.push_back(pts[m]);
        }
        if (lower) cells.insert(convex_hull(face));
      }
  return LiftedSubdivision{{cells.begin(), cells.end()}, heights};
}

LiftedSubdivision regular_subdivision(const LaurentPolynomial& f, const CoefficientValuation& v) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "subdivision of 0");
  require_rank(f.rank());
  if (v.kind == CoefficientValuation::Kind::ResidueZero)
    throw Error(Errc::InvalidArgument, "regular_subdivision takes Zero or PAdic valuations");
  std::map<Exponent, Rational> heights;
  for (const auto& [e, c] : f.terms()) heights.emplace(e, Rational(static_cast<long>(v.height(c))));
  return lower_hull_subdivision(heights);
}

// ---------------------------------------------------------------------------
// Minkowski summands

namespace {

struct Edge {
  Exponent dir;  // primitive
  I64 length;    // lattice length
};

std::vector<Edge> edges_of(const LatticePolytope& p) {
  std::vector<Edge> out;
  const auto& v = p.vertices;
  const std::size_t m = p.dim == 1 ? 2 : v.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Exponent d = v[(i + 1) % v.size()] - v[i];
    I64 g = 0;
    for (auto c : d) g = gcd64(g, c);
    Exponent prim = d;
    for (auto& c : prim) c /= g;
    out.push_back({prim, g});
  }
  return out;
}

LatticePolytope from_edge_walk(const std::vector<Edge>& edges, const std::vector<I64>& k, int rank) {
  std::vector<Exponent> pts{Exponent(rank, 0)};
  Exponent cur(rank, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (int c = 0; c < rank; ++c) cur[c] += k[i] * edges[i].dir[c];
    pts.push_back(cur);
  }
  return convex_hull(pts);
}

Exponent lex_min_vertex(const LatticePolytope& p) { return *std::min_element(p.vertices.begin(), p.vertices.end()); }

}  // namespace

std::vector<SummandPair> minkowski_summand_pairs(const LatticePolytope& p, std::size_t max_lattice_points) {
  require_rank(p.rank);
  if (lattice_point_count(p) > static_cast<long>(max_lattice_points))
    throw Error(Errc::TooLarge, "polytope has more than " + std::to_string(max_lattice_points) + " lattice points");
  const Exponent origin(p.rank, 0);
  const Exponent base = lex_min_vertex(p);
  if (p.dim == 0) return {{LatticePolytope{p.rank, 0, {origin}}, p}};

  const auto edges = edges_of(p);
  std::set<SummandPair> seen;
  std::vector<SummandPair> out;
  std::vector<I64> k(edges.size(), 0);
  // odometer over k_i in [0, length_i]
  for (;;) {
    Exponent sum(p.rank, 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (int c = 0; c < p.rank; ++c) sum[c] += k[i] * edges[i].dir[c];
    if (sum == origin) {
      std::vector<I64> rest(edges.size());
      for (std::size_t i = 0; i < edges.size(); ++i) rest[i] = edges[i].length - k[i];
      LatticePolytope a = from_edge_walk(edges, k, p.rank);
      LatticePolytope b = from_edge_walk(edges, rest, p.rank);
      a = translated(a, origin - lex_min_vertex(a));
      b = translated(b, origin - lex_min_vertex(b));
      // unordered: keep the smaller summand first
      if (b < a) std::swap(a, b);
      if (seen.insert({a, b}).second) out.push_back({a, translated(b, base)});
    }
    std::size_t i = 0;
    while (i < k.size() && k[i] == edges[i].length) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }
  return out;
}

}  // namespace sigmaforge
