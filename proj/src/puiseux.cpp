/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/puiseux.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <numeric>

#include "sigmaforge/error.hpp"
#include "sigmaforge/ring_checks.hpp"
#include "sigmaforge/zpoly.hpp"

namespace sigmaforge {

namespace {

// G(t, Y) keyed by (Y-degree, t-exponent)
using BiPoly = std::map<std::pair<std::int64_t, std::int64_t>, FieldElem>;

void add_to(BiPoly& g, std::int64_t i, std::int64_t e, const FieldElem& c) {
  auto [it, fresh] = g.try_emplace({i, e}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) g.erase(it);
  } else if (c.is_zero()) {
    g.erase(it);
  }
}

// (i, lowest t-exponent of the coefficient of Y^i)
std::vector<std::pair<std::int64_t, std::int64_t>> newton_points(const BiPoly& g) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const auto& [key, c] : g)
    if (pts.empty() || pts.back().first != key.first) pts.push_back(key);
  return pts;
}

struct Edge {
  std::pair<std::int64_t, std::int64_t> from, to;
  std::int64_t a, b;  // root valuation a/b in lowest terms
};

std::vector<Edge> lower_edges(const BiPoly& g) {
  const auto pts = newton_points(g);
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& q = hull.back();
      // drop q unless it lies strictly below the segment o-p
      if ((q.first - o.first) * (p.second - o.second) - (q.second - o.second) * (p.first - o.first) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    std::int64_t num = hull[k].second - hull[k + 1].second, den = hull[k + 1].first - hull[k].first;
    const std::int64_t g0 = std::gcd(num, den);
    edges.push_back({hull[k], hull[k + 1], num / g0, den / g0});
  }
  return edges;
}

struct Root {
  FieldPtr field;
  FieldElem c;
  int multiplier;
};

Rational binomial(std::int64_t n, std::int64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

LaurentPolynomial univariate(const ZPoly& z) {
  LaurentPolynomial f(1);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) f += LaurentPolynomial::monomial({static_cast<std::int64_t>(i)}, z[i]);
  return f;
}

ZPoly dense(const LaurentPolynomial& f) {
  const auto g = f.clear_monomial();
  ZPoly z(static_cast<std::size_t>(g.degree_in(0) + 1), 0);
  for (const auto& [e, c] : g.terms()) z[static_cast<std::size_t>(e[0])] = c;
  return primitive_part(z);
}

// Irreducible factors over Q of a squarefree polynomial with no rational root.
std::vector<ZPoly> irreducible_factors(const ZPoly& r) {
  if (degree(r) <= 0) return {};
  if (degree(r) <= 3) return {r};
  const auto st = irreducibility_status(univariate(r));
  if (st.verdict == IrreducibilityVerdict::Irreducible) return {r};
  if (st.verdict != IrreducibilityVerdict::Reducible)
    throw Error(Errc::ExtensionRequired, "characteristic polynomial could not be factored over Q");
  std::vector<ZPoly> out;
  for (const auto& w : st.factors)
    for (auto& q : irreducible_factors(dense(w))) out.push_back(std::move(q));
  return out;
}

// Removes every factor (den*u - num) of r from z; returns the multiplicity.
int strip_root(ZPoly& z, const Rational& r) {
  const ZPoly lin{-r.get_num(), r.get_den()};
  int k = 0;
  while (degree(z) >= 1 && evaluate(z, r) == 0) {
    z = exact_quotient(z, lin);
    ++k;
  }
  return k;
}

std::vector<Rational> binomial_minpoly(const Rational& u, std::int64_t b) {
  std::vector<Rational> m(static_cast<std::size_t>(b + 1), Rational(0));
  m[0] = -u;
  m.back() = 1;
  return m;
}

// Nonzero roots c of psi(c^b) = 0 over Q, one per orbit under
// c -> zeta_b c and Galois conjugation.
std::vector<Root> roots_over_q(const std::vector<Rational>& psi, std::int64_t b) {
  ZPoly rest = from_rationals(psi);
  const auto rational = rational_roots(rest);
  for (const auto& r : rational) strip_root(rest, r);
  if (degree(rest) > 0) rest = exact_quotient(rest, gcd_z(rest, derivative(rest)));
  const auto q = NumberField::rationals();
  std::vector<Root> out;
  for (const auto& u : rational) {
    Rational c;
    if (b == 1)
      out.push_back({q, FieldElem(u), 1});
    else if (rational_root_of(u, static_cast<unsigned>(b), c))
      out.push_back({q, FieldElem(c), static_cast<int>(b)});
    else if (binomial_irreducible(u, static_cast<unsigned>(b))) {
      const auto k = NumberField::extension(binomial_minpoly(u, b));
      out.push_back({k, FieldElem::generator(k), static_cast<int>(b)});
    } else {
      throw Error(Errc::ExtensionRequired, "z^" + std::to_string(b) + " - " + u.get_str() + " splits without a root");
    }
  }
  for (const auto& f : irreducible_factors(rest)) {
    // c is a root of f(z^b)
    std::vector<Rational> m(static_cast<std::size_t>(degree(f) * b + 1), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i) m[i * static_cast<std::size_t>(b)] = Rational(f[i]);
    const auto k = NumberField::extension(m);
    out.push_back({k, FieldElem::generator(k), static_cast<int>(degree(f) * b)});
  }
  return out;
}

// Same over a field that is already an extension. Only roots that need no
// further extension are found.
std::vector<Root> roots_over_extension(const std::vector<FieldElem>& psi, std::int64_t b, const FieldPtr& field) {
  const std::int64_t n = static_cast<std::int64_t>(psi.size()) - 1;
  std::vector<FieldElem> us;
  // psi = lc (u - r)^n
  const FieldElem r = -psi[n - 1] / (psi[n] * FieldElem(Rational(n)));
  bool power = true;
  for (std::int64_t j = 0; j <= n && power; ++j)
    power = psi[j] == psi[n] * FieldElem(binomial(n, j)) * (-r).pow(n - j);
  if (power) {
    us.push_back(r);
  } else {
    std::vector<Rational> q;
    for (const auto& c : psi) {
      if (!c.is_rational()) throw Error(Errc::ExtensionRequired, "characteristic root needs a second extension");
      q.push_back(c.rational());
    }
    ZPoly z = from_rationals(q);
    int found = 0;
    for (const auto& u : rational_roots(z)) {
      found += strip_root(z, u);
      us.push_back(FieldElem(u));
    }
    if (found != n) throw Error(Errc::ExtensionRequired, "characteristic root needs a second extension");
  }
  std::vector<Root> out;
  for (const auto& u : us) {
    Rational c;
    if (b == 1)
      out.push_back({field, u, 1});
    else if (u.is_rational() && rational_root_of(u.rational(), static_cast<unsigned>(b), c))
      out.push_back({field, FieldElem(c), static_cast<int>(b)});
    else
      throw Error(Errc::ExtensionRequired, "ramified root needs a second extension");
  }
  return out;
}

struct State {
  BiPoly g;
  std::int64_t d = 1;
  FractionalSeries::Terms prefix;  // y = prefix + t^m Y
  std::int64_t m = 0;
  FieldPtr field = NumberField::rationals();
  int size = 1;
  int depth = 0;
};

State child(const State& s, const Edge& e, const Root& r) {
  State c;
  c.d = s.d * e.b;
  for (const auto& [k, v] : s.prefix) c.prefix.emplace(k * e.b, v);
  c.m = s.m * e.b + e.a;
  c.prefix.emplace(c.m, r.c);
  c.field = common_field(s.field, r.field);
  c.size = s.size * r.multiplier;
  c.depth = s.depth + 1;
  std::int64_t top = 0;
  for (const auto& [key, v] : s.g) top = std::max(top, key.first);
  std::vector<FieldElem> cpow{FieldElem(1)};
  for (std::int64_t i = 1; i <= top; ++i) cpow.push_back(cpow.back() * r.c);
  // G(t^b, t^a (c + Y))
  for (const auto& [key, v] : s.g) {
    const auto [i, e0] = key;
    const std::int64_t base = e.b * e0 + e.a * i;
    for (std::int64_t j = 0; j <= i; ++j) add_to(c.g, j, base, v * FieldElem(binomial(i, j)) * cpow[i - j]);
  }
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  for (const auto& [key, v] : c.g) low = std::min(low, key.second);
  BiPoly shifted;
  for (const auto& [key, v] : c.g) shifted.emplace(std::make_pair(key.first, key.second - low), v);
  c.g = std::move(shifted);
  return c;
}

PuiseuxBranch make_branch(const State& s, FractionalSeries::Terms terms, std::optional<std::int64_t> precision) {
  return {s.d, FractionalSeries(s.d, std::move(terms), precision), s.size};
}

// Unique root of positive valuation when G has a simple one: Y = sum y_j t^j.
PuiseuxBranch hensel(const State& s, int nterms) {
  const std::int64_t J = std::max(nterms, 1);
  std::int64_t n = 0;
  for (const auto& [key, v] : s.g) n = std::max(n, key.first);
  const FieldElem a10 = s.g.at({1, 0});
  // pw[i][k] = [t^k] Y^i
  std::vector<std::vector<FieldElem>> pw(static_cast<std::size_t>(n + 1),
                                         std::vector<FieldElem>(static_cast<std::size_t>(J + 1), FieldElem(0)));
  pw[0][0] = FieldElem(1);
  for (std::int64_t j = 1; j <= J; ++j) {
    for (std::int64_t i = 2; i <= n; ++i) {
      FieldElem acc(0);
      for (std::int64_t l = 1; l < j; ++l)
        if (!pw[1][l].is_zero() && !pw[i - 1][j - l].is_zero()) acc += pw[1][l] * pw[i - 1][j - l];
      pw[i][j] = acc;
    }
    FieldElem r(0);
    for (const auto& [key, v] : s.g) {
      const auto [i, e] = key;
      if (e > j || (i == 1 && e == 0)) continue;
      if (!pw[i][j - e].is_zero()) r += v * pw[i][j - e];
    }
    pw[1][j] = -r / a10;
  }
  FractionalSeries::Terms terms = s.prefix;
  std::map<std::int64_t, FieldElem> y;
  for (std::int64_t j = 1; j <= J; ++j)
    if (!pw[1][j].is_zero()) {
      terms.emplace(s.m + j, pw[1][j]);
      y.emplace(j, pw[1][j]);
    }
  // exact when the truncation already solves G(t, Y) = 0
  const FractionalSeries ys(1, y, std::nullopt);
  FractionalSeries total;
  std::vector<FractionalSeries> powers{FractionalSeries::constant(FieldElem(1))};
  for (std::int64_t i = 1; i <= n; ++i) powers.push_back(powers.back() * ys);
  for (const auto& [key, v] : s.g)
    total = total + (FractionalSeries::monomial(Rational(key.second), v) * powers[key.first]);
  if (total.is_zero()) return make_branch(s, std::move(terms), std::nullopt);
  return make_branch(s, std::move(terms), s.m + J + 1);
}

void expand(State s, bool first, int nterms, std::vector<PuiseuxBranch>& out) {
  if (s.depth > 64) throw Error(Errc::InvalidArgument, "expansion does not separate; F has a repeated factor");
  if (!first) {
    const auto pts = newton_points(s.g);
    if (pts.front().first > 0) {
      // Y = 0 is a root: the expansion terminates
      out.push_back(make_branch(s, s.prefix, std::nullopt));
      const std::int64_t i0 = pts.front().first;
      BiPoly h;
      for (const auto& [key, v] : s.g) h.emplace(std::make_pair(key.first - i0, key.second), v);
      s.g = std::move(h);
    } else if (pts.size() >= 2 && pts[0].second > 0 && pts[1] == std::make_pair<std::int64_t, std::int64_t>(1, 0)) {
      out.push_back(hensel(s, nterms));
      return;
    }
  }
  for (const auto& e : lower_edges(s.g)) {
    if (!first && e.a <= 0) continue;
    std::vector<FieldElem> psi;
    for (std::int64_t i = e.from.first; i <= e.to.first; i += e.b) {
      const auto it = s.g.find({i, e.from.second - e.a * (i - e.from.first) / e.b});
      psi.push_back(it == s.g.end() ? FieldElem(0) : it->second);
    }
    std::vector<Root> roots;
    if (s.field->is_rational()) {
      std::vector<Rational> q;
      for (const auto& c : psi) q.push_back(c.rational());
      roots = roots_over_q(q, e.b);
    } else {
      roots = roots_over_extension(psi, e.b, s.field);
    }
    for (const auto& r : roots) expand(child(s, e, r), false, nterms, out);
  }
}

LaurentPolynomial cleared_curve(const LaurentPolynomial& f) {
  if (f.rank() != 2) throw Error(Errc::UnsupportedRank, "plane curves need two variables");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial defines no curve");
  const auto g = f.clear_monomial();
  if (g.degree_in(1) == 0) throw Error(Errc::NotACurve, "F does not involve y");
  return g;
}

FractionalSeries evaluate_on(const LaurentPolynomial& g, const FractionalSeries& x, const FractionalSeries& y) {
  std::int64_t nx = 0, ny = 0;
  for (const auto& [e, c] : g.terms()) {
    nx = std::max(nx, e[0]);
    ny = std::max(ny, e[1]);
  }
  std::vector<FractionalSeries> xp{FractionalSeries::constant(FieldElem(1))}, yp = xp;
  for (std::int64_t i = 1; i <= nx; ++i) xp.push_back(xp.back() * x);
  for (std::int64_t j = 1; j <= ny; ++j) yp.push_back(yp.back() * y);
  FractionalSeries total;
  for (const auto& [e, c] : g.terms()) total = total + (xp[e[0]] * yp[e[1]]).scaled(FieldElem(Rational(c)));
  return total;
}

}  // namespace

FractionalSeries PuiseuxBranch::in_t() const {
  return FractionalSeries(1, series.terms(), series.precision_units());
}

std::vector<PuiseuxBranch> puiseux_expand(const LaurentPolynomial& f, int nterms) {
  if (nterms < 1) throw Error(Errc::InvalidArgument, "nterms must be positive");
  const auto g = cleared_curve(f);
  State s;
  for (const auto& [e, c] : g.terms()) s.g.emplace(std::make_pair(e[1], e[0]), FieldElem(Rational(c)));
  std::vector<PuiseuxBranch> out;
  expand(std::move(s), true, nterms, out);
  return out;
}

FractionalSeries branch_residual(const LaurentPolynomial& f, const PuiseuxBranch& branch) {
  const auto g = cleared_curve(f);
  return evaluate_on(g, FractionalSeries::monomial(Rational(branch.d)), branch.in_t());
}

namespace {

FieldElem root_of_unity(const RootOfUnity& z, const FieldPtr& field) {
  if (z.order <= 0) throw Error(Errc::InvalidArgument, "root of unity order must be positive");
  const std::int64_t k = ((z.exponent % z.order) + z.order) % z.order;
  if (k == 0) return FieldElem(1);
  if (2 * k == z.order) return FieldElem(-1);
  if (!field->is_rational()) {
    // the generator may itself be a root of unity of some order divisible by m
    const FieldElem a = FieldElem::generator(field);
    FieldElem p = a;
    for (std::int64_t ord = 1; ord <= 4 * field->degree() * field->degree() + 2; ++ord, p *= a)
      if (p == FieldElem(1)) {
        if (ord % z.order == 0) return a.pow(static_cast<long>(ord / z.order * k));
        break;
      }
  }
  throw Error(Errc::ExtensionRequired, "root of unity of order " + std::to_string(z.order) + " not in the field");
}

Rational pow_q(const Rational& q, long k) {
  Rational r = 1;
  const Rational b = k < 0 ? 1 / q : q;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
  return r;
}

Rational general_binomial(const Rational& e, std::int64_t k) {
  Rational r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= (e - i) / Rational(i + 1);
  return r;
}

}  // namespace

FractionalSeries series_power_twist(const FractionalSeries& s0, const Rational& e0, RootOfUnity zeta, int terms) {
  if (s0.is_zero()) throw Error(Errc::ZeroSeries, "power of a series with no known nonzero term");
  Rational e = e0;
  e.canonicalize();
  const FractionalSeries s = s0.normalized();
  const FieldElem twist = root_of_unity(zeta, s.field());
  if (e.get_den() == 1 && e >= 0) return s.pow(static_cast<unsigned>(e.get_num().get_ui())).scaled(twist);

  const std::int64_t d = s.ramification(), k0 = s.order_units();
  const FieldElem c0 = s.leading_coefficient();
  FieldElem lead;
  if (e.get_den() == 1) {
    lead = c0.pow(e.get_num().get_si());
  } else {
    Rational r;
    if (!c0.is_rational() ||
        !rational_root_of(pow_q(c0.rational(), e.get_num().get_si()), static_cast<unsigned>(e.get_den().get_ui()), r))
      throw Error(Errc::ExtensionRequired, "leading coefficient has no such root in the field");
    lead = FieldElem(r);
  }
  // s = c0 t^(k0/d) (1 + w)
  FractionalSeries::Terms wt;
  for (const auto& [k, c] : s.terms())
    if (k != k0) wt.emplace(k - k0, c / c0);
  std::optional<std::int64_t> rel;
  if (s.precision_units()) rel = *s.precision_units() - k0;
  const FractionalSeries w(d, wt, rel);
  FractionalSeries sum = FractionalSeries::constant(FieldElem(1));
  if (!w.is_zero() || !w.is_exact()) {
    const std::int64_t vw = w.order_units();
    const std::int64_t frontier = rel ? *rel : vw * terms;
    sum = FractionalSeries(d, {{0, FieldElem(1)}}, frontier);
    FractionalSeries wk = FractionalSeries::constant(FieldElem(1));
    const FractionalSeries wtr = w.truncated(Rational(frontier, d));
    for (std::int64_t k = 1; k * vw < frontier; ++k) {
      wk = (wk * wtr).truncated(Rational(frontier, d));
      sum = sum + wk.scaled(FieldElem(general_binomial(e, k)));
    }
  }
  Rational lead_exp(k0, d);
  lead_exp *= e;
  return (FractionalSeries::monomial(lead_exp, lead * twist) * sum).normalized();
}

namespace {

// Rational nullspace basis in reduced form, one row per free column; each
// row has a 1 in its free column and zeros in the other free columns.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<LaurentPolynomial> find_integer_relation(const FractionalSeries& u0, const FractionalSeries& v0,
                                                       int degree_bound) {
  if (degree_bound < 1) throw Error(Errc::InvalidArgument, "degree bound must be positive");
  if (u0.is_zero() && u0.is_exact()) return LaurentPolynomial::monomial({1, 0});
  if (v0.is_zero() && v0.is_exact()) return LaurentPolynomial::monomial({0, 1});
  const std::int64_t dd = common_ramification(u0, v0);
  const auto u = u0.with_ramification(dd), v = v0.with_ramification(dd);

  // monomials U^i V^j of total degree <= bound, largest first in (j, i)
  std::vector<std::pair<int, int>> mons;
  for (int j = degree_bound; j >= 0; --j)
    for (int i = degree_bound - j; i >= 0; --i) mons.push_back({i, j});
  std::vector<FractionalSeries> up{FractionalSeries::constant(FieldElem(1))}, vp = up;
  for (int k = 1; k <= degree_bound; ++k) {
    up.push_back(up.back() * u);
    vp.push_back(vp.back() * v);
  }
  std::map<std::pair<int, int>, FractionalSeries> prod;
  std::optional<std::int64_t> frontier;
  std::int64_t low = std::numeric_limits<std::int64_t>::max();
  FieldPtr field = NumberField::rationals();
  for (const auto& [i, j] : mons) {
    auto s = (up[i] * vp[j]).with_ramification(dd);
    if (s.precision_units()) frontier = frontier ? std::min(*frontier, *s.precision_units()) : *s.precision_units();
    if (!s.is_zero()) low = std::min(low, s.order_units());
    field = common_field(field, s.field());
    prod.emplace(std::make_pair(i, j), std::move(s));
  }
  if (frontier) {
    const std::int64_t span = std::max(std::abs(u.order_units()), std::abs(v.order_units()));
    const std::int64_t need = static_cast<std::int64_t>(degree_bound + 1) * (degree_bound + 1) + degree_bound * span;
    if (*frontier - std::min(low, *frontier) < need)
      throw Error(Errc::InsufficientPrecision, "series too short for a degree " + std::to_string(degree_bound) +
                                                   " relation search");
  }
  const std::size_t k = static_cast<std::size_t>(field->degree());
  // exponent slots carrying equations
  std::set<std::int64_t> slots;
  for (const auto& [m, s] : prod)
    for (const auto& [e, c] : s.terms())
      if (!frontier || e < *frontier) slots.insert(e);

  for (int deg = 1; deg <= degree_bound; ++deg) {
    std::vector<std::pair<int, int>> cols;
    for (const auto& m : mons)
      if (m.first + m.second <= deg) cols.push_back(m);
    std::vector<std::vector<Rational>> rows;
    for (auto e : slots)
      for (std::size_t q = 0; q < k; ++q) {
        std::vector<Rational> r;
        bool any = false;
        for (const auto& m : cols) {
          const auto& t = prod.at(m).terms();
          const auto it = t.find(e);
          Rational x = 0;
          if (it != t.end() && q < it->second.coords().size()) x = it->second.coords()[q];
          any = any || x != 0;
          r.push_back(x);
        }
        if (any) rows.push_back(std::move(r));
      }
    const auto basis = nullspace(std::move(rows), cols.size());
    if (basis.empty()) continue;
    // several solutions: take the one whose leading monomial is smallest
    const auto& sol = basis.back();
    Integer den = 1;
    for (const auto& x : sol) den = lcm(den, Integer(x.get_den()));
    Integer g = 0;
    std::vector<Integer> ints;
    for (const auto& x : sol) {
      ints.push_back(x.get_num() * (den / x.get_den()));
      g = gcd(g, ints.back());
    }
    for (std::size_t c = 0; c < ints.size(); ++c)
      if (ints[c] != 0) {
        if (ints[c] < 0) g = -g;
        break;
      }
    LaurentPolynomial r(2);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (ints[c] != 0) r += LaurentPolynomial::monomial({cols[c].first, cols[c].second}, ints[c] / g);
    return r;
  }
  return std::nullopt;
}

std::string_view homothety_verdict_name(HomothetyVerdict v) {
  switch (v) {
    case HomothetyVerdict::True:
      return "true";
    case HomothetyVerdict::False:
      return "false";
    case HomothetyVerdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

namespace {

std::int64_t total_degree(const LaurentPolynomial& g) {
  std::int64_t d = 0;
  for (const auto& [e, c] : g.terms()) d = std::max(d, e[0] + e[1]);
  return d;
}

LaurentPolynomial substitute_monomials(const LaurentPolynomial& r, std::int64_t a, std::int64_t b) {
  LaurentPolynomial out(2);
  for (const auto& [e, c] : r.terms()) out += LaurentPolynomial::monomial({e[0] * a, e[1] * b}, c);
  return out;
}

struct Curve {
  LaurentPolynomial g;        // monomials cleared, primitive
  bool irreducible = false;
};

Curve prepare(const LaurentPolynomial& f) {
  Curve c;
  c.g = cleared_curve(f);
  Integer content = 0;
  for (const auto& [e, x] : c.g.terms()) content = gcd(content, x);
  c.g = c.g.divided_by(content);
  c.irreducible = irreducibility_status(c.g).verdict == IrreducibilityVerdict::Irreducible;
  return c;
}

// minimal relation of (x^n, y^n) on the curve
LaurentPolynomial power_relation(const Curve& c, int n) {
  const int bound = static_cast<int>(n * total_degree(c.g));
  // 8 (bound + 1) terms past the span of U^bound = t^(d n bound), d <= deg_y
  int terms = static_cast<int>(8 * (bound + 1) + bound * n * c.g.degree_in(1));
  for (int attempt = 0; attempt < 2; ++attempt, terms *= 2) {
    const auto branch = puiseux_expand(c.g, terms).front();
    const auto u = FractionalSeries::monomial(Rational(branch.d * n));
    const auto v = branch.in_t().pow(static_cast<unsigned>(n));
    std::optional<LaurentPolynomial> r;
    try {
      r = find_integer_relation(u, v, bound);
    } catch (const Error& e) {
      if (e.code() != Errc::InsufficientPrecision || attempt == 1) throw;
      continue;
    }
    if (!r) throw Error(Errc::InsufficientPrecision, "no relation of degree <= " + std::to_string(bound) + " found");
    // an exact check weeds out relations that only hold to the truncation
    if (!c.irreducible || divide_exact(substitute_monomials(*r, n, n), c.g)) return *r;
  }
  throw Error(Errc::InsufficientPrecision, "relation for n = " + std::to_string(n) + " not confirmed");
}

HomothetyResult decide(const Curve& c, const LaurentPolynomial& rn, int c1, int c2) {
  HomothetyResult out;
  out.relation = rn;
  const auto image = substitute_monomials(rn, c1, c2);
  if (c.irreducible) {
    out.exact = true;
    out.verdict = divide_exact(image, c.g) ? HomothetyVerdict::True : HomothetyVerdict::False;
    return out;
  }
  // series test on every branch, with a margin of twice the relation degree
  const int terms = static_cast<int>(2 * total_degree(image) + 8);
  out.verdict = HomothetyVerdict::Undetermined;
  for (const auto& b : puiseux_expand(c.g, terms)) {
    const auto r = evaluate_on(image, FractionalSeries::monomial(Rational(b.d)), b.in_t());
    if (!r.is_zero()) {
      out.verdict = HomothetyVerdict::False;
      break;
    }
  }
  return out;
}

void check_exponents(int n, int c1, int c2) {
  if (n < 1 || c1 < 1 || c2 < 1) throw Error(Errc::InvalidArgument, "n, c1, c2 must be positive");
}

}  // namespace

HomothetyResult homothety_check(const LaurentPolynomial& f, int n, int c1, int c2) {
  check_exponents(n, c1, c2);
  const auto c = prepare(f);
  return decide(c, power_relation(c, n), c1, c2);
}

HomothetyScan homothety_scan(const LaurentPolynomial& f, int bound, int max_bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "bound must be positive");
  if (bound > max_bound)
    throw Error(Errc::TooLarge, "bound " + std::to_string(bound) + " exceeds the maximum " + std::to_string(max_bound));
  const auto c = prepare(f);
  HomothetyScan out;
  for (int n = 1; n <= bound; ++n) {
    const auto rn = power_relation(c, n);
    for (int c1 = 1; c1 <= bound; ++c1)
      for (int c2 = 1; c2 <= bound; ++c2) {
        const auto r = decide(c, rn, c1, c2);
        if (r.verdict == HomothetyVerdict::True) out.accepted.push_back({n, c1, c2});
        if (r.verdict == HomothetyVerdict::Undetermined) out.undetermined.push_back({n, c1, c2});
      }
  }
  return out;
}

}  // namespace sigmaforge
