/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/ring_checks.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sigmaforge/error.hpp"
#include "sigmaforge/polyhedra.hpp"
#include "sigmaforge/resultant.hpp"
#include "sigmaforge/zpoly.hpp"

namespace sigmaforge {

namespace {

using I64 = std::int64_t;
// f (nonnegative exponents, only `var` occurring) as a dense polynomial.
ZPoly to_zpoly(const LaurentPolynomial& f, int var) {
  ZPoly out;
  for (const auto& [e, c] : f.terms()) {
    const auto d = static_cast<std::size_t>(e[var]);
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] += c;
  }
  return out;
}

LaurentPolynomial from_zpoly(const ZPoly& a, int rank, int var) {
  LaurentPolynomial::TermMap t;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      Exponent e(rank, 0);
      e[var] = static_cast<I64>(i);
      t.emplace(e, a[i]);
    }
  return LaurentPolynomial(rank, t);
}

// Coefficients of g (cleared of monomials) in `var`, each with `var` removed.
std::vector<LaurentPolynomial> slices(const LaurentPolynomial& g, int var) {
  std::vector<LaurentPolynomial> out(static_cast<std::size_t>(g.degree_in(var)) + 1, LaurentPolynomial(g.rank()));
  for (const auto& [e, c] : g.terms()) {
    Exponent k = e;
    k[var] = 0;
    out[static_cast<std::size_t>(e[var])] += LaurentPolynomial::monomial(k, c);
  }
  return out;
}

std::vector<Exponent> vertex_support(const LaurentPolynomial& g) { return newton_polytope(g).vertices; }

bool good_lift_prime(const LaurentPolynomial& g, I64 p) {
  for (const auto& v : vertex_support(g))
    if (mod_p(g.coefficient(v), p) == 0) return false;
  return true;
}

std::vector<Integer> signed_divisors(const Integer& n) {
  std::set<Integer> ds;
  Integer m = abs(n);
  std::vector<std::pair<Integer, int>> pf;
  for (auto p : prime_divisors(m)) {
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    pf.emplace_back(Integer(static_cast<long>(p)), k);
  }
  std::vector<Integer> cur{1};
  for (const auto& [p, k] : pf) {
    std::vector<Integer> next;
    for (const auto& d : cur) {
      Integer q = d;
      for (int i = 0; i <= k; ++i, q *= p) next.push_back(q);
    }
    cur = next;
  }
  for (const auto& d : cur) {
    ds.insert(d);
    ds.insert(-d);
  }
  return {ds.begin(), ds.end()};
}

IrreducibilityStatus make_status(IrreducibilityVerdict v, Field field, IrreducibilityMethod m, std::string note = {}) {
  IrreducibilityStatus s;
  s.verdict = v;
  s.field = field;
  s.method = m;
  s.note = std::move(note);
  return s;
}

std::optional<IrreducibilityStatus> linear_in_variable(const LaurentPolynomial& g) {
  const int rank = g.rank();
  for (int var = rank - 1; var >= 0; --var) {
    if (g.degree_in(var) != 1) continue;
    const auto sl = slices(g, var);
    const auto& B = sl[0];
    const auto& A = sl[1];
    const int other = rank == 2 ? 1 - var : -1;
    if (other < 0 || (A.degree_in(other) == 0 && B.degree_in(other) == 0)) {
      return make_status(IrreducibilityVerdict::Irreducible, Field::rationals(),
                         IrreducibilityMethod::LinearInVariable, "degree one, univariate");
    }
    const ZPoly d = gcd_z(to_zpoly(A, other), to_zpoly(B, other));
    if (d.size() <= 1) {
      return make_status(IrreducibilityVerdict::Irreducible, Field::rationals(),
                         IrreducibilityMethod::LinearInVariable, "degree one with coprime coefficients");
    }
    auto s = make_status(IrreducibilityVerdict::Reducible, Field::rationals(), IrreducibilityMethod::LinearInVariable,
                         "coefficients share a factor");
    const auto D = from_zpoly(d, rank, other);
    s.factors = {D, *divide_exact(g, D)};
    return s;
  }
  return std::nullopt;
}

std::optional<IrreducibilityStatus> mod_p_lift(const LaurentPolynomial& g, const IrreducibilityLimits& limits) {
  std::size_t tried = 0;
  for (auto p : primes_up_to(1000)) {
    if (tried == limits.lift_primes) break;
    if (!good_lift_prime(g, p)) continue;
    ++tried;
    const auto r = factor_residue(reduce_mod_p(g, p), FactorLimits{64, 16});
    if (r.complete && r.factors.size() == 1) {
      auto s = make_status(IrreducibilityVerdict::Irreducible, Field::rationals(), IrreducibilityMethod::ModPLift,
                           "irreducible mod " + std::to_string(p) + " with the Newton polytope preserved");
      s.lift_prime = p;
      return s;
    }
  }
  return std::nullopt;
}

// Search for a factor with Newton polytope P1 and bounded coefficients.
std::optional<LaurentPolynomial> search_summand(const LaurentPolynomial& g, const LatticePolytope& p1,
                                                const std::vector<Integer>& vertex_values,
                                                const IrreducibilityLimits& limits, bool& truncated) {
  const auto pts = lattice_points(p1);
  std::vector<std::vector<Integer>> choices;
  std::vector<Integer> small;
  for (I64 c = -limits.coefficient_bound; c <= limits.coefficient_bound; ++c) small.emplace_back(static_cast<long>(c));
  const Exponent lexmin = *std::min_element(p1.vertices.begin(), p1.vertices.end());
  double count = 1;
  for (const auto& q : pts) {
    const bool vertex = std::find(p1.vertices.begin(), p1.vertices.end(), q) != p1.vertices.end();
    std::vector<Integer> opts;
    for (const auto& v : vertex ? vertex_values : small)
      if (!(vertex && v == 0) && !(q == lexmin && v < 0)) opts.push_back(v);
    count *= static_cast<double>(opts.size());
    choices.push_back(std::move(opts));
  }
  if (count > static_cast<double>(limits.max_candidates)) {
    truncated = true;
    return std::nullopt;
  }
  std::vector<std::size_t> idx(pts.size(), 0);
  for (;;) {
    LaurentPolynomial::TermMap t;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (choices[i][idx[i]] != 0) t.emplace(pts[i], choices[i][idx[i]]);
    const LaurentPolynomial cand(g.rank(), t);
    if (auto q = divide_exact(g, cand); q && !q->is_monomial()) return cand;
    std::size_t i = 0;
    while (i < idx.size() && idx[i] + 1 == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return std::nullopt;
}

std::optional<IrreducibilityStatus> minkowski_search(const LaurentPolynomial& g, const IrreducibilityLimits& limits,
                                                     bool& truncated) {
  std::vector<SummandPair> pairs;
  try {
    pairs = minkowski_summand_pairs(newton_polytope(g), limits.max_lattice_points);
  } catch (const Error& e) {
    if (e.code() != Errc::TooLarge) throw;
    truncated = true;
    return std::nullopt;
  }
  std::set<Integer> vv;
  for (const auto& v : vertex_support(g))
    for (const auto& d : signed_divisors(g.coefficient(v))) vv.insert(d);
  const std::vector<Integer> vertex_values(vv.begin(), vv.end());
  for (const auto& [a, b] : pairs) {
    if (a.dim == 0 || b.dim == 0) continue;
    for (const auto* p1 : {&a, &b}) {
      if (auto h = search_summand(g, *p1, vertex_values, limits, truncated)) {
        auto s = make_status(IrreducibilityVerdict::Reducible, Field::rationals(),
                             IrreducibilityMethod::MinkowskiSearch, "factor found by bounded summand search");
        s.factors = {*h, *divide_exact(g, *h)};
        return s;
      }
    }
  }
  return std::nullopt;
}

IrreducibilityStatus over_fp(const LaurentPolynomial& f, std::int64_t p) {
  const Field field = Field::fp(p);
  const ResiduePolynomial r = reduce_mod_p(f, p);
  if (r.is_zero()) return make_status(IrreducibilityVerdict::Zero, field, IrreducibilityMethod::None);
  if (r.is_unit()) return make_status(IrreducibilityVerdict::Unit, field, IrreducibilityMethod::None);
  const auto fac = factor_residue(r, FactorLimits{64, 16});
  if (!fac.complete)
    return make_status(IrreducibilityVerdict::Undetermined, field, IrreducibilityMethod::FiniteFieldFactorization,
                       fac.reason);
  const auto h = r.clear_monomial();
  const bool linear = h.degree_in(0) <= 1 || (h.rank() > 1 && h.degree_in(1) <= 1);
  auto s = make_status(fac.factors.size() == 1 ? IrreducibilityVerdict::Irreducible : IrreducibilityVerdict::Reducible,
                       field,
                       linear && fac.factors.size() == 1 ? IrreducibilityMethod::LinearInVariable
                                                         : IrreducibilityMethod::FiniteFieldFactorization);
  if (fac.factors.size() > 1) s.residue_factors = fac.factors;
  return s;
}

}  // namespace

std::string Field::to_string() const { return is_q() ? "Q" : "F_" + std::to_string(prime); }

std::string verdict_name(IrreducibilityVerdict v) {
  switch (v) {
    case IrreducibilityVerdict::Irreducible: return "Irreducible";
    case IrreducibilityVerdict::Reducible: return "Reducible";
    case IrreducibilityVerdict::Unit: return "Unit";
    case IrreducibilityVerdict::Zero: return "Zero";
    case IrreducibilityVerdict::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string method_name(IrreducibilityMethod m) {
  switch (m) {
    case IrreducibilityMethod::None: return "None";
    case IrreducibilityMethod::LinearInVariable: return "LinearInVariable";
    case IrreducibilityMethod::MinkowskiSearch: return "MinkowskiSearch";
    case IrreducibilityMethod::ModPLift: return "ModPLift";
    case IrreducibilityMethod::FiniteFieldFactorization: return "FiniteFieldFactorization";
  }
  return "?";
}

TorsionFreeResult torsionfree_check(const LaurentPolynomial& f) {
  TorsionFreeResult r;
  r.torsion_free = content(f) == 1;
  if (f.is_monomial() && f.min_exponent() == Exponent(f.rank(), 0))
    r.warning = "UnitPolynomialWarning: constant polynomial";
  return r;
}

IrreducibilityStatus irreducibility_status(const LaurentPolynomial& f, Field field,
                                           const IrreducibilityLimits& limits) {
  if (f.rank() > 2) throw Error(Errc::UnsupportedRank, "irreducibility supports s <= 2");
  if (!field.is_q()) return over_fp(f, field.prime);
  if (f.is_zero()) return make_status(IrreducibilityVerdict::Zero, field, IrreducibilityMethod::None);
  if (f.is_monomial())
    return make_status(IrreducibilityVerdict::Unit, field, IrreducibilityMethod::None, "monomial");
  const LaurentPolynomial g = f.clear_monomial();
  if (auto s = linear_in_variable(g)) return *s;
  if (auto s = mod_p_lift(g, limits)) return *s;
  bool truncated = false;
  if (auto s = minkowski_search(g, limits, truncated)) return *s;
  return make_status(IrreducibilityVerdict::Undetermined, field, IrreducibilityMethod::MinkowskiSearch,
                     truncated ? "no lift prime proved irreducibility; summand search truncated"
                               : "no lift prime proved irreducibility; no factor with bounded coefficients");
}

ModPDomainResult mod_p_domain_check(const LaurentPolynomial& f, std::int64_t p) {
  const ResiduePolynomial r = reduce_mod_p(f, p);
  if (r.is_zero()) throw Error(Errc::ZeroResidue, "f vanishes mod " + std::to_string(p));
  ModPDomainResult out;
  out.prime = p;
  out.status = irreducibility_status(f, Field::fp(p));
  out.infinite = !r.is_unit();
  switch (out.status.verdict) {
    case IrreducibilityVerdict::Irreducible: out.domain = true; break;
    case IrreducibilityVerdict::Undetermined: break;
    default: out.domain = false; break;
  }
  return out;
}

AllPrimesCertificate all_primes_certificate(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "certificate for 0");
  if (content(f) != 1) throw Error(Errc::InvalidArgument, "all_primes_certificate needs content(f) = 1");
  AllPrimesCertificate cert;
  const LaurentPolynomial g = f.clear_monomial();
  std::set<I64> primes;
  for (const auto& [e, c] : g.terms())
    if (abs(c) > 1)
      for (auto p : prime_divisors(c)) primes.insert(p);

  bool certified = false;
  if (g.rank() == 2) {
    for (int var = 1; var >= 0 && !certified; --var) {
      if (g.degree_in(var) != 1) continue;
      const int other = 1 - var;
      const auto sl = slices(g, var);
      const auto& B = sl[0];
      const auto& A = sl[1];
      const Integer res = resultant_univariate(A, B, other).coefficient(Exponent(2, 0));
      cert.resultant = res;
      if (res == 0) continue;
      auto lead = [&](const LaurentPolynomial& h) {
        const ZPoly z = to_zpoly(h, other);
        return z.back();
      };
      const Integer bad = res * lead(A) * lead(B);
      if (abs(bad) > 1)
        for (auto p : prime_divisors(bad)) primes.insert(p);
      certified = true;
      const std::string names[2] = {"x", "y"};
      cert.justification = "f = A*" + names[var] + " + B with Res_" + names[other] + "(A, B) = " + res.get_str() +
                           "; primes not dividing Res*lc(A)*lc(B) keep A, B coprime of unchanged degree";
    }
  }
  if (!certified) {
    for (auto p : primes_up_to(13)) primes.insert(p);
    cert.justification = "no variable of degree one with nonzero resultant; finite list only";
  }
  cert.status = certified ? CertificateStatus::Certified : CertificateStatus::FiniteListOnly;
  cert.checked.assign(primes.begin(), primes.end());
  for (auto p : cert.checked) cert.results.push_back(mod_p_domain_check(f, p));
  return cert;
}

std::vector<Exponent> algebraic_monomial_directions(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::NotIrreducible, "zero polynomial");
  const auto st = irreducibility_status(f);
  if (st.verdict == IrreducibilityVerdict::Reducible || st.verdict == IrreducibilityVerdict::Unit ||
      st.verdict == IrreducibilityVerdict::Zero)
    throw Error(Errc::NotIrreducible, verdict_name(st.verdict));
  const auto np = newton_polytope(f);
  if (np.dim != 1) return {};
  Exponent d = np.vertices[1] - np.vertices[0];
  I64 g = 0;
  for (auto c : d) g = std::gcd(g, c < 0 ? -c : c);
  for (auto& c : d) c /= g;
  for (auto c : d) {
    if (c < 0) {
      for (auto& x : d) x = -x;
      break;
    }
    if (c > 0) break;
  }
  return {d};
}

KrullVerdict krull_dimension_zero_ideal(int rank) {
  return KrullVerdict{rank + 1, "zero ideal: Krull dim Z[x_1^{+-1}, ..., x_" + std::to_string(rank) +
                                    "^{+-1}] = " + std::to_string(rank) + " + Krull dim Z = " + std::to_string(rank + 1)};
}

KrullVerdict krull_dimension_verdict(const LaurentPolynomial& f) {
  if (f.rank() != 2) throw Error(Errc::UnsupportedRank, "Krull verdict needs s = 2");
  if (f.is_zero()) return krull_dimension_zero_ideal(2);
  if (f.is_unit()) throw Error(Errc::UnitPolynomial, "f is a unit; the quotient is the zero ring");
  const auto st = irreducibility_status(f);
  if (content(f) == 1 && st.verdict == IrreducibilityVerdict::Irreducible)
    return KrullVerdict{2, "(f) is a height-one prime of Z[x^{+-1}, y^{+-1}], which has Krull dimension 3"};
  if (content(f) != 1) return KrullVerdict{std::nullopt, "content(f) != 1: (f) is not prime"};
  return KrullVerdict{std::nullopt, "irreducibility " + verdict_name(st.verdict) + ": (f) not known to be prime"};
}

}  // namespace sigmaforge
