/* SPDX-License-Identifier: Apache-2.0 */

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sigmaforge/error.hpp"
#include "sigmaforge/polyhedra.hpp"
#include "sigmaforge/sigma.hpp"
#include "test_support.hpp"

using namespace sigmaforge;
using sigmaforge::test_support::P;
using sigmaforge::test_support::random_poly;

namespace {

using RVec = std::vector<Rational>;

RVec rv(long a, long b) { return {Rational(a), Rational(b)}; }

// Brute force: the lifted minimum at chi, computed from scratch.
bool tie_at(const LaurentPolynomial& f, const CoefficientValuation& v, const RVec& chi) {
  std::vector<Rational> vals;
  for (const auto& [e, c] : f.terms()) {
    Rational h = v.kind == CoefficientValuation::Kind::PAdic ? Rational(padic_valuation(c, v.prime)) : Rational(0);
    for (std::size_t i = 0; i < e.size(); ++i) h += Rational(static_cast<long>(e[i])) * chi[i];
    vals.push_back(h);
  }
  std::sort(vals.begin(), vals.end());
  return vals.size() >= 2 && vals[0] == vals[1];
}

std::vector<RVec> grid(long lo, long hi, long den) {
  std::vector<RVec> out;
  for (long a = lo * den; a <= hi * den; ++a)
    for (long b = lo * den; b <= hi * den; ++b) {
      RVec chi{Rational(a, den), Rational(b, den)};
      for (auto& c : chi) c.canonicalize();
      out.push_back(chi);
    }
  return out;
}

std::vector<Direction> sample_directions(int n) {
  std::vector<Direction> out;
  for (int k = 0; k < n; ++k) {
    const double th = 2 * M_PI * k / n;
    const auto x = static_cast<std::int64_t>(std::lround(997 * std::cos(th)));
    const auto y = static_cast<std::int64_t>(std::lround(997 * std::sin(th)));
    out.push_back(direction_of(Exponent{x, y}));
  }
  return out;
}

Character as_character(const Direction& d) {
  Character c;
  for (auto v : d) c.coords.emplace_back(static_cast<long>(v));
  return c;
}

const std::vector<const char*> kIrreducibleFixtures = {
    "y - x - 1", "y - x - 2", "y^2 - x^3 - 1", "x^2 + y^2 + 1 + x*y", "2*x*y + x^2 - 3*y + 5", "y^2 - x",
};

}  // namespace

TEST(CornerLocus, WorkedExampleThreeRays) {
  const auto c = corner_locus(P("y - x - 1"), CoefficientValuation::zero());
  ASSERT_EQ(c.pieces.size(), 3u);
  std::vector<Exponent> gens;
  for (const auto& p : c.pieces) {
    EXPECT_EQ(p.kind, PieceKind::Ray);
    EXPECT_EQ(p.vertex, rv(0, 0));
    gens.push_back(p.generators[0]);
  }
  std::sort(gens.begin(), gens.end());
  EXPECT_EQ(gens, (std::vector<Exponent>{{-1, -1}, {0, 1}, {1, 0}}));
}

TEST(CornerLocus, TwoAdicShiftsVertexAndMatchesGridOracle) {
  const auto f = P("y - x - 2");
  const auto v = CoefficientValuation::padic(2);
  const auto c = corner_locus(f, v);
  ASSERT_EQ(c.pieces.size(), 3u);
  for (const auto& p : c.pieces) {
    EXPECT_EQ(p.kind, PieceKind::Ray);
    EXPECT_EQ(p.vertex, rv(1, 1));
  }
  EXPECT_TRUE(piece_contains(c.pieces[0], rv(-4, -4)) || piece_contains(c.pieces[1], rv(-4, -4)) ||
              piece_contains(c.pieces[2], rv(-4, -4)));
  // the only grid point where all three terms tie is (1, 1)
  int triple = 0;
  for (const auto& chi : grid(-4, 4, 3)) {
    EXPECT_EQ(complex_contains(c, chi), tie_at(f, v, chi)) << chi[0] << "," << chi[1];
    const Rational a = chi[1], b = chi[0], k = 1;
    if (a == b && a == k) ++triple;
  }
  EXPECT_EQ(triple, 1);
}

TEST(CornerLocus, SingleTermIsEmptyWithWarning) {
  const auto c = corner_locus(P("5*x^2*y^-3"), CoefficientValuation::zero());
  EXPECT_TRUE(c.pieces.empty());
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_NE(c.warnings[0].find("UnitPolynomialWarning"), std::string::npos);
}

TEST(CornerLocus, RankOneAndSegmentSupports) {
  const auto c1 = corner_locus(P("x^2 + x + 2", 1), CoefficientValuation::padic(2));
  ASSERT_EQ(c1.pieces.size(), 2u);
  EXPECT_EQ(c1.pieces[0].vertex, RVec{Rational(0)});
  EXPECT_EQ(c1.pieces[1].vertex, RVec{Rational(1)});
  const auto c2 = corner_locus(P("y^2 - x^2"), CoefficientValuation::zero());
  ASSERT_EQ(c2.pieces.size(), 1u);
  EXPECT_EQ(c2.pieces[0].kind, PieceKind::Line);
  EXPECT_TRUE(piece_contains(c2.pieces[0], rv(3, 3)));
  EXPECT_THROW(corner_locus(P("x1 + x2 + x3", 3), CoefficientValuation::zero()), Error);
}

TEST(CornerLocus, GridOracleOnRandomPolynomials) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_poly(rng, 2, 6, -2, 2, 12);
    for (auto v : {CoefficientValuation::zero(), CoefficientValuation::padic(2), CoefficientValuation::padic(3)}) {
      const auto c = corner_locus(f, v);
      for (const auto& chi : grid(-2, 2, 2)) ASSERT_EQ(complex_contains(c, chi), tie_at(f, v, chi)) << f.to_string();
    }
  }
}

TEST(ResidueBranches, Examples) {
  const auto zero = corner_locus(P("y - x - 1"), CoefficientValuation::zero());
  const auto b5 = residue_branches(P("y - x - 1"), 5);
  ASSERT_EQ(b5.size(), 1u);
  EXPECT_TRUE(same_point_set(b5[0], zero));

  const auto b2 = residue_branches(P("y - x - 2"), 2);
  ASSERT_EQ(b2.size(), 1u);
  ASSERT_EQ(b2[0].pieces.size(), 1u);
  EXPECT_EQ(b2[0].pieces[0].kind, PieceKind::Line);
  EXPECT_TRUE(piece_contains(b2[0].pieces[0], rv(-7, -7)));

  const auto b7 = residue_branches(P("y^2 - x^2"), 7);
  ASSERT_EQ(b7.size(), 2u);
  for (const auto& b : b7) {
    ASSERT_EQ(b.pieces.size(), 1u);
    EXPECT_TRUE(piece_contains(b.pieces[0], rv(2, 2)));
  }
  try {
    residue_branches(P("3*x + 3"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroResidue);
  }
}

TEST(ResidueBranches, UnionEqualsResidueLocus) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_poly(rng, 2, 3, 0, 2) * random_poly(rng, 2, 3, 0, 2);
    for (std::int64_t p : {2, 3}) {
      if (reduce_mod_p(f, p).is_zero()) continue;
      std::vector<TropicalComplex> br;
      try {
        br = residue_branches(f, p, FactorLimits{64, 16});
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), Errc::FactorizationIncomplete);
        continue;
      }
      EXPECT_TRUE(same_point_set(union_of(br, 2), corner_locus(f, CoefficientValuation::residue_zero(p))))
          << f.to_string() << " p=" << p;
    }
  }
}

TEST(ExceptionalPrimes, Examples) {
  EXPECT_TRUE(exceptional_primes(P("y - x - 1")).empty());
  EXPECT_EQ(exceptional_primes(P("y - x - 2")), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(exceptional_primes(P("x + 3*y")), (std::vector<std::int64_t>{3}));
  EXPECT_THROW(exceptional_primes(LaurentPolynomial(2)), Error);
}

TEST(ExceptionalPrimes, NonCandidatesAreUnexceptionalUpTo13) {
  for (const char* text : {"y - x - 1", "y - x - 2", "x + 3*y", "6*x^2 + 5*y - 7"}) {
    const auto f = P(text);
    const auto zero = corner_locus(f, CoefficientValuation::zero());
    const auto cand = candidate_primes(f);
    for (auto p : primes_up_to(13)) {
      if (std::find(cand.begin(), cand.end(), p) != cand.end()) continue;
      EXPECT_TRUE(same_point_set(corner_locus(f, CoefficientValuation::padic(p)), zero));
      EXPECT_TRUE(same_point_set(corner_locus(f, CoefficientValuation::residue_zero(p)), zero));
    }
  }
}

TEST(SigmaComplement, WorkedExampleThreeIsolatedPoints) {
  const auto r = sigma_complement(P("y - x - 1"));
  EXPECT_FALSE(r.sigma_complement.whole);
  EXPECT_TRUE(r.sigma_complement.arcs.empty());
  EXPECT_EQ(r.sigma_complement.points, (std::vector<Direction>{{-1, -1}, {1, 0}, {0, 1}}));
  EXPECT_TRUE(r.two_tame);
  EXPECT_EQ(r.boundary, r.sigma_complement.points);
  EXPECT_FALSE(r.great_circle);
  EXPECT_TRUE(r.spans);
  EXPECT_TRUE(r.exceptional_primes.empty());
}

TEST(SigmaComplement, ZeroIdealRankOneIsWholeAndNotTame) {
  const auto r = sigma_complement_zero_ideal(1);
  EXPECT_TRUE(r.sigma_complement.whole);
  EXPECT_FALSE(r.two_tame);
  EXPECT_TRUE(r.boundary.empty());
}

TEST(SigmaComplement, NegativeControlHasArcAndAntipodalPair) {
  const auto r = sigma_complement(P("y - x - 2"));
  EXPECT_EQ(r.sigma_complement.points, (std::vector<Direction>{{-1, -1}}));
  ASSERT_EQ(r.sigma_complement.arcs.size(), 1u);
  EXPECT_EQ(r.sigma_complement.arcs[0], (Arc{{1, 0}, {0, 1}}));
  EXPECT_FALSE(r.two_tame);
  EXPECT_NE(std::find(r.antipodal.begin(), r.antipodal.end(), Direction{1, 1}), r.antipodal.end());
  EXPECT_EQ(r.boundary, (std::vector<Direction>{{-1, -1}, {1, 0}, {0, 1}}));
  EXPECT_EQ(r.per_valuation.size(), 3u);
  for (const auto& d : sample_directions(720))
    EXPECT_EQ(contains(r.sigma_complement, d), membership(P("y - x - 2"), as_character(d))) << to_string(d);
}

TEST(SigmaComplement, ContentPrimeGivesWholeSphere) {
  const auto r = sigma_complement(P("2*y - 2*x - 2"));
  EXPECT_TRUE(r.sigma_complement.whole);
  EXPECT_FALSE(r.two_tame);
  EXPECT_TRUE(r.great_circle);
}

TEST(Sphere, TwoTameExamples) {
  EXPECT_TRUE(two_tame(SphericalSet{2, false, {{-1, -1}, {1, 0}, {0, 1}}, {}}));
  EXPECT_FALSE(two_tame(SphericalSet{2, false, {{1, 1}, {-1, -1}}, {}}));
  EXPECT_FALSE(two_tame(whole_sphere(2)));
  EXPECT_TRUE(two_tame(SphericalSet{2, false, {}, {Arc{{1, 0}, {0, 1}}}}));
  EXPECT_FALSE(two_tame(SphericalSet{2, false, {{-1, 0}}, {Arc{{1, 0}, {0, 1}}}}));
  // a half-open-looking semicircle is closed, so its endpoints are antipodal
  EXPECT_FALSE(two_tame(SphericalSet{2, false, {}, {Arc{{1, 0}, {-1, 0}}}}));
}

TEST(Sphere, BoundaryExamples) {
  EXPECT_EQ(boundary_points(SphericalSet{2, false, {{-1, -1}, {1, 0}, {0, 1}}, {}}),
            (std::vector<Direction>{{-1, -1}, {1, 0}, {0, 1}}));
  EXPECT_EQ(boundary_points(SphericalSet{2, false, {{-1, -1}}, {Arc{{1, 0}, {0, 1}}}}),
            (std::vector<Direction>{{-1, -1}, {1, 0}, {0, 1}}));
  EXPECT_TRUE(boundary_points(SphericalSet{}).empty());
  try {
    boundary_points(whole_sphere(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::WholeSphere);
  }
}

TEST(Sphere, DiagnosticsExamples) {
  const auto a = sphere_diagnostics(SphericalSet{2, false, {{-1, -1}, {1, 0}, {0, 1}}, {}});
  EXPECT_FALSE(a.great_circle);
  EXPECT_TRUE(a.spans);
  const auto b = sphere_diagnostics(whole_sphere(2));
  EXPECT_TRUE(b.great_circle);
  EXPECT_TRUE(b.spans);
  const auto c = sphere_diagnostics(SphericalSet{2, false, {{1, 0}}, {}});
  EXPECT_FALSE(c.great_circle);
  EXPECT_FALSE(c.spans);
  EXPECT_THROW(sphere_diagnostics(SphericalSet{1, false, {{1}}, {}}), Error);
}

TEST(Sphere, NormalizationMergesAndIsIdempotent) {
  const SphericalSet s{2, false, {{1, 1}, {-1, 2}}, {Arc{{1, 0}, {1, 1}}, Arc{{1, 1}, {0, 1}}, Arc{{0, -1}, {1, 0}}}};
  const auto n = normalize(s);
  ASSERT_EQ(n.arcs.size(), 1u);
  EXPECT_EQ(n.arcs[0], (Arc{{0, -1}, {0, 1}}));
  EXPECT_EQ(n.points, (std::vector<Direction>{{-1, 2}}));
  EXPECT_EQ(normalize(n), n);
  const SphericalSet full{2, false, {}, {Arc{{1, 0}, {-1, 0}}, Arc{{-1, 0}, {1, 0}}}};
  EXPECT_TRUE(normalize(full).whole);
}

TEST(Membership, Examples) {
  const auto f = P("y - x - 1");
  EXPECT_TRUE(membership(f, Character{rv(-2, -2)}));
  EXPECT_FALSE(membership(f, Character{rv(1, 2)}));
  EXPECT_TRUE(membership(f, Character{rv(3, 0)}));
}

TEST(Properties, MultiplicativityOfCornerLoci) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(rng, 2, 6, -2, 2, 12);
    const auto g = random_poly(rng, 2, 6, -2, 2, 12);
    for (auto v : {CoefficientValuation::zero(), CoefficientValuation::padic(2), CoefficientValuation::padic(3)}) {
      const auto fg = corner_locus(f * g, v);
      const auto un = union_of({corner_locus(f, v), corner_locus(g, v)}, 2);
      EXPECT_TRUE(same_point_set(fg, un)) << f.to_string() << " | " << g.to_string() << " " << v.to_string();
      for (const auto& chi : grid(-2, 2, 2)) EXPECT_EQ(complex_contains(fg, chi), complex_contains(un, chi));
    }
  }
}

TEST(Properties, MonomialInvarianceAndSwapEquivariance) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_poly(rng, 2, 5, -2, 2, 12);
    const auto base = sigma_complement(f);
    const auto m = LaurentPolynomial::monomial({2, -3}, -1);
    EXPECT_EQ(sigma_complement(m * f).sigma_complement, base.sigma_complement);

    const auto sw = sigma_complement(f.swapped(0, 1)).sigma_complement;
    SphericalSet expected{2, base.sigma_complement.whole, {}, {}};
    for (const auto& d : base.sigma_complement.points) expected.points.push_back({d[1], d[0]});
    // reflection reverses orientation
    for (const auto& a : base.sigma_complement.arcs)
      expected.arcs.push_back(Arc{{a.end[1], a.end[0]}, {a.start[1], a.start[0]}});
    EXPECT_EQ(sw, normalize(expected)) << f.to_string();
  }
}

TEST(Properties, PurityForIrreducibleFixtures) {
  for (const char* text : kIrreducibleFixtures) {
    const auto f = P(text);
    for (const auto& [v, c] : sigma_complement(f).per_valuation)
      for (const auto& p : c.pieces) EXPECT_EQ(p.dimension(), 1) << text << " " << v.to_string();
  }
}

TEST(Properties, SpanningForTwoDimensionalSupports) {
  for (const char* text : kIrreducibleFixtures) {
    const auto f = P(text);
    if (newton_polytope(f).dim < 2) continue;
    EXPECT_TRUE(sigma_complement(f).spans) << text;
  }
}

TEST(Properties, OracleAgreementAt720Directions) {
  std::mt19937_64 rng(59);
  const auto dirs = sample_directions(720);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_poly(rng, 2, 5, -2, 2, 12);
    const auto s = sigma_complement(f).sigma_complement;
    auto probes = dirs;
    for (const auto& d : s.points) probes.push_back(d);
    for (const auto& a : s.arcs) {
      probes.push_back(a.start);
      probes.push_back(a.end);
    }
    for (const auto& d : probes)
      ASSERT_EQ(contains(s, d), membership(f, as_character(d))) << f.to_string() << " at " << to_string(d);
  }
}

TEST(Properties, ClosednessAndIdempotence) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const auto s = sigma_complement(random_poly(rng, 2, 5, -2, 2, 12)).sigma_complement;
    for (const auto& a : s.arcs) EXPECT_NE(a.start, a.end);
    EXPECT_EQ(normalize(s), s);
  }
}
