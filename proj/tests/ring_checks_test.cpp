/* SPDX-License-Identifier: Apache-2.0 */

#include <gtest/gtest.h>

#include <random>

#include "sigmaforge/error.hpp"
#include "sigmaforge/ring_checks.hpp"
#include "test_support.hpp"

using namespace sigmaforge;
using sigmaforge::test_support::P;
using sigmaforge::test_support::random_poly;

namespace {

ResiduePolynomial R(const char* text, std::int64_t p, int rank = 2) { return reduce_mod_p(P(text, rank), p); }

// a == c * m * b for a scalar c and a monomial m
bool equal_up_to_unit(const ResiduePolynomial& a, const ResiduePolynomial& b) {
  return a.clear_monomial().monic() == b.clear_monomial().monic();
}

ResiduePolynomial product(const std::vector<ResiduePolynomial>& fs, int rank, std::int64_t p) {
  ResiduePolynomial r(rank, p, {{Exponent(rank, 0), 1}});
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace

TEST(FactorModP, Examples) {
  const auto a = factor_mod_p(P("y^2 - x^2"), 7);
  ASSERT_TRUE(a.complete);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_TRUE(equal_up_to_unit(a.factors[0] * a.factors[1], R("y^2 - x^2", 7)));
  EXPECT_TRUE(equal_up_to_unit(a.factors[0], R("y - x", 7)) || equal_up_to_unit(a.factors[0], R("y + x", 7)));
  EXPECT_TRUE(equal_up_to_unit(a.factors[1], R("y - x", 7)) || equal_up_to_unit(a.factors[1], R("y + x", 7)));
  EXPECT_FALSE(equal_up_to_unit(a.factors[0], a.factors[1]));

  const auto b = factor_mod_p(P("y - x - 2"), 2);
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0], R("y + x", 2));

  const auto c = factor_mod_p(P("y^2 + 1"), 2);
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[0], R("y + 1", 2));
  EXPECT_EQ(c.factors[1], R("y + 1", 2));

  try {
    factor_mod_p(P("3*x"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroResidue);
  }
}

TEST(FactorModP, MonomialsAndUnivariateContent) {
  const auto f = factor_mod_p(P("x^3*y - x^2*y^2"), 5);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_TRUE(equal_up_to_unit(f.factors[0], R("x - y", 5)));
  // (x^2 + 1)(y + 1)(x*y + y^2 + 1) over F_3
  const auto g = factor_mod_p(P("(x^2 + 1)*(y + 1)*(x*y + y^2 + 1)"), 3);
  ASSERT_TRUE(g.complete);
  EXPECT_EQ(g.factors.size(), 3u);
  EXPECT_TRUE(equal_up_to_unit(product(g.factors, 2, 3), R("(x^2 + 1)*(y + 1)*(x*y + y^2 + 1)", 3)));
  EXPECT_EQ(factor_mod_p(P("x^-2*y^3"), 7).factors.size(), 0u);
}

TEST(FactorModP, GivesUpHonestly) {
  FactorLimits tight;
  tight.max_support = 3;
  const auto r = factor_mod_p(P("x^2*y^2 + x^2 + y^2 + x + 1"), 3, tight);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.reason.empty());
}

TEST(FactorModP, RandomProductsMultiplyBackIntoIrreducibles) {
  std::mt19937_64 rng(31);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 25; ++i) {
      const auto a = random_poly(rng, 2, 3, 0, 2);
      const auto b = random_poly(rng, 2, 3, 0, 2);
      const auto f = reduce_mod_p(a * b, p);
      if (f.is_zero()) continue;
      FactorLimits roomy;
      roomy.max_support = 64;
      const auto r = factor_residue(f, roomy);
      if (!r.complete) continue;
      EXPECT_TRUE(equal_up_to_unit(product(r.factors, 2, p), f)) << (a * b).to_string() << " p=" << p;
      for (const auto& g : r.factors) {
        const auto again = factor_residue(g, roomy);
        ASSERT_EQ(again.factors.size(), 1u) << g.to_string({"x", "y"});
        EXPECT_EQ(again.factors[0], g);
      }
      const auto ra = reduce_mod_p(a, p), rb = reduce_mod_p(b, p);
      std::size_t lower = 0;
      for (const auto& part : {ra, rb})
        if (!part.is_zero() && !part.is_unit()) ++lower;
      EXPECT_GE(r.factors.size(), lower);
    }
  }
}

TEST(FactorModP, RankOne) {
  const auto r = factor_mod_p(P("x^4 - 1", 1), 5);
  EXPECT_EQ(r.factors.size(), 4u);
}

TEST(FactorModP, AgreesWithBruteForceDivisorSearchOverF2) {
  std::mt19937_64 rng(37);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    ResiduePolynomial::TermMap t;
    for (std::int64_t i = 0; i <= 2; ++i)
      for (std::int64_t j = 0; j <= 2; ++j)
        if (coin(rng)) t.emplace(Exponent{i, j}, 1);
    const ResiduePolynomial f = ResiduePolynomial(2, 2, t).clear_monomial();
    if (f.is_zero() || f.is_unit()) continue;
    // proper non-unit divisor with exponents inside f's box
    const auto dx = f.degree_in(0), dy = f.degree_in(1);
    bool reducible = false;
    const std::int64_t cells = (dx + 1) * (dy + 1);
    for (std::int64_t mask = 1; mask < (std::int64_t{1} << cells) && !reducible; ++mask) {
      ResiduePolynomial::TermMap g;
      for (std::int64_t k = 0; k < cells; ++k)
        if (mask >> k & 1) g.emplace(Exponent{k % (dx + 1), k / (dx + 1)}, 1);
      const ResiduePolynomial gp(2, 2, g);
      if (gp.is_unit() || equal_up_to_unit(gp, f)) continue;
      if (auto q = divide_exact(f, gp); q && !q->is_unit()) reducible = true;
    }
    const auto r = factor_residue(f, FactorLimits{64, 16});
    ASSERT_TRUE(r.complete);
    EXPECT_EQ(r.factors.size() > 1, reducible) << f.to_string({"x", "y"});
  }
}

namespace {

LaurentPolynomial product_q(const std::vector<LaurentPolynomial>& fs, int rank) {
  LaurentPolynomial r = LaurentPolynomial::constant(rank, 1);
  for (const auto& f : fs) r = r * f;
  return r;
}

// a == +-m * b for a Laurent monomial m with coefficient +-1
bool equal_up_to_unit_monomial(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto q = divide_exact(a, b);
  return q && q->is_unit();
}

}  // namespace

TEST(TorsionFree, Examples) {
  EXPECT_TRUE(torsionfree_check(P("y - x - 1")).torsion_free);
  EXPECT_FALSE(torsionfree_check(P("2*y - 2*x - 2")).torsion_free);
  const auto seven = torsionfree_check(P("7"));
  EXPECT_FALSE(seven.torsion_free);
  EXPECT_TRUE(seven.warning.has_value());
  EXPECT_THROW(torsionfree_check(LaurentPolynomial(2)), Error);
}

TEST(Irreducibility, Examples) {
  const auto a = irreducibility_status(P("y - x - 1"));
  EXPECT_EQ(a.verdict, IrreducibilityVerdict::Irreducible);
  EXPECT_EQ(a.method, IrreducibilityMethod::LinearInVariable);

  const auto b = irreducibility_status(P("y^2 - x^2"));
  ASSERT_EQ(b.verdict, IrreducibilityVerdict::Reducible);
  ASSERT_EQ(b.factors.size(), 2u);
  EXPECT_TRUE(equal_up_to_unit_monomial(product_q(b.factors, 2), P("y^2 - x^2")));
  for (const auto& w : b.factors)
    EXPECT_TRUE(equal_up_to_unit_monomial(w, P("y - x")) || equal_up_to_unit_monomial(w, P("y + x")) ||
                equal_up_to_unit_monomial(-w, P("y - x")) || equal_up_to_unit_monomial(-w, P("y + x")));

  EXPECT_EQ(irreducibility_status(P("y^2 - x")).verdict, IrreducibilityVerdict::Irreducible);
  EXPECT_EQ(irreducibility_status(P("-x^3*y")).verdict, IrreducibilityVerdict::Unit);
  EXPECT_EQ(irreducibility_status(LaurentPolynomial(2)).verdict, IrreducibilityVerdict::Zero);
}

TEST(Irreducibility, ModPLiftAndLinearGcd) {
  const auto c = irreducibility_status(P("y^2 - x^3 - 1"));
  EXPECT_EQ(c.verdict, IrreducibilityVerdict::Irreducible);
  EXPECT_EQ(c.method, IrreducibilityMethod::ModPLift);
  ASSERT_TRUE(c.lift_prime.has_value());

  const auto d = irreducibility_status(P("(x + 1)*y + x^2 - 1"));
  ASSERT_EQ(d.verdict, IrreducibilityVerdict::Reducible);
  EXPECT_EQ(d.method, IrreducibilityMethod::LinearInVariable);
  EXPECT_TRUE(equal_up_to_unit_monomial(product_q(d.factors, 2), P("(x + 1)*y + x^2 - 1")));
}

TEST(Irreducibility, OverFiniteFields) {
  EXPECT_EQ(irreducibility_status(P("y^2 - x^2"), Field::fp(3)).verdict, IrreducibilityVerdict::Reducible);
  EXPECT_EQ(irreducibility_status(P("y - x - 2"), Field::fp(2)).verdict, IrreducibilityVerdict::Irreducible);
  EXPECT_EQ(irreducibility_status(P("3*x + 3"), Field::fp(3)).verdict, IrreducibilityVerdict::Zero);
}

TEST(Irreducibility, WitnessesMultiplyBackAndVerdictIsStable) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_poly(rng, 2, 3, 0, 2, 3);
    const auto b = random_poly(rng, 2, 3, 0, 2, 3);
    const auto f = a * b;
    if (f.is_monomial()) continue;
    const auto st = irreducibility_status(f);
    if (st.verdict == IrreducibilityVerdict::Reducible) {
      EXPECT_TRUE(equal_up_to_unit_monomial(product_q(st.factors, 2), f)) << f.to_string();
      for (const auto& w : st.factors) EXPECT_FALSE(w.is_monomial());
    }
    if (!a.is_monomial() && !b.is_monomial()) EXPECT_NE(st.verdict, IrreducibilityVerdict::Irreducible) << f.to_string();
    const auto m = LaurentPolynomial::monomial({-2, 1}, -1);
    EXPECT_EQ(irreducibility_status(f.swapped(0, 1)).verdict, st.verdict) << f.to_string();
    EXPECT_EQ(irreducibility_status(m * f).verdict, st.verdict) << f.to_string();
  }
}

TEST(Irreducibility, AgreesWithBruteForceFactorSearch) {
  // Brute force over divisors with coefficients in [-3, 3]. One of a factor
  // and its cofactor fits in a sub-box with no more cells than the other's.
  for (const char* text : {"y^2 - x", "x^2*y^2 + x + y", "x^2 + y^2 - 1", "x^2 - 2*x*y + y^2 - 1", "x*y - 2",
                           "x^2*y + x*y^2 + x + y", "y^2 - 4*x^2", "x^2 + x*y + y^2"}) {
    const auto f = P(text).clear_monomial();
    const auto dx = f.degree_in(0), dy = f.degree_in(1);
    bool reducible = false;
    for (std::int64_t a = 0; a <= dx && !reducible; ++a)
      for (std::int64_t b = 0; b <= dy && !reducible; ++b) {
        if ((a + 1) * (b + 1) > (dx - a + 1) * (dy - b + 1) || (a == 0 && b == 0)) continue;
        std::vector<Exponent> box;
        for (std::int64_t i = 0; i <= a; ++i)
          for (std::int64_t j = 0; j <= b; ++j) box.push_back({i, j});
        std::vector<int> idx(box.size(), -3);
        for (;;) {
          LaurentPolynomial::TermMap t;
          for (std::size_t k = 0; k < box.size(); ++k)
            if (idx[k] != 0) t.emplace(box[k], idx[k]);
          const LaurentPolynomial g(2, t);
          if (!g.is_zero() && !g.is_monomial())
            if (auto q = divide_exact(f, g); q && !q->is_monomial()) reducible = true;
          std::size_t k = 0;
          while (k < idx.size() && idx[k] == 3) idx[k++] = -3;
          if (k == idx.size() || reducible) break;
          ++idx[k];
        }
      }
    const auto st = irreducibility_status(f);
    ASSERT_NE(st.verdict, IrreducibilityVerdict::Undetermined) << text;
    EXPECT_EQ(st.verdict == IrreducibilityVerdict::Reducible, reducible) << text;
  }
}

TEST(ModPDomain, Examples) {
  const auto a = mod_p_domain_check(P("y - x - 1"), 5);
  EXPECT_EQ(a.domain, std::optional<bool>(true));
  EXPECT_TRUE(a.infinite);
  EXPECT_EQ(a.status.method, IrreducibilityMethod::LinearInVariable);
  const auto b = mod_p_domain_check(P("y^2 - x^2"), 3);
  EXPECT_EQ(b.domain, std::optional<bool>(false));
  EXPECT_TRUE(b.infinite);
  const auto c = mod_p_domain_check(P("y - x - 2"), 2);
  EXPECT_EQ(c.domain, std::optional<bool>(true));
  EXPECT_TRUE(c.infinite);
  EXPECT_THROW(mod_p_domain_check(P("2*x + 2"), 2), Error);
}

TEST(AllPrimes, Examples) {
  const auto a = all_primes_certificate(P("y - x - 1"));
  EXPECT_EQ(a.status, CertificateStatus::Certified);
  EXPECT_TRUE(a.checked.empty());
  EXPECT_EQ(a.resultant, std::optional<Integer>(Integer(1)));

  const auto b = all_primes_certificate(P("y - x - 2"));
  EXPECT_EQ(b.status, CertificateStatus::Certified);
  EXPECT_EQ(b.checked, (std::vector<std::int64_t>{2}));
  ASSERT_EQ(b.results.size(), 1u);
  EXPECT_EQ(b.results[0].domain, std::optional<bool>(true));

  const auto c = all_primes_certificate(P("y^2 - x^3 - 1"));
  EXPECT_EQ(c.status, CertificateStatus::FiniteListOnly);
  EXPECT_EQ(c.checked, (std::vector<std::int64_t>{2, 3, 5, 7, 11, 13}));

  EXPECT_THROW(all_primes_certificate(P("2*y - 2")), Error);
}

TEST(AllPrimes, CertifiedPrimesReallyStayIrreducible) {
  // f = (x^2 + 3) y + (x - 1): Res = 4, lc(A) = 1, lc(B) = 1
  const auto f = P("(x^2 + 3)*y + x - 1");
  const auto cert = all_primes_certificate(f);
  ASSERT_EQ(cert.status, CertificateStatus::Certified);
  EXPECT_EQ(cert.checked, (std::vector<std::int64_t>{2, 3}));
  for (auto p : primes_up_to(60)) {
    if (std::find(cert.checked.begin(), cert.checked.end(), p) != cert.checked.end()) continue;
    EXPECT_EQ(mod_p_domain_check(f, p).domain, std::optional<bool>(true)) << p;
  }
}

TEST(MonomialDirections, Examples) {
  EXPECT_TRUE(algebraic_monomial_directions(P("y - x - 1")).empty());
  EXPECT_EQ(algebraic_monomial_directions(P("y^2 - 2*x^2")), (std::vector<Exponent>{{1, -1}}));
  EXPECT_EQ(algebraic_monomial_directions(P("y - 3")), (std::vector<Exponent>{{0, 1}}));
  try {
    algebraic_monomial_directions(P("y^2 - x^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotIrreducible);
  }
}

TEST(MonomialDirections, MinimalPolynomialOracle) {
  // On y^2 = 2 x^2 the monomial x*y^-1 satisfies 2 m^2 - 1 = 0: f divides it.
  EXPECT_TRUE(divide_exact(P("2*x^2*y^-2 - 1"), P("y^2 - 2*x^2")).has_value());
  EXPECT_TRUE(divide_exact(P("y - 3"), P("y - 3")).has_value());
  // no constant relation of degree <= 2 for x*y^-1 on y - x - 1
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        if (a == 0 && b == 0) continue;
        LaurentPolynomial rel = LaurentPolynomial::monomial({2, -2}, a) + LaurentPolynomial::monomial({1, -1}, b) +
                                LaurentPolynomial::constant(2, c);
        if (rel.is_zero()) continue;
        EXPECT_FALSE(divide_exact(rel, P("y - x - 1")).has_value());
      }
}

TEST(Krull, Examples) {
  EXPECT_EQ(krull_dimension_verdict(P("y - x - 1")).dim, std::optional<int>(2));
  EXPECT_EQ(krull_dimension_verdict(LaurentPolynomial(2)).dim, std::optional<int>(3));
  EXPECT_EQ(krull_dimension_zero_ideal(2).dim, std::optional<int>(3));
  EXPECT_FALSE(krull_dimension_verdict(P("y^2 - x^2")).dim.has_value());
  try {
    krull_dimension_verdict(P("-x*y"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnitPolynomial);
  }
}

TEST(Krull, DimensionTwoOnlyWithTorsionFreeIrreducible) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_poly(rng, 2, 4, -1, 2, 4);
    if (f.is_unit()) continue;
    const auto k = krull_dimension_verdict(f);
    if (k.dim == 2) {
      EXPECT_TRUE(torsionfree_check(f).torsion_free);
      EXPECT_EQ(irreducibility_status(f).verdict, IrreducibilityVerdict::Irreducible);
    }
  }
}
