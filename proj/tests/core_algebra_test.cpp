/* SPDX-License-Identifier: Apache-2.0 */

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sigmaforge/error.hpp"
#include "sigmaforge/laurent.hpp"
#include "sigmaforge/parse.hpp"
#include "sigmaforge/resultant.hpp"
#include "sigmaforge/univariate_fp.hpp"
#include "test_support.hpp"

using namespace sigmaforge;
using sigmaforge::test_support::P;
using sigmaforge::test_support::random_poly;

namespace {

const std::vector<std::string> kXUV = {"x", "U", "V"};

LaurentPolynomial PU(const char* text) { return parse_poly(text, kXUV); }

bool equal_up_to_sign(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a == b || a == -b; }

// Leibniz expansion of a determinant; independent of the Bareiss route.
LaurentPolynomial leibniz_det(const std::vector<std::vector<LaurentPolynomial>>& M, int rank) {
  const std::size_t n = M.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPolynomial det(rank);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPolynomial prod = LaurentPolynomial::constant(rank, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * M[i][perm[i]];
    det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Dense univariate polynomials over Q for the gcd cross-check.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

int qgcd_degree(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

QPoly to_qpoly(const LaurentPolynomial& f) {
  QPoly p;
  for (const auto& [e, c] : f.terms()) {
    if (p.size() <= static_cast<std::size_t>(e[0])) p.resize(e[0] + 1);
    p[e[0]] = c;
  }
  return p;
}

}  // namespace

TEST(Content, Examples) {
  EXPECT_EQ(content(P("y - x - 1")), 1);
  EXPECT_EQ(content(P("2*x + 4*y")), 2);
  try {
    content(LaurentPolynomial(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
  }
}

TEST(Content, GaussLemma) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(rng, 2, 4, -2, 3, 12);
    auto g = random_poly(rng, 2, 4, -2, 3, 12);
    EXPECT_EQ(content(f * g), content(f) * content(g));
  }
}

TEST(ReduceModP, Examples) {
  auto r = reduce_mod_p(P("y - x - 2"), 2);
  EXPECT_EQ(r.lift(), P("y + x"));
  EXPECT_TRUE(reduce_mod_p(P("3*x"), 3).is_zero());
  EXPECT_EQ(reduce_mod_p(P("y - x - 2"), 3).lift(), P("y + 2*x + 1"));
  EXPECT_THROW(reduce_mod_p(P("x"), 4), Error);
}

TEST(ReduceModP, RingHomomorphism) {
  std::mt19937_64 rng(12);
  for (std::int64_t p : {2, 3, 5, 7, 13}) {
    for (int i = 0; i < 30; ++i) {
      auto f = random_poly(rng, 2, 5, -3, 3, 20);
      auto g = random_poly(rng, 2, 5, -3, 3, 20);
      EXPECT_EQ(reduce_mod_p(f * g, p), reduce_mod_p(f, p) * reduce_mod_p(g, p));
      EXPECT_EQ(reduce_mod_p(f + g, p), reduce_mod_p(f, p) + reduce_mod_p(g, p));
    }
  }
}

TEST(Resultant, Examples) {
  EXPECT_TRUE(equal_up_to_sign(resultant_univariate(PU("U - x"), PU("V - (x+1)"), 0), PU("V - U - 1")));
  EXPECT_TRUE(equal_up_to_sign(resultant_univariate(P("x", 1), P("x + 2", 1), 0), P("2", 1)));
  const auto expected = PU("(V - U - 1)^2 - 4*U");
  const auto res = resultant_univariate(PU("U - x^2"), PU("V - (x+1)^2"), 0);
  EXPECT_TRUE(equal_up_to_sign(res, expected));
  EXPECT_THROW(resultant_univariate(PU("0"), PU("x"), 0), Error);
}

TEST(Resultant, SylvesterOracle) {
  // Independent route: build the 4x4 Sylvester matrix by hand and expand it.
  const auto a = coefficients_in(PU("U - x^2"), 0);   // -1*x^2 + 0*x + U
  const auto b = coefficients_in(PU("V - (x+1)^2"), 0);
  const LaurentPolynomial z(3);
  std::vector<std::vector<LaurentPolynomial>> M = {
      {a[2], a[1], a[0], z},
      {z, a[2], a[1], a[0]},
      {b[2], b[1], b[0], z},
      {z, b[2], b[1], b[0]},
  };
  const auto oracle = leibniz_det(M, 3);
  EXPECT_EQ(oracle, PU("(V - U - 1)^2 - 4*U"));
  EXPECT_EQ(resultant_univariate(PU("U - x^2"), PU("V - (x+1)^2"), 0), oracle);
}

TEST(Resultant, VanishesIffCommonFactor) {
  std::mt19937_64 rng(13);
  int shared = 0;
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(rng, 1, 4, 0, 3, 4);
    auto b = random_poly(rng, 1, 4, 0, 3, 4);
    if (i % 2 == 0) {
      auto common = random_poly(rng, 1, 2, 0, 2, 3);
      a = a * common;
      b = b * common;
    }
    const int g = qgcd_degree(to_qpoly(a), to_qpoly(b));
    const auto res = resultant_univariate(a, b, 0);
    EXPECT_EQ(res.is_zero(), g > 0) << a.to_string() << " ; " << b.to_string();
    if (g > 0) ++shared;
  }
  EXPECT_GT(shared, 0);
}

TEST(PadicValuation, Examples) {
  EXPECT_EQ(padic_valuation(8, 2), 3u);
  EXPECT_EQ(padic_valuation(-1, 7), 0u);
  EXPECT_EQ(padic_valuation(12, 2), 2u);
  EXPECT_THROW(padic_valuation(0, 2), Error);
  EXPECT_THROW(padic_valuation(5, 6), Error);
}

TEST(PadicValuation, Additive) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> d(1, 100000);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 100; ++i) {
      Integer m = d(rng), n = -d(rng);
      EXPECT_EQ(padic_valuation(m * n, p), padic_valuation(m, p) + padic_valuation(n, p));
    }
  }
}

TEST(Laurent, UnitsAndCanonicalText) {
  EXPECT_TRUE(P("-x^-2*y").is_unit());
  EXPECT_FALSE(P("2*x").is_unit());
  EXPECT_FALSE(P("x + 1").is_unit());
  EXPECT_EQ(P("y - x - 1").to_string(), "-x + y - 1");
  EXPECT_EQ(P("x^-1*y + 2").to_string(), "2 + x^-1*y");
}

TEST(Laurent, ExactDivision) {
  auto f = P("(y - x)*(y + x^-1 + 3)");
  auto q = divide_exact(f, P("y - x"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P("y + x^-1 + 3"));
  EXPECT_FALSE(divide_exact(P("y - x - 1"), P("y - x")));
  EXPECT_FALSE(divide_exact(P("x + 1"), P("2*x + 2")));
  EXPECT_EQ(*divide_exact(P("x^3 - 1"), P("x^-1")), P("x^4 - x"));
}

TEST(UnivariateFp, FactorsMultiplyBack) {
  std::mt19937_64 rng(15);
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    for (int i = 0; i < 20; ++i) {
      std::vector<std::int64_t> c(1 + rng() % 9);
      for (auto& v : c) v = d(rng);
      c.back() = 1;
      UPolyFp f(p, c);
      if (f.degree() < 1) continue;
      UPolyFp prod(p, {1});
      for (const auto& [g, m] : factor_fp(f)) {
        EXPECT_TRUE(is_irreducible_fp(g) || g.degree() == 1);
        for (int k = 0; k < m; ++k) prod = prod * g;
      }
      EXPECT_EQ(prod, f.monic());
    }
  }
  // x^2 + 1 = (x + 1)^2 over F_2
  auto fs = factor_fp(UPolyFp(2, {1, 0, 1}));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0].second, 2);
}
