/* SPDX-License-Identifier: Apache-2.0 */

#include <gtest/gtest.h>

#include "sigmaforge/error.hpp"
#include "sigmaforge/puiseux.hpp"
#include "sigmaforge/resultant.hpp"
#include "test_support.hpp"

using namespace sigmaforge;
using sigmaforge::test_support::P;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

FractionalSeries poly_t(std::map<std::int64_t, Rational> c, std::optional<std::int64_t> prec = std::nullopt) {
  FractionalSeries::Terms t;
  for (const auto& [k, v] : c) t.emplace(k, FieldElem(v));
  return FractionalSeries(1, t, prec);
}

Rational binom_half(std::int64_t k) {
  Rational r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= (q(1, 2) - i) / Rational(i + 1);
  return r;
}

int conjugacy_total(const std::vector<PuiseuxBranch>& bs) {
  int n = 0;
  for (const auto& b : bs) n += b.conjugacy_size;
  return n;
}

// every branch vanishes identically below its frontier, and the frontier
// is past t^upto
void expect_residuals_vanish(const char* text, int nterms, std::int64_t upto) {
  const auto f = P(text);
  const auto bs = puiseux_expand(f, nterms);
  EXPECT_EQ(conjugacy_total(bs), f.clear_monomial().degree_in(1)) << text;
  for (const auto& b : bs) {
    const auto r = branch_residual(f, b);
    EXPECT_TRUE(r.is_zero()) << text << ": " << r.to_string();
    if (r.precision_units()) EXPECT_GT(*r.precision_units(), upto) << text << ": " << b.series.to_string("x");
  }
}

}  // namespace

TEST(NumberField, Arithmetic) {
  const auto k = NumberField::extension({q(-2), q(0), q(1)});
  const auto a = FieldElem::generator(k);
  EXPECT_EQ(a * a, FieldElem(2));
  EXPECT_EQ((a + 1) * (a - 1), FieldElem(1));
  EXPECT_EQ((a + 1).inverse() * (a + 1), FieldElem(1));
  EXPECT_EQ(a.pow(-2), FieldElem(q(1, 2)));
  EXPECT_EQ(k->to_string(), "Q[a]/(a^2 - 2)");
  EXPECT_THROW(NumberField::extension({q(-4), q(0), q(1)}), Error);
  EXPECT_TRUE(NumberField::extension({q(1), q(2)})->is_rational());
}

TEST(Series, ArithmeticAndPrecision) {
  const auto a = poly_t({{0, 1}, {1, 1}}, 5);
  const auto b = poly_t({{1, 1}});
  const auto c = a * b;
  EXPECT_EQ(c.precision_units(), std::optional<std::int64_t>(6));
  EXPECT_EQ(c.to_string(), "t + t^2 + O(t^6)");
  EXPECT_EQ((a + b).precision_units(), std::optional<std::int64_t>(5));
  const auto h = FractionalSeries::monomial(q(1, 2));
  EXPECT_EQ(h.pow(2).normalized().to_string(), "t");
  EXPECT_EQ((h + poly_t({{1, 3}})).to_string(), "t^(1/2) + 3*t");
  EXPECT_THROW(FractionalSeries().order_units(), Error);
}

TEST(Puiseux, LinearCurve) {
  const auto bs = puiseux_expand(P("y - x - 1"), 4);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].d, 1);
  EXPECT_EQ(bs[0].conjugacy_size, 1);
  EXPECT_TRUE(bs[0].series.is_exact());
  EXPECT_TRUE(bs[0].in_t().agrees_with(poly_t({{0, 1}, {1, 1}})));
}

TEST(Puiseux, Parabola) {
  const auto bs = puiseux_expand(P("y^2 - x"), 4);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].d, 2);
  EXPECT_EQ(bs[0].conjugacy_size, 2);
  EXPECT_TRUE(bs[0].series.is_exact());
  EXPECT_EQ(bs[0].series.to_string("x"), "x^(1/2)");
  EXPECT_EQ(bs[0].in_t().to_string(), "t");
}

TEST(Puiseux, NodeMatchesBinomialSeries) {
  // y = +-t (1 + t)^(1/2)
  const auto bs = puiseux_expand(P("y^2 - x^2*(x + 1)"), 6);
  ASSERT_EQ(bs.size(), 2u);
  std::set<int> signs;
  for (const auto& b : bs) {
    EXPECT_EQ(b.d, 1);
    EXPECT_EQ(b.conjugacy_size, 1);
    const auto g = b.in_t();
    ASSERT_TRUE(g.precision_units().has_value());
    const Rational sign = g.coefficient(1).rational();
    signs.insert(sign > 0 ? 1 : -1);
    for (std::int64_t k = 0; k + 1 < *g.precision_units(); ++k)
      EXPECT_EQ(g.coefficient(Rational(k + 1)).rational(), sign * binom_half(k)) << k;
    EXPECT_GE(*g.precision_units(), 7);
  }
  EXPECT_EQ(signs, (std::set<int>{-1, 1}));
}

TEST(Puiseux, ResidualsVanishThroughT20) {
  for (const char* f : {"y - x - 1", "y^2 - x", "y^2 - x^2*(x + 1)"}) expect_residuals_vanish(f, 24, 20);
}

TEST(Puiseux, MoreCurves) {
  for (const char* f : {"y^2 - x^3", "(y - x)^2 - x^3", "y^2 + y - x", "x*y - 1", "y^3 - x^2 - x^4", "y^2 - 2*x^2",
                        "y^2 - 2*x", "y^2 - x^3 - 1", "y - x - 2", "x^3*y^2 - x + 3*y", "y^4 - 2*x^2",
                        "y^3 + x*y + x^2"})
    expect_residuals_vanish(f, 12, 8);
}

TEST(Puiseux, ExtensionBranches) {
  const auto bs = puiseux_expand(P("y^2 - 2*x^2"), 4);
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].conjugacy_size, 2);
  EXPECT_FALSE(bs[0].series.field()->is_rational());
  EXPECT_EQ(bs[0].series.to_string("x"), "a*x");
}

TEST(Puiseux, Errors) {
  EXPECT_THROW(puiseux_expand(P("x - 1"), 4), Error);
  try {
    puiseux_expand(P("x^2 + 3*x"), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotACurve);
  }
  EXPECT_THROW(puiseux_expand(LaurentPolynomial(2), 4), Error);
  // the second characteristic root would need Q(2^(1/2))(...)
  try {
    puiseux_expand(P("(y^2 - 2*x^2)^2 - x^5"), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExtensionRequired);
  }
}

TEST(PowerTwist, Examples) {
  const auto a = series_power_twist(poly_t({{0, 1}, {1, 1}}), q(1, 2));
  ASSERT_TRUE(a.precision_units().has_value());
  for (std::int64_t k = 0; k < *a.precision_units(); ++k) EXPECT_EQ(a.coefficient(Rational(k)).rational(), binom_half(k));
  EXPECT_EQ(series_power_twist(poly_t({{2, 1}}), q(1, 2)).to_string(), "t");
  EXPECT_EQ(series_power_twist(poly_t({{1, 1}}), q(3)).to_string(), "t^3");
  EXPECT_EQ(series_power_twist(poly_t({{1, 1}}), q(1), {2, 1}).to_string(), "-t");
  EXPECT_EQ(series_power_twist(poly_t({{1, 1}}), q(1, 2)).to_string(), "t^(1/2)");
  EXPECT_THROW(series_power_twist(poly_t({{1, 1}}), q(1), {3, 1}), Error);
  EXPECT_THROW(series_power_twist(poly_t({{0, 2}}), q(1, 2)), Error);
  EXPECT_THROW(series_power_twist(FractionalSeries(), q(2)), Error);
}

TEST(PowerTwist, RoundTrip) {
  const std::vector<FractionalSeries> inputs{poly_t({{0, 1}, {1, 1}}), poly_t({{0, 4}, {1, -3}, {3, q(1, 2)}}, 12),
                                             poly_t({{2, 1}, {3, 2}, {5, -1}}, 20), poly_t({{1, 1}, {4, 7}})};
  for (const auto& s : inputs)
    for (const Rational e : {q(2), q(3), q(1, 2)}) {
      if (e == q(1, 2) && s.leading_coefficient() == FieldElem(4)) continue;
      const auto back = series_power_twist(series_power_twist(s, e), 1 / e);
      EXPECT_TRUE(back.agrees_with(s)) << s.to_string() << " e=" << e.get_str() << " -> " << back.to_string();
      EXPECT_FALSE(back.is_zero());
    }
  const auto four = poly_t({{0, 4}, {1, -3}, {3, q(1, 2)}}, 12);
  EXPECT_TRUE(series_power_twist(series_power_twist(four, q(1, 2)), q(2)).agrees_with(four));
}

TEST(Relation, Examples) {
  const auto t = poly_t({{1, 1}});
  EXPECT_EQ(find_integer_relation(t, poly_t({{0, 1}, {1, 1}}), 1), P("y - x - 1"));
  EXPECT_EQ(find_integer_relation(t, t, 1), P("y - x"));
  const auto r = find_integer_relation(poly_t({{2, 1}}), poly_t({{0, 1}, {1, 2}, {2, 1}}), 2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, P("(y - x - 1)^2 - 4*x"));
}

TEST(Relation, ResultantOracle) {
  const std::vector<std::string> vars{"x", "U", "V"};
  for (const auto& [a, b, n] : std::vector<std::tuple<const char*, const char*, int>>{
           {"U - x^2", "V - (x + 1)^2", 2}, {"U - x^3", "V - (x + 2)^3", 3}, {"U - x^2", "V - (x - 1)^3", 3}}) {
    const auto res = resultant_univariate(parse_poly(a, vars), parse_poly(b, vars), 0);
    LaurentPolynomial expected(2);
    for (const auto& [e, c] : res.terms()) expected += LaurentPolynomial::monomial({e[1], e[2]}, c);
    // parametrize U = t^k, V = (t + c)^m from the strings above
    FractionalSeries u, v;
    if (std::string(b) == "V - (x + 1)^2") {
      u = poly_t({{2, 1}});
      v = poly_t({{0, 1}, {1, 2}, {2, 1}});
    } else if (std::string(b) == "V - (x + 2)^3") {
      u = poly_t({{3, 1}});
      v = poly_t({{0, 8}, {1, 12}, {2, 6}, {3, 1}});
    } else {
      u = poly_t({{2, 1}});
      v = poly_t({{0, -1}, {1, 3}, {2, -3}, {3, 1}});
    }
    const auto r = find_integer_relation(u, v, n);
    ASSERT_TRUE(r.has_value()) << b;
    EXPECT_TRUE(*r == expected || *r == -expected) << r->to_string() << " vs " << expected.to_string();
  }
}

TEST(Relation, NoRelationAndPrecision) {
  // V^2 - U - 1 has degree 2
  const auto v = series_power_twist(poly_t({{0, 1}, {1, 1}}), q(1, 2), {}, 40);
  EXPECT_FALSE(find_integer_relation(poly_t({{1, 1}}), v, 1).has_value());
  EXPECT_EQ(find_integer_relation(poly_t({{1, 1}}), v, 2), P("y^2 - x - 1"));
  try {
    find_integer_relation(poly_t({{1, 1}}), v.truncated(q(5)), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InsufficientPrecision);
  }
}

TEST(Relation, DegreeOneCurveReturnsItself) {
  for (const char* text : {"y - x - 1", "y - 2*x - 3", "2*y - x + 1", "3*y + 5*x - 7"}) {
    const auto f = P(text);
    const auto b = puiseux_expand(f, 8).front();
    const auto r = find_integer_relation(FractionalSeries::monomial(Rational(b.d)), b.in_t(), 1);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(*r == f || *r == -f) << text << " -> " << r->to_string();
  }
}

TEST(Homothety, Examples) {
  EXPECT_EQ(homothety_check(P("y - x - 1"), 1, 1, 1).verdict, HomothetyVerdict::True);
  EXPECT_EQ(homothety_check(P("y - x - 1"), 1, 2, 1).verdict, HomothetyVerdict::False);
  const auto r = homothety_check(P("y - x - 1"), 2, 2, 4);
  EXPECT_EQ(r.verdict, HomothetyVerdict::False);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.relation, P("(y - x - 1)^2 - 4*x"));
  EXPECT_THROW(homothety_check(P("y - x - 1"), 0, 1, 1), Error);
}

TEST(Homothety, DiagonalAlwaysHolds) {
  for (const char* text : {"y - x - 1", "y - x - 2", "y^2 - x", "y^2 - x^3 - 1", "x*y - x - 1"})
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(homothety_check(P(text), n, n, n).verdict, HomothetyVerdict::True) << text << n;
}

TEST(Homothety, Scan) {
  using T = std::vector<std::array<int, 3>>;
  EXPECT_EQ(homothety_scan(P("y - x - 1"), 3).accepted, (T{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}));
  EXPECT_EQ(homothety_scan(P("y - x - 1"), 1).accepted, (T{{1, 1, 1}}));
  const auto s = homothety_scan(P("y - x - 2"), 2);
  EXPECT_EQ(s.accepted, (T{{1, 1, 1}, {2, 2, 2}}));
  EXPECT_TRUE(s.undetermined.empty());
  EXPECT_THROW(homothety_scan(P("y - x - 1"), 5), Error);
}

TEST(Homothety, CurveWithoutXIsNotRigid) {
  // on y = 1 the relation V - 1 ignores x entirely
  const auto s = homothety_scan(P("y - 1"), 2);
  EXPECT_EQ(s.accepted.size(), 8u);
  EXPECT_TRUE(s.undetermined.empty());
}
