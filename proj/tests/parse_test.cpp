/* SPDX-License-Identifier: Apache-2.0 */

#include <gtest/gtest.h>

#include <random>

#include "sigmaforge/error.hpp"
#include "sigmaforge/parse.hpp"
#include "test_support.hpp"

using namespace sigmaforge;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST(ParsePoly, Examples) {
  const std::vector<std::string> xy = {"x", "y"};
  auto f = parse_poly("y - x - 1", xy);
  EXPECT_EQ(f.terms(), (LaurentPolynomial::TermMap{{{0, 1}, 1}, {{1, 0}, -1}, {{0, 0}, -1}}));
  auto g = parse_poly("x^-1*y + 2", xy);
  EXPECT_EQ(g.terms(), (LaurentPolynomial::TermMap{{{-1, 1}, 1}, {{0, 0}, 2}}));
  EXPECT_EQ(code_of([&] { parse_poly("x^(1/2)", xy); }), Errc::FractionalExponent);
  EXPECT_EQ(code_of([&] { parse_poly("x^1/2", xy); }), Errc::FractionalExponent);
}

TEST(ParsePoly, Errors) {
  const std::vector<std::string> xy = {"x", "y"};
  EXPECT_EQ(code_of([&] { parse_poly("z + 1", xy); }), Errc::UnknownVariable);
  EXPECT_EQ(code_of([&] { parse_poly("x + ", xy); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_poly("(x + 1", xy); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_poly("   ", xy); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_poly("x y", xy); }), Errc::SyntaxError);
  try {
    parse_poly("x + $", xy);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
}

TEST(ParsePoly, Forms) {
  EXPECT_EQ(parse_poly("x^(-2) * y", 2), parse_poly("x^-2*y", 2));
  EXPECT_EQ(parse_poly("-(x+1)^2", 2), parse_poly("-x^2 - 2*x - 1", 2));
  EXPECT_EQ(parse_poly(" 3 * ( y - x ) ", 2), parse_poly("3*y-3*x", 2));
  EXPECT_EQ(parse_poly("a*b^-1", std::vector<std::string>{"a", "b"}).terms().begin()->first, (Exponent{1, -1}));
}

TEST(ParsePoly, PrintParseRoundTrip) {
  std::mt19937_64 rng(21);
  const std::vector<std::string> xy = {"x", "y"};
  for (int i = 0; i < 200; ++i) {
    auto f = test_support::random_poly(rng, 2, 6, -4, 4, 30);
    EXPECT_EQ(parse_poly(f.to_string(xy), xy), f) << f.to_string(xy);
  }
}
