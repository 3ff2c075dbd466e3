/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/series.hpp"

#include <numeric>
#include <sstream>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

FractionalSeries::FractionalSeries(std::int64_t ramification, Terms terms, std::optional<std::int64_t> precision)
    : d_(ramification), precision_(precision) {
  if (d_ <= 0) throw Error(Errc::InvalidArgument, "ramification must be positive");
  for (auto& [k, c] : terms)
    if (!c.is_zero() && (!precision_ || k < *precision_)) terms_.emplace(k, std::move(c));
}

FractionalSeries FractionalSeries::constant(const FieldElem& c) { return FractionalSeries(1, {{0, c}}, std::nullopt); }

FractionalSeries FractionalSeries::monomial(const Rational& exponent, const FieldElem& c) {
  Rational e = exponent;
  e.canonicalize();
  const std::int64_t d = e.get_den().get_si();
  return FractionalSeries(d, {{e.get_num().get_si(), c}}, std::nullopt);
}

std::optional<Rational> FractionalSeries::precision() const {
  if (!precision_) return std::nullopt;
  Rational r(*precision_, d_);
  r.canonicalize();
  return r;
}

FieldPtr FractionalSeries::field() const {
  FieldPtr k = NumberField::rationals();
  for (const auto& [e, c] : terms_) k = common_field(k, c.field());
  return k;
}

std::int64_t FractionalSeries::order_units() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (precision_) return *precision_;
  throw Error(Errc::ZeroSeries, "order of the zero series");
}

Rational FractionalSeries::order() const {
  Rational r(order_units(), d_);
  r.canonicalize();
  return r;
}

FieldElem FractionalSeries::coefficient(const Rational& exponent) const {
  const Rational scaled = exponent * d_;
  if (scaled.get_den() != 1) return FieldElem(0);
  const std::int64_t k = scaled.get_num().get_si();
  if (precision_ && k >= *precision_)
    throw Error(Errc::InsufficientPrecision, "coefficient beyond the precision frontier");
  const auto it = terms_.find(k);
  return it == terms_.end() ? FieldElem(0) : it->second;
}

FieldElem FractionalSeries::leading_coefficient() const {
  if (terms_.empty()) throw Error(Errc::ZeroSeries, "zero series has no lowest term");
  return terms_.begin()->second;
}

FractionalSeries FractionalSeries::with_ramification(std::int64_t d2) const {
  if (d2 % d_ != 0) throw Error(Errc::InvalidArgument, "ramification must be a multiple");
  const std::int64_t m = d2 / d_;
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k * m, c);
  return FractionalSeries(d2, std::move(t), precision_ ? std::optional<std::int64_t>(*precision_ * m) : std::nullopt);
}

FractionalSeries FractionalSeries::normalized() const {
  std::int64_t g = d_;
  for (const auto& [k, c] : terms_) g = std::gcd(g, k);
  if (precision_) g = std::gcd(g, *precision_);
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k / g, c);
  return FractionalSeries(d_ / g, std::move(t), precision_ ? std::optional<std::int64_t>(*precision_ / g) : std::nullopt);
}

FractionalSeries FractionalSeries::truncated(const Rational& n) const {
  const Integer frontier = ceil_q(n * d_);
  std::int64_t p = frontier.get_si();
  if (precision_) p = std::min(p, *precision_);
  return FractionalSeries(d_, terms_, p);
}

FractionalSeries FractionalSeries::scaled(const FieldElem& c) const {
  Terms t;
  for (const auto& [k, v] : terms_) t.emplace(k, v * c);
  return FractionalSeries(d_, std::move(t), precision_);
}

std::int64_t common_ramification(const FractionalSeries& a, const FractionalSeries& b) {
  return std::lcm(a.ramification(), b.ramification());
}

namespace {

std::optional<std::int64_t> min_opt(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

FractionalSeries operator+(const FractionalSeries& a0, const FractionalSeries& b0) {
  const std::int64_t d = common_ramification(a0, b0);
  const auto a = a0.with_ramification(d), b = b0.with_ramification(d);
  FractionalSeries::Terms t = a.terms();
  for (const auto& [k, c] : b.terms()) {
    auto it = t.find(k);
    if (it == t.end())
      t.emplace(k, c);
    else
      it->second += c;
  }
  return FractionalSeries(d, std::move(t), min_opt(a.precision_units(), b.precision_units()));
}

FractionalSeries operator*(const FractionalSeries& a0, const FractionalSeries& b0) {
  const std::int64_t d = common_ramification(a0, b0);
  const auto a = a0.with_ramification(d), b = b0.with_ramification(d);
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return FractionalSeries(d, {}, std::nullopt);
  std::optional<std::int64_t> prec;
  if (a.precision_units()) prec = min_opt(prec, *a.precision_units() + b.order_units());
  if (b.precision_units()) prec = min_opt(prec, *b.precision_units() + a.order_units());
  FractionalSeries::Terms t;
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) {
      if (prec && i + j >= *prec) break;
      auto it = t.find(i + j);
      if (it == t.end())
        t.emplace(i + j, x * y);
      else
        it->second += x * y;
    }
  return FractionalSeries(d, std::move(t), prec);
}

FractionalSeries FractionalSeries::pow(unsigned k) const {
  FractionalSeries r = constant(FieldElem(1)), base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return r;
}

bool FractionalSeries::agrees_with(const FractionalSeries& o) const {
  const std::int64_t d = common_ramification(*this, o);
  const auto a = with_ramification(d), b = o.with_ramification(d);
  const auto diff = a - b;
  return diff.is_zero();
}

std::string FractionalSeries::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  auto power = [&](std::int64_t k) {
    Rational e(k, d_);
    e.canonicalize();
    if (e == 0) return std::string();
    if (e == 1) return var;
    if (e.get_den() == 1 && e > 0) return var + "^" + e.get_str();
    return var + "^(" + e.get_str() + ")";
  };
  for (const auto& [k, c] : terms_) {
    std::string coef = c.to_string();
    const bool compound = coef.find(' ') != std::string::npos;
    const bool negative = !compound && coef.front() == '-';
    if (negative) coef = coef.substr(1);
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const std::string p = power(k);
    if (p.empty())
      os << (compound ? "(" + coef + ")" : coef);
    else if (coef == "1")
      os << p;
    else
      os << (compound ? "(" + coef + ")" : coef) << "*" << p;
  }
  if (precision_) {
    os << (first ? "" : " + ") << "O(" << (power(*precision_).empty() ? "1" : power(*precision_)) << ")";
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace sigmaforge
