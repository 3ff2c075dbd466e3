/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/number_field.hpp"

#include <sstream>

#include "sigmaforge/error.hpp"
#include "sigmaforge/laurent.hpp"
#include "sigmaforge/ring_checks.hpp"
#include "sigmaforge/zpoly.hpp"

namespace sigmaforge {

namespace {

using QPoly = std::vector<Rational>;

void trim_q(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m for monic m
QPoly reduce(QPoly a, const QPoly& m) {
  const std::size_t k = m.size() - 1;
  for (std::size_t i = a.size(); i-- > k;) {
    if (a[i] == 0) continue;
    const Rational c = a[i];
    for (std::size_t j = 0; j <= k; ++j) a[i - k + j] -= c * m[j];
  }
  a.resize(k, Rational(0));
  return a;
}

// quotient and remainder over Q
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim_q(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    const std::size_t s = r.size() - b.size();
    const Rational c = r.back() / b.back();
    q[s] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[s + i] -= c * b[i];
    trim_q(r);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_q(a);
  return a;
}

bool proven_irreducible(const QPoly& m) {
  const ZPoly z = from_rationals(m);
  const int n = degree(z);
  if (n <= 1) return n == 1;
  if (!rational_roots(z).empty()) return false;
  if (n <= 3) return true;
  LaurentPolynomial f(1);
  for (int i = 0; i <= n; ++i)
    if (z[i] != 0) f += LaurentPolynomial::monomial({i}, z[i]);
  return irreducibility_status(f).verdict == IrreducibilityVerdict::Irreducible;
}

}  // namespace

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField({Rational(0), Rational(1)}));
  return q;
}

FieldPtr NumberField::extension(const std::vector<Rational>& m) {
  QPoly monic = m;
  trim_q(monic);
  if (monic.size() < 2) throw Error(Errc::InvalidArgument, "minimal polynomial must have positive degree");
  if (monic.size() == 2) return rationals();
  if (!proven_irreducible(monic))
    throw Error(Errc::ExtensionRequired, "minimal polynomial not proven irreducible over Q");
  const Rational lc = monic.back();
  for (auto& c : monic) c /= lc;
  return FieldPtr(new NumberField(std::move(monic)));
}

std::string NumberField::to_string() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q[a]/(";
  bool first = true;
  for (std::size_t i = minpoly_.size(); i-- > 0;) {
    const Rational& c = minpoly_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << "a" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  os << ")";
  return os.str();
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b || b->is_rational()) return a;
  if (a->is_rational()) return b;
  if (a->minimal_polynomial() == b->minimal_polynomial()) return a;
  throw Error(Errc::InvalidArgument, "elements of two different extension fields");
}

FieldElem::FieldElem(const Rational& q) : field_(NumberField::rationals()), coords_{q} {}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)) {
  coords_ = reduce(std::move(coords), field_->minimal_polynomial());
  for (auto& c : coords_) c.canonicalize();
}

FieldElem FieldElem::generator(FieldPtr field) {
  if (field->is_rational()) return FieldElem(-field->minimal_polynomial()[0]);
  return FieldElem(field, {Rational(0), Rational(1)});
}

bool FieldElem::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational FieldElem::rational() const {
  if (!is_rational()) throw Error(Errc::InvalidArgument, "element is not rational");
  return coords_[0];
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

namespace {

// coordinates of a padded to the degree of field k
std::vector<Rational> lift_to(const FieldElem& a, const FieldPtr& k) {
  std::vector<Rational> c = a.coords();
  c.resize(static_cast<std::size_t>(k->degree()), Rational(0));
  return c;
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  const FieldPtr k = common_field(a.field(), b.field());
  auto x = lift_to(a, k), y = lift_to(b, k);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return FieldElem(k, std::move(x));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const FieldPtr k = common_field(a.field(), b.field());
  return FieldElem(k, mul(lift_to(a, k), lift_to(b, k)));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroArgument, "inverse of zero");
  if (field_->is_rational()) return FieldElem(1 / coords_[0]);
  // extended Euclid: s*a + t*m = 1
  QPoly r0 = field_->minimal_polynomial(), r1 = coords_;
  trim_q(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because m is irreducible
  for (auto& c : s0) c /= r0[0];
  return FieldElem(field_, std::move(s0));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElem r = FieldElem(field_, {Rational(1)}), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }

std::string FieldElem::to_string(const std::string& gen) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    const Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << gen << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace sigmaforge
