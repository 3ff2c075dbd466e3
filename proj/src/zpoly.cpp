/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/zpoly.hpp"

#include <algorithm>
#include <set>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly primitive_part(ZPoly a) {
  trim(a);
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

ZPoly derivative(const ZPoly& a) {
  ZPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Integer la = a.back(), lb = b.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  std::vector<Rational> rem(a.begin(), a.end());
  std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = rem[k + b.size() - 1] / Rational(b.back());
    for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= q[k] * Rational(b[i]);
  }
  return primitive_part(from_rationals(q));
}

ZPoly gcd_z(ZPoly a, ZPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.empty()) {
    ZPoly r = primitive_part(pseudo_rem(a, b));
    a = b;
    b = r;
  }
  return primitive_part(a);
}

ZPoly from_rationals(const std::vector<Rational>& q) {
  Integer den = 1;
  for (const auto& c : q) den = lcm(den, Integer(c.get_den()));
  ZPoly out;
  for (const auto& c : q) out.push_back(c.get_num() * (den / c.get_den()));
  return primitive_part(out);
}

Rational evaluate(const ZPoly& a, const Rational& x) {
  Rational r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + Rational(a[i]);
  return r;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  Integer m = abs(n);
  for (auto p : prime_divisors(m)) {
    int k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    std::vector<Integer> next;
    for (const auto& d : ds) {
      Integer q = d;
      for (int i = 0; i <= k; ++i, q *= p) next.push_back(q);
    }
    ds = next;
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const ZPoly& input) {
  ZPoly a = primitive_part(input);
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low >= a.size() || degree(a) - static_cast<int>(low) < 1) return {roots.begin(), roots.end()};
  const Integer& c0 = a[low];
  const Integer& cn = a.back();
  for (const auto& p : positive_divisors(c0))
    for (const auto& q : positive_divisors(cn))
      for (int s : {1, -1}) {
        Rational r(p * s, q);
        r.canonicalize();
        if (evaluate(a, r) == 0) roots.insert(r);
      }
  return {roots.begin(), roots.end()};
}

bool rational_root_of(const Rational& u, unsigned b, Rational& out) {
  if (b == 0) throw Error(Errc::InvalidArgument, "zeroth root");
  if (u < 0 && b % 2 == 0) return false;
  Integer num = abs(u.get_num()), den = u.get_den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), b) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), b) == 0) return false;
  out = Rational(u < 0 ? Integer(-rn) : rn, rd);
  out.canonicalize();
  return true;
}

bool binomial_irreducible(const Rational& u, unsigned b) {
  if (u == 0) return b == 1;
  Rational r;
  for (auto p : prime_divisors(Integer(b)))
    if (rational_root_of(u, static_cast<unsigned>(p), r)) return false;
  if (b % 4 == 0 && rational_root_of(u / Rational(-4), 4, r)) return false;
  return true;
}

}  // namespace sigmaforge
