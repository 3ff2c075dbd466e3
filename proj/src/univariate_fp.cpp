/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/univariate_fp.hpp"

#include <algorithm>
#include <random>

#include <gmpxx.h>

#include "sigmaforge/error.hpp"
#include "sigmaforge/laurent.hpp"

namespace sigmaforge {

UPolyFp::UPolyFp(std::int64_t prime, std::vector<std::int64_t> coeffs) : p(prime), c(std::move(coeffs)) {
  for (auto& v : c) {
    v %= p;
    if (v < 0) v += p;
  }
  trim();
}

void UPolyFp::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

UPolyFp UPolyFp::monic() const {
  if (is_zero()) return *this;
  const std::int64_t inv = invmod(lead(), p);
  UPolyFp r = *this;
  for (auto& v : r.c) v = mulmod(v, inv, p);
  return r;
}

UPolyFp operator+(const UPolyFp& a, const UPolyFp& b) {
  UPolyFp r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
  r.trim();
  return r;
}

UPolyFp operator-(const UPolyFp& a, const UPolyFp& b) {
  UPolyFp r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] - b.c[i] + a.p) % a.p;
  r.trim();
  return r;
}

UPolyFp operator*(const UPolyFp& a, const UPolyFp& b) {
  UPolyFp r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
  r.trim();
  return r;
}

std::pair<UPolyFp, UPolyFp> divmod(const UPolyFp& a, const UPolyFp& b) {
  if (b.is_zero()) throw Error(Errc::ZeroInput, "polynomial division by zero");
  UPolyFp q, r = a;
  q.p = a.p;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.degree() - b.degree() + 1, 0);
  const std::int64_t inv = invmod(b.lead(), a.p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const std::int64_t f = mulmod(r.lead(), inv, a.p);
    q.c[shift] = f;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[shift + j] = (r.c[shift + j] - mulmod(f, b.c[j], a.p) + a.p) % a.p;
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPolyFp operator%(const UPolyFp& a, const UPolyFp& b) { return divmod(a, b).second; }

UPolyFp gcd(UPolyFp a, UPolyFp b) {
  while (!b.is_zero()) {
    UPolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPolyFp derivative(const UPolyFp& a) {
  UPolyFp r;
  r.p = a.p;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulmod(a.c[i], static_cast<std::int64_t>(i) % a.p, a.p);
  r.trim();
  return r;
}

namespace {

UPolyFp powmod_poly(UPolyFp base, const mpz_class& e, const UPolyFp& mod) {
  UPolyFp result(base.p, {1});
  base = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % mod;
  }
  return result;
}

// Replace x^(p*k) by x^k; valid when the derivative vanishes.
UPolyFp pth_root(const UPolyFp& a) {
  UPolyFp r;
  r.p = a.p;
  for (std::size_t i = 0; i < a.c.size(); i += static_cast<std::size_t>(a.p)) r.c.push_back(a.c[i]);
  r.trim();
  return r;
}

void squarefree(const UPolyFp& f, int mult, std::vector<std::pair<UPolyFp, int>>& out) {
  if (f.degree() < 1) return;
  UPolyFp d = derivative(f);
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.p), out);
    return;
  }
  UPolyFp g = gcd(f, d);
  UPolyFp w = divmod(f, g).first;
  int i = 1;
  while (w.degree() >= 1) {
    UPolyFp y = gcd(w, g);
    UPolyFp z = divmod(w, y).first;
    if (z.degree() >= 1) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    g = divmod(g, y).first;
  }
  if (g.degree() >= 1) squarefree(pth_root(g), mult * static_cast<int>(f.p), out);
}

void equal_degree(const UPolyFp& f, int d, std::mt19937_64& rng, std::vector<UPolyFp>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const std::int64_t p = f.p;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  for (;;) {
    std::vector<std::int64_t> coeffs(f.degree());
    for (auto& v : coeffs) v = dist(rng);
    UPolyFp a(p, coeffs);
    if (a.degree() < 1) continue;
    UPolyFp b;
    if (p == 2) {
      b = a;
      UPolyFp sq = a;
      for (int i = 1; i < d; ++i) {
        sq = (sq * sq) % f;
        b = b + sq;
      }
    } else {
      b = powmod_poly(a, (pd - 1) / 2, f) - UPolyFp(p, {1});
    }
    UPolyFp g = gcd(f, b);
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<UPolyFp, int>> factor_fp(const UPolyFp& f) {
  std::vector<std::pair<UPolyFp, int>> sqf, out;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed5eedULL);
  for (const auto& [g, mult] : sqf) {
    // distinct degree
    UPolyFp rest = g;
    UPolyFp h = UPolyFp::x(g.p) % rest;
    const UPolyFp x = UPolyFp::x(g.p);
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
      h = powmod_poly(h, mpz_class(static_cast<unsigned long>(g.p)), rest);
      UPolyFp part = gcd(rest, h - x);
      if (part.degree() >= 1) {
        std::vector<UPolyFp> pieces;
        equal_degree(part, d, rng, pieces);
        for (auto& q : pieces) out.emplace_back(std::move(q), mult);
        rest = divmod(rest, part).first;
        h = h % rest;
      }
    }
    if (rest.degree() >= 1) out.emplace_back(rest.monic(), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.first.c != b.first.c) return a.first.c < b.first.c;
    return a.second < b.second;
  });
  // merge equal factors coming from different square-free layers
  std::vector<std::pair<UPolyFp, int>> merged;
  for (auto& [q, m] : out) {
    if (!merged.empty() && merged.back().first == q)
      merged.back().second += m;
    else
      merged.emplace_back(q, m);
  }
  return merged;
}

bool is_irreducible_fp(const UPolyFp& f) {
  if (f.degree() < 1) return false;
  auto fs = factor_fp(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace sigmaforge
