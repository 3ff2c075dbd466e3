/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

namespace {

bool within_box(const Exponent& e, const Exponent& lo, const Exponent& hi) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < lo[i] || e[i] > hi[i]) return false;
  return true;
}

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

template <typename Coef>
std::string terms_text(const std::map<Exponent, Coef>& terms, const std::vector<std::string>& vars,
                       auto&& sign_of, auto&& abs_text) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = sign_of(it->second) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const std::string mono = monomial_text(it->first, vars);
    const std::string mag = abs_text(it->second);
    if (mono.empty())
      out += mag;
    else if (mag == "1")
      out += mono;
    else
      out += mag + "*" + mono;
  }
  return out;
}

}  // namespace

std::vector<std::string> default_variable_names(int rank) {
  if (rank == 1) return {"x"};
  if (rank == 2) return {"x", "y"};
  std::vector<std::string> v;
  for (int i = 1; i <= rank; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(int rank) : rank_(rank) {}

LaurentPolynomial::LaurentPolynomial(int rank, TermMap terms) : rank_(rank) {
  for (auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != rank)
      throw Error(Errc::InvalidArgument, "exponent arity does not match rank");
    add_term(e, c);
  }
}

LaurentPolynomial LaurentPolynomial::constant(int rank, const Integer& c) {
  return monomial(Exponent(rank, 0), c);
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const Integer& c) {
  LaurentPolynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(int rank, int index) {
  Exponent e(rank, 0);
  e.at(index) = 1;
  return monomial(e);
}

void LaurentPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPolynomial::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<Exponent> LaurentPolynomial::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Exponent LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "min_exponent of 0");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "max_exponent of 0");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

LaurentPolynomial LaurentPolynomial::clear_monomial() const {
  if (is_zero()) return *this;
  Exponent m = min_exponent();
  for (auto& v : m) v = -v;
  return shifted(m);
}

std::int64_t LaurentPolynomial::degree_in(int var) const {
  if (is_zero()) return -1;
  return max_exponent()[var] - min_exponent()[var];
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
  LaurentPolynomial r(rank_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(x + e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::swapped(int i, int j) const {
  LaurentPolynomial r(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    std::swap(s.at(i), s.at(j));
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.rank_ != rank_) throw Error(Errc::InvalidArgument, "rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  if (o.rank_ != rank_) throw Error(Errc::InvalidArgument, "rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.rank_ != b.rank_) throw Error(Errc::InvalidArgument, "rank mismatch");
  LaurentPolynomial r(a.rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial operator*(const Integer& c, const LaurentPolynomial& a) {
  LaurentPolynomial r(a.rank_);
  if (c == 0) return r;
  for (const auto& [e, x] : a.terms_) r.terms_.emplace(e, c * x);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(rank_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::ZeroInput, "division by zero polynomial");
  LaurentPolynomial q(a.rank_);
  if (a.is_zero()) return q;
  // NP(a) = NP(q) + NP(b), so every exponent of q lies in this box.
  const Exponent lo = a.min_exponent() - b.min_exponent();
  const Exponent hi = a.max_exponent() - b.max_exponent();
  const auto& [lead_e, lead_c] = *b.terms_.rbegin();
  LaurentPolynomial r = a;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    Exponent qe = re - lead_e;
    if (!within_box(qe, lo, hi)) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer qc = rc / lead_c;
    q.add_term(qe, qc);
    r -= LaurentPolynomial::monomial(qe, qc) * b;
  }
  return q;
}

LaurentPolynomial LaurentPolynomial::divided_by(const Integer& c) const {
  LaurentPolynomial r(rank_);
  for (const auto& [e, x] : terms_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw Error(Errc::InvalidArgument, "inexact coefficient division");
    r.terms_.emplace(e, x / c);
  }
  return r;
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& vars) const {
  return terms_text(
      terms_, vars, [](const Integer& c) { return sgn(c); },
      [](const Integer& c) { return Integer(abs(c)).get_str(); });
}

std::string LaurentPolynomial::to_string() const { return to_string(default_variable_names(rank_)); }

Integer content(const LaurentPolynomial& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "content of 0");
  Integer g = 0;
  for (const auto& [e, c] : f.terms()) g = gcd(g, c);
  return g;
}

// ---------------------------------------------------------------------------
// modular helpers

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error(Errc::ZeroArgument, "inverse of 0 mod p");
  return powmod(a, p - 2, p);
}

// ---------------------------------------------------------------------------
// ResiduePolynomial

ResiduePolynomial::ResiduePolynomial(int rank, std::int64_t prime) : rank_(rank), prime_(prime) {}

ResiduePolynomial::ResiduePolynomial(int rank, std::int64_t prime, TermMap terms)
    : rank_(rank), prime_(prime) {
  for (auto& [e, c] : terms) add_term(e, c);
}

void ResiduePolynomial::add_term(const Exponent& e, std::int64_t c) {
  c %= prime_;
  if (c < 0) c += prime_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = (it->second + c) % prime_;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t ResiduePolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<Exponent> ResiduePolynomial::support() const {
  std::vector<Exponent> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Exponent ResiduePolynomial::min_exponent() const {
  if (is_zero()) throw Error(Errc::ZeroResidue, "min_exponent of 0");
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

ResiduePolynomial ResiduePolynomial::clear_monomial() const {
  if (is_zero()) return *this;
  Exponent m = min_exponent();
  for (auto& v : m) v = -v;
  return shifted(m);
}

ResiduePolynomial ResiduePolynomial::shifted(const Exponent& e) const {
  ResiduePolynomial r(rank_, prime_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(x + e, c);
  return r;
}

ResiduePolynomial ResiduePolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(invmod(terms_.rbegin()->second, prime_));
}

std::int64_t ResiduePolynomial::degree_in(int var) const {
  if (is_zero()) return -1;
  std::int64_t lo = terms_.begin()->first[var], hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[var]);
    hi = std::max(hi, e[var]);
  }
  return hi - lo;
}

ResiduePolynomial& ResiduePolynomial::operator+=(const ResiduePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ResiduePolynomial& ResiduePolynomial::operator-=(const ResiduePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, prime_ - c);
  return *this;
}

ResiduePolynomial operator*(const ResiduePolynomial& a, const ResiduePolynomial& b) {
  if (a.prime_ != b.prime_ || a.rank_ != b.rank_)
    throw Error(Errc::InvalidArgument, "residue polynomial mismatch");
  ResiduePolynomial r(a.rank_, a.prime_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, mulmod(ca, cb, a.prime_));
  return r;
}

ResiduePolynomial ResiduePolynomial::scaled(std::int64_t c) const {
  ResiduePolynomial r(rank_, prime_);
  for (const auto& [e, x] : terms_) r.add_term(e, mulmod(x, ((c % prime_) + prime_) % prime_, prime_));
  return r;
}

std::optional<ResiduePolynomial> divide_exact(const ResiduePolynomial& a, const ResiduePolynomial& b) {
  if (b.is_zero()) throw Error(Errc::ZeroInput, "division by zero residue polynomial");
  ResiduePolynomial q(a.rank_, a.prime_);
  if (a.is_zero()) return q;
  auto box = [](const ResiduePolynomial& f) {
    Exponent lo = f.terms_.begin()->first, hi = lo;
    for (const auto& [e, c] : f.terms_)
      for (int i = 0; i < f.rank_; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    return std::pair{lo, hi};
  };
  const auto [alo, ahi] = box(a);
  const auto [blo, bhi] = box(b);
  const Exponent lo = alo - blo, hi = ahi - bhi;
  const auto& [lead_e, lead_c] = *b.terms_.rbegin();
  const std::int64_t inv = invmod(lead_c, a.prime_);
  ResiduePolynomial r = a;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms_.rbegin();
    Exponent qe = re - lead_e;
    if (!within_box(qe, lo, hi)) return std::nullopt;
    std::int64_t qc = mulmod(rc, inv, a.prime_);
    q.add_term(qe, qc);
    ResiduePolynomial step(a.rank_, a.prime_);
    step.add_term(qe, qc);
    r -= step * b;
  }
  return q;
}

LaurentPolynomial ResiduePolynomial::lift() const {
  LaurentPolynomial::TermMap t;
  for (const auto& [e, c] : terms_) t.emplace(e, Integer(static_cast<long>(c)));
  return LaurentPolynomial(rank_, std::move(t));
}

std::string ResiduePolynomial::to_string(const std::vector<std::string>& vars) const {
  return lift().to_string(vars);
}

ResiduePolynomial reduce_mod_p(const LaurentPolynomial& f, std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  ResiduePolynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) t.emplace(e, mod_p(c, p));
  return ResiduePolynomial(f.rank(), p, std::move(t));
}

// ---------------------------------------------------------------------------
// CoefficientValuation

CoefficientValuation CoefficientValuation::padic(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return {Kind::PAdic, p};
}

CoefficientValuation CoefficientValuation::residue_zero(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  return {Kind::ResidueZero, p};
}

std::int64_t CoefficientValuation::height(const Integer& c) const {
  if (kind == Kind::PAdic) return padic_valuation(c, prime);
  return 0;
}

std::string CoefficientValuation::to_string() const {
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::PAdic: return "p=" + std::to_string(prime);
    case Kind::ResidueZero: return "residue p=" + std::to_string(prime);
  }
  return "";
}

}  // namespace sigmaforge
