/* SPDX-License-Identifier: Apache-2.0 */

#include <algorithm>

#include "sigmaforge/error.hpp"
#include "sigmaforge/ring_checks.hpp"
#include "sigmaforge/univariate_fp.hpp"

namespace sigmaforge {

namespace {

using I64 = std::int64_t;

// f must have nonnegative exponents and involve only `var`.
UPolyFp to_univariate(const ResiduePolynomial& f, int var) {
  std::vector<I64> c;
  for (const auto& [e, v] : f.terms()) {
    const auto d = static_cast<std::size_t>(e[var]);
    if (c.size() <= d) c.resize(d + 1, 0);
    c[d] = v;
  }
  return UPolyFp(f.prime(), c);
}

ResiduePolynomial from_univariate(const UPolyFp& u, int rank, int var) {
  ResiduePolynomial::TermMap t;
  for (std::size_t i = 0; i < u.c.size(); ++i)
    if (u.c[i] != 0) {
      Exponent e(rank, 0);
      e[var] = static_cast<I64>(i);
      t.emplace(e, u.c[i]);
    }
  return ResiduePolynomial(rank, u.p, t);
}

// gcd over F_p[x_other] of the coefficients of f viewed as a polynomial in `var`.
UPolyFp content_in(const ResiduePolynomial& f, int var) {
  const int other = 1 - var;
  std::map<I64, ResiduePolynomial> slices;
  for (const auto& [e, v] : f.terms()) {
    Exponent k(2, 0);
    k[other] = e[other];
    slices.try_emplace(e[var], ResiduePolynomial(2, f.prime()));
    slices.at(e[var]) += ResiduePolynomial(2, f.prime(), {{k, v}});
  }
  UPolyFp g(f.prime(), {});
  for (const auto& [d, s] : slices) g = gcd(g, to_univariate(s, other));
  return g.monic();
}

ResiduePolynomial normalize(const ResiduePolynomial& f) { return f.clear_monomial().monic(); }

void push_univariate_factors(const UPolyFp& u, int rank, int var, std::vector<ResiduePolynomial>& out) {
  if (u.degree() <= 0) return;
  for (const auto& [g, m] : factor_fp(u)) {
    const auto r = normalize(from_univariate(g, rank, var));
    if (r.is_unit()) continue;  // the factor x itself is a unit here
    for (int i = 0; i < m; ++i) out.push_back(r);
  }
}

// Kronecker map y -> t^D with D > deg_x; injective on polynomials of x-degree < D.
UPolyFp kronecker(const ResiduePolynomial& f, I64 D) {
  std::vector<I64> c;
  for (const auto& [e, v] : f.terms()) {
    const auto k = static_cast<std::size_t>(e[0] + D * e[1]);
    if (c.size() <= k) c.resize(k + 1, 0);
    c[k] = (c[k] + v) % f.prime();
  }
  return UPolyFp(f.prime(), c);
}

ResiduePolynomial inverse_kronecker(const UPolyFp& u, I64 D) {
  ResiduePolynomial::TermMap t;
  for (std::size_t k = 0; k < u.c.size(); ++k)
    if (u.c[k] != 0) t.emplace(Exponent{static_cast<I64>(k) % D, static_cast<I64>(k) / D}, u.c[k]);
  return ResiduePolynomial(2, u.p, t);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;)
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  return false;
}

bool sorted_before(const ResiduePolynomial& a, const ResiduePolynomial& b) {
  const auto da = a.degree_in(0) + (a.rank() > 1 ? a.degree_in(1) : 0);
  const auto db = b.degree_in(0) + (b.rank() > 1 ? b.degree_in(1) : 0);
  if (da != db) return da < db;
  return a.terms() < b.terms();
}

}  // namespace

ModPFactorization factor_residue(const ResiduePolynomial& input, const FactorLimits& limits) {
  if (input.is_zero()) throw Error(Errc::ZeroResidue, "polynomial vanishes mod " + std::to_string(input.prime()));
  if (input.rank() > 2) throw Error(Errc::UnsupportedRank, "factor_mod_p supports s <= 2");
  ModPFactorization out;
  const int rank = input.rank();
  ResiduePolynomial h = input.clear_monomial();

  if (rank == 1) {
    push_univariate_factors(to_univariate(h, 0), 1, 0, out.factors);
    std::sort(out.factors.begin(), out.factors.end(), sorted_before);
    return out;
  }

  // Split off the univariate contents in each direction.
  for (int var : {1, 0}) {
    const UPolyFp c = content_in(h, var);
    if (c.degree() <= 0) continue;
    const int other = 1 - var;
    push_univariate_factors(c, 2, other, out.factors);
    h = *divide_exact(h, from_univariate(c, 2, other));
    h = h.clear_monomial();
  }

  if (!h.is_unit()) {
    if (h.degree_in(0) <= 1 || h.degree_in(1) <= 1) {
      // primitive and of degree one in some variable
      out.factors.push_back(normalize(h));
    } else if (h.size() > limits.max_support) {
      out.complete = false;
      out.reason = "support exceeds " + std::to_string(limits.max_support) + " terms";
    } else {
      const I64 D = h.degree_in(0) + 1;
      // Powers of t carry no information: a factor's image is t^j times a
      // product of the remaining pieces, so the shift j is searched instead.
      std::vector<UPolyFp> pieces;
      for (const auto& [g, m] : factor_fp(kronecker(h, D)))
        if (g != UPolyFp::x(h.prime()))
          for (int i = 0; i < m; ++i) pieces.push_back(g);
      if (pieces.size() > limits.max_univariate_factors) {
        out.complete = false;
        out.reason = std::to_string(pieces.size()) + " univariate factors after substitution";
      } else {
        // Recombine by increasing subset size; a minimal dividing subset is irreducible.
        std::size_t k = 1;
        while (!h.is_unit() && 2 * k <= pieces.size()) {
          bool found = false;
          std::vector<std::size_t> idx(k);
          for (std::size_t i = 0; i < k; ++i) idx[i] = i;
          do {
            UPolyFp prod(h.prime(), {1});
            for (auto i : idx) prod = prod * pieces[i];
            const int max_shift = kronecker(h, D).degree() - prod.degree();
            for (int j = 0; j <= max_shift && !found; ++j) {
              std::vector<I64> shift(static_cast<std::size_t>(j) + 1, 0);
              shift.back() = 1;
              const auto cand = inverse_kronecker(UPolyFp(h.prime(), shift) * prod, D).clear_monomial();
              if (cand.is_unit()) continue;
              if (auto q = divide_exact(h, cand)) {
                out.factors.push_back(normalize(cand));
                h = q->clear_monomial();
                for (std::size_t m = k; m-- > 0;) pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(idx[m]));
                found = true;
              }
            }
          } while (!found && next_combination(idx, pieces.size()));
          if (!found) ++k;
        }
        if (!h.is_unit()) out.factors.push_back(normalize(h));
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), sorted_before);
  return out;
}

ModPFactorization factor_mod_p(const LaurentPolynomial& f, std::int64_t p, const FactorLimits& limits) {
  return factor_residue(reduce_mod_p(f, p), limits);
}

}  // namespace sigmaforge
