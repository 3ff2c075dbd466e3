/* SPDX-License-Identifier: Apache-2.0 */

#include "sigmaforge/resultant.hpp"

#include <algorithm>

#include "sigmaforge/error.hpp"

namespace sigmaforge {

std::vector<LaurentPolynomial> coefficients_in(const LaurentPolynomial& f, int var) {
  if (f.is_zero()) return {};
  const std::int64_t lo = std::min<std::int64_t>(0, f.min_exponent()[var]);
  std::vector<LaurentPolynomial> out(f.max_exponent()[var] - lo + 1, LaurentPolynomial(f.rank()));
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    out[e[var] - lo] += LaurentPolynomial::monomial(rest, c);
  }
  return out;
}

LaurentPolynomial resultant_univariate(const LaurentPolynomial& a, const LaurentPolynomial& b, int var) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroInput, "resultant with a zero polynomial");
  if (a.rank() != b.rank()) throw Error(Errc::InvalidArgument, "rank mismatch");
  const int rank = a.rank();
  const auto ca = coefficients_in(a, var);
  const auto cb = coefficients_in(b, var);
  const std::size_t m = ca.size() - 1, n = cb.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return LaurentPolynomial::constant(rank, 1);

  // Rows 0..n-1 hold shifted copies of a, rows n..n+m-1 copies of b, with
  // the leading coefficient first.
  std::vector<std::vector<LaurentPolynomial>> M(size, std::vector<LaurentPolynomial>(size, LaurentPolynomial(rank)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) M[r][r + k] = ca[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) M[n + r][r + k] = cb[n - k];

  bool negate = false;
  LaurentPolynomial prev = LaurentPolynomial::constant(rank, 1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && M[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return LaurentPolynomial(rank);
      std::swap(M[k], M[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        LaurentPolynomial num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw Error(Errc::InvalidArgument, "Bareiss step was not exact");
        M[i][j] = std::move(*q);
      }
      M[i][k] = LaurentPolynomial(rank);
    }
    prev = M[k][k];
  }
  LaurentPolynomial det = M[size - 1][size - 1];
  return negate ? -det : det;
}

}  // namespace sigmaforge
