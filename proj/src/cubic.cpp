#include "walpha/cubic.hpp"

#include <algorithm>

namespace walpha {

RepresentingMatrix::RepresentingMatrix(DualVec alpha)
    : alpha_(std::move(alpha)) {
  if (alpha_.l1_norm() > Rational(1))
    throw DomainError("representing matrix requires ||alpha|| <= 1");
}

Rational RepresentingMatrix::a(long i, long n) const {
  if (i < 1 || i > n) throw DomainError("a(i,n) requires 1 <= i <= n");
  const Rational den = Rational(1) - tail_sum(n + 1);
  if (den.is_zero())
    throw DegenerateTail("A(n+1) = 1 at n = " + std::to_string(n));
  return alpha_.entry(i) / den;
}

Rational RepresentingMatrix::row_abs_sum(long n) const {
  Rational s(0);
  for (long i = 1; i <= n; ++i) s += a(i, n).abs();
  return s;
}

PrimalVec RepresentingMatrix::basis_vector(long i, long n) const {
  const Rational value = a(i, n);
  std::vector<Rational> prefix(static_cast<size_t>(n), Rational(0));
  prefix[static_cast<size_t>(i - 1)] = Rational(1);
  return PrimalVec(std::move(prefix), value);
}

Rational RepresentingMatrix::delta_direct(long k, long window) const {
  if (window < 1 || k < 1) throw DomainError("delta requires k,window >= 1");
  const long n = window;
  // M[p][q] = a_{k+p}^{k+q} above the diagonal band, -1 on the subdiagonal.
  std::vector<std::vector<Rational>> m(
      static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (long p = 0; p < n; ++p)
    for (long q = 0; q < n; ++q) {
      if (q >= p)
        m[p][q] = a(k + p, k + q);
      else if (q == p - 1)
        m[p][q] = Rational(-1);
      else
        m[p][q] = Rational(0);
    }
  // Exact Gaussian elimination with row pivoting.
  Rational det(1);
  for (long col = 0; col < n; ++col) {
    long pivot = -1;
    for (long row = col; row < n; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (long row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational factor = m[row][col] * inv;
      for (long q = col; q < n; ++q) m[row][q] -= factor * m[col][q];
    }
  }
  return det;
}

Rational RepresentingMatrix::delta_recursive(long k, long window) const {
  if (window < 1 || k < 1) throw DomainError("delta requires k,window >= 1");
  const auto key = std::make_pair(k, window);
  if (auto it = delta_memo_.find(key); it != delta_memo_.end())
    return it->second;
  Rational value(0);
  if (window == 1) {
    value = a(k, k);
  } else {
    // Delta(k,n) = a_k^{k+n-1} + Sum_{j=k+1}^{k+n-1} a_j^{k+n-1} Delta(k,j-k)
    const long top = k + window - 1;
    value = a(k, top);
    for (long j = k + 1; j <= top; ++j)
      value += a(j, top) * delta_recursive(k, j - k);
  }
  delta_memo_[key] = value;
  return value;
}

std::vector<Rational> RepresentingMatrix::expand_in_basis(long k,
                                                          long n) const {
  if (k < 1 || k > n) throw DomainError("expand requires 1 <= k <= n");
  std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
  c[static_cast<size_t>(k - 1)] = Rational(1);
  for (long level = k; level < n; ++level) {
    Rational next(0);
    for (long i = 1; i <= level; ++i)
      next += c[static_cast<size_t>(i - 1)] * a(i, level);
    c[static_cast<size_t>(level)] = next;
  }
  return c;
}

LimitCheckReport RepresentingMatrix::limit_condition_check(
    long k, const Rational& tol) const {
  if (alpha_.l1_norm() != Rational(1))
    throw PreconditionViolated("limit condition check requires ||alpha|| = 1");
  if (!(tol.sign() > 0)) throw DomainError("tolerance must be positive");

  LimitCheckReport rep;
  rep.tolerance = tol;
  rep.eps = tol / Rational(6);

  long N = std::max<long>(k, 1);
  while (alpha_.abs_tail_from(N + 1) > rep.eps) ++N;
  rep.tail_cutoff = N;

  // Rows past M are eps-close to alpha in aggregate:
  // Sum_i |a_i^n - alpha(i)| <= ||alpha|| t/(1-t) <= t/(1-t),
  // with t the absolute tail past n.
  long M = N;
  while (true) {
    const Rational t = alpha_.abs_tail_from(M + 2);
    if (t < Rational(1) && t / (Rational(1) - t) <= rep.eps) break;
    ++M;
  }
  rep.entry_cutoff = M;

  const long n = std::max({M + 2, N + 1, k + 2, static_cast<long>(2)});
  rep.window = n;
  rep.truncation = n - 1;

  Rational truncated = alpha_.entry(k);
  for (long j = k + 1; j <= n - 1; ++j)
    truncated += alpha_.entry(j) * delta_recursive(k, j - k);
  rep.residual = (delta_recursive(k, n) - truncated).abs();
  rep.passed = rep.residual <= tol;
  return rep;
}

}  // namespace walpha
