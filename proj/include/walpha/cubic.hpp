#pragma once

#include <map>
#include <utility>
#include <vector>

#include "walpha/walpha.hpp"

namespace walpha {

/// Report of the quantitative check that the row limits of a representing
/// matrix pin the space down (the 6-epsilon scheme).
struct LimitCheckReport {
  bool passed = false;
  Rational eps;        // tol / 6
  long tail_cutoff;    // N: abs tail from N+1 is <= eps
  long entry_cutoff;   // M: rows beyond M are eps-close to alpha in l1
  long window;         // n used for the determinant evaluation
  long truncation;     // J = n - 1, series cut where the tail is <= eps
  Rational residual;   // |Delta(k,n) - truncated series|, exact
  Rational tolerance;
};

/// Triangular array a_i^n = alpha(i) / (1 - A(n+1)) with
/// A(n) = Sum_{j>=n} alpha(j), encoding the chain of finite-dimensional
/// sup-norm subspaces that exhausts the hyperplane.
class RepresentingMatrix {
 public:
  explicit RepresentingMatrix(DualVec alpha);

  const DualVec& alpha() const { return alpha_; }

  /// A(n) = Sum_{j>=n} alpha(j).
  Rational tail_sum(long n) const { return alpha_.signed_tail_from(n); }

  /// a_i^n, 1 <= i <= n; throws DegenerateTail when A(n+1) = 1.
  Rational a(long i, long n) const;

  /// Sum_{i<=n} |a_i^n|; always <= 1.
  Rational row_abs_sum(long n) const;

  /// e_i^n: 1 at position i, zeros through n, constant a_i^n afterwards.
  PrimalVec basis_vector(long i, long n) const;

  /// Determinant of the almost-triangular window anchored at row k with
  /// `window` columns, evaluated by exact Gaussian elimination.
  Rational delta_direct(long k, long window) const;

  /// Same value through the Hessenberg recursion, memoized.
  Rational delta_recursive(long k, long window) const;

  /// Coefficients of e_k^k in the basis {e_i^n}_{i<=n}, obtained by
  /// iterating the one-step recursion; independent route to the deltas.
  std::vector<Rational> expand_in_basis(long k, long n) const;

  /// Quantitative row-limit condition; requires ||alpha|| = 1.
  LimitCheckReport limit_condition_check(long k, const Rational& tol) const;

 private:
  DualVec alpha_;
  mutable std::map<std::pair<long, long>, Rational> delta_memo_;
};

}  // namespace walpha
