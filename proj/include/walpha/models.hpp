#pragma once

#include <random>
#include <string>
#include <vector>

#include "walpha/seqcore.hpp"

namespace walpha {

/// Functional on the double-indexed basis {e_{i,j} : i in {1,2}, j >= 1},
/// stored row by row; no mass sits on the two limit points.
struct Omega2Functional {
  DualVec row1;
  DualVec row2;

  Rational l1_norm() const { return row1.l1_norm() + row2.l1_norm(); }
  bool is_zero() const { return row1.is_zero() && row2.is_zero(); }
};

/// Continuous function on the two-arrow compactum: each row lists the
/// values f(1/i, 1/j) and converges to the recorded value f(1/i, 0).
/// Continuity at the limit points is exactly eventual constancy.
struct Omega2Member {
  PrimalVec row1;
  PrimalVec row2;

  Rational sup_norm() const;
  static Omega2Member zero() { return {PrimalVec::zero(), PrimalVec::zero()}; }
  static Omega2Member all_ones() {
    return {PrimalVec::constant(Rational(1)), PrimalVec::constant(Rational(1))};
  }
};

Omega2Member operator+(const Omega2Member& a, const Omega2Member& b);
Omega2Member scaled(const Omega2Member& a, const Rational& c);
bool operator==(const Omega2Member& a, const Omega2Member& b);

/// The two-constraint predual
///   { f : f(1,0) = <x1*, f> and f(1/2,0) = <x2*, f> },
/// whose dual is l1 over the double-indexed basis; the basis rows
/// w*-converge to x1* and x2* respectively.
struct Omega2Model {
  Omega2Functional x1star;
  Omega2Functional x2star;
};

/// Value of a functional on a member, summing both rows.
Rational evaluate(const Omega2Functional& f, const Omega2Member& m);

/// Validates max(||x1*||, ||x2*||) <= 1; throws NormTooLarge otherwise.
Omega2Model build_model(Omega2Functional x1star, Omega2Functional x2star);

/// Exact check of both defining constraints.
bool model_membership(const Omega2Model& m, const Omega2Member& f);

/// Largest norm among the w*-cluster points {+-x1*, +-x2*} of the dual
/// basis, i.e. max(||x1*||, ||x2*||).
Rational model_rstar(const Omega2Model& m);

/// The cluster point of the basis functionals along the given row.
const Omega2Functional& cluster_point(const Omega2Model& m, int row);

/// True iff the support of the row's cluster point lies inside that row's
/// index set (the support condition under which the basis subsequence
/// yields a W_alpha copy).
bool condition_S_check(const Omega2Model& m, int row);

/// True iff |<cluster, candidate>| = ||cluster|| exactly; the candidate
/// must be a member of sup-norm one (NotAMember / NotUnitNorm otherwise).
bool condition_P_witness_check(const Omega2Model& m,
                               const Omega2Member& candidate, int row);

/// The three conditions needed for a c-copy from a basis row:
///   (1) the row converges to its cluster point (by construction);
///   (2) every basis functional of the row has support disjoint from the
///       cluster point's support;
///   (3) every basis functional of the row, and the cluster point itself,
///       take the value 1 at the candidate.
/// The candidate must be a member (NotAMember otherwise).
struct Cor41Report {
  bool basis_converges = false;
  bool supports_disjoint = false;
  bool values_one = false;
  std::string cluster_identity;  // printable form of the row's cluster
  bool all() const { return basis_converges && supports_disjoint && values_one; }
};

Cor41Report cor41_witness_check(const Omega2Model& m,
                                const Omega2Member& candidate, int row);

/// Random member: random small-rational row prefixes with the two limits
/// solved exactly from the defining constraints.
Omega2Member sample_model_member(const Omega2Model& m, std::mt19937_64& rng);
std::vector<Omega2Member> sample_model_members(const Omega2Model& m, long count,
                                               std::uint64_t seed);

// Worked models. Identifiers match the CLI catalog names.
Omega2Model model_example_4_2();                     // cross-supported 1/2^j
Omega2Model model_example_6_7();                     // same data as 4.2
Omega2Model model_example_6_8();                     // alternating rows
Omega2Model model_remark_6_4();                      // x2* = 0, ||x1*|| = 1
Omega2Model model_example_9_3(const Rational& r1, const Rational& r2);

/// Catalog lookup by identifier: example-4.2, example-6.7, example-6.8,
/// remark-6.4, example-9.3(r1,r2). Throws ParseError on unknown names.
Omega2Model model_catalog(const std::string& id);

}  // namespace walpha
