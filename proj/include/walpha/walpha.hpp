#pragma once

#include <optional>
#include <string>

#include "walpha/seqcore.hpp"

namespace walpha {

/// Sign census of a DualVec, decidable from the closed-form descriptor.
struct SignSummary {
  bool support_finite = false;
  bool negatives_finite = false;   // finitely many strictly negative entries
  bool positives_finite = false;
  bool zeros_infinite = false;     // infinitely many zero entries
};

SignSummary sign_summary(const DualVec& v);

enum class TriBool { Yes, No, Undecided };
std::string to_string(TriBool t);

/// Membership flags for the classical classification of these hyperplanes.
struct ClassReport {
  bool in_C = false;    // C(K)
  bool in_C0 = false;   // C_0(K)
  bool in_A = false;    // A(S), affine functions on a Choquet simplex
  bool in_A0 = false;   // A_0(S)
  bool in_M = false;    // M-space
  TriBool in_G = TriBool::Undecided;  // G-space
  std::string notes;
};

struct FppVerdict {
  bool stable = false;
  // When r* = 1 and a tolerance eps was supplied: the smallest r such that
  // the hyperplane for r*e_1 sits within Banach-Mazur distance 1+eps of c.
  std::optional<Rational> almost_isometric_r;
};

/// The hyperplane { x in c : lim x(i) = Sum_i alpha(i) x(i) }.
class WAlphaSpace {
 public:
  explicit WAlphaSpace(DualVec alpha);

  const DualVec& alpha() const { return alpha_; }

  /// Exact membership test.
  bool contains(const PrimalVec& x) const {
    return x.limit() == pairing(alpha_, x);
  }

  /// Norm of the w*-cluster point of the dual basis.
  Rational rstar() const { return alpha_.l1_norm(); }

 private:
  DualVec alpha_;
};

inline bool membership(const WAlphaSpace& space, const PrimalVec& x) {
  return space.contains(x);
}
inline Rational rstar(const WAlphaSpace& space) { return space.rstar(); }

/// Upper bound for the projection constant of the hyperplane inside c:
///   1 + ( 1/(1+||a||) + Sum_j |a(j)| / (1 + ||a|| - 2|a(j)|) )^{-1}.
/// A vanishing denominator (only possible for a = +-e_j) makes the sum
/// diverge and the bound collapse to 1, consistent with that hyperplane
/// being isometric to c itself. Exact evaluation needs finite support;
/// infinite-support input raises ResultNotRepresentable.
Rational projection_constant_bound(const DualVec& alpha);

/// Banach-Mazur distance between c and the hyperplane of r*e_1:
/// (3 - r)/(1 + r) for r in [0, 1].
Rational bm_distance_c(const Rational& r);

/// Smallest r in [0,1] with (3-r)/(1+r) <= 1+eps, i.e. r = (2-eps)/(2+eps).
Rational almost_isometric_r(const Rational& eps);

/// Decides isometric equivalence of the two hyperplanes where the
/// finite-flip rule applies; returns Undecided outside that fragment.
TriBool isometric_equiv(const DualVec& a, const DualVec& b);

/// True iff the hyperplane contains an isometric copy of c:
/// ||alpha|| = 1, finitely many negative entries, infinitely many zeros.
bool contains_c(const WAlphaSpace& space);

FppVerdict fpp_verdict(const WAlphaSpace& space,
                       const std::optional<Rational>& eps = std::nullopt);

ClassReport classify(const WAlphaSpace& space);

}  // namespace walpha
