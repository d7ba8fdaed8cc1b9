#include "walpha/walpha.hpp"

#include <algorithm>
#include <map>

namespace walpha {

SignSummary sign_summary(const DualVec& v) {
  SignSummary s;
  const Tail& t = v.tail();
  switch (t.kind()) {
    case Tail::Kind::Zero:
      s.support_finite = true;
      s.negatives_finite = true;
      s.positives_finite = true;
      s.zeros_infinite = true;
      break;
    case Tail::Kind::Geometric: {
      s.support_finite = false;
      s.zeros_infinite = false;
      if (t.ratio().sign() < 0) {
        // alternating: infinitely many entries of each sign
        s.negatives_finite = false;
        s.positives_finite = false;
      } else if (t.first().sign() > 0) {
        s.negatives_finite = true;
        s.positives_finite = false;
      } else {
        s.negatives_finite = false;
        s.positives_finite = true;
      }
      break;
    }
    case Tail::Kind::ReciprocalProduct:
      s.support_finite = false;
      s.zeros_infinite = false;
      s.negatives_finite = t.coeff().sign() > 0;
      s.positives_finite = t.coeff().sign() < 0;
      break;
  }
  return s;
}

std::string to_string(TriBool t) {
  switch (t) {
    case TriBool::Yes:
      return "yes";
    case TriBool::No:
      return "no";
    default:
      return "undecided";
  }
}

WAlphaSpace::WAlphaSpace(DualVec alpha) : alpha_(std::move(alpha)) {
  if (alpha_.l1_norm() > Rational(1))
    throw DomainError("defining functional must lie in the unit ball of l1");
}

Rational projection_constant_bound(const DualVec& alpha) {
  const Rational norm = alpha.l1_norm();
  if (norm > Rational(1))
    throw PreconditionViolated("||alpha|| <= 1 required");
  if (!alpha.finitely_supported())
    throw ResultNotRepresentable(
        "projection-constant bound has no closed form for infinite support");
  const Rational one(1);
  Rational inner = one / (one + norm);
  for (long j = 1; j <= alpha.prefix_len(); ++j) {
    const Rational aj = alpha.entry(j).abs();
    if (aj.is_zero()) continue;
    const Rational den = one + norm - Rational(2) * aj;
    if (den.is_zero()) return one;  // a = +-e_j: the sum diverges
    inner += aj / den;
  }
  return one + inner.inverse();
}

Rational bm_distance_c(const Rational& r) {
  if (r < Rational(0) || r > Rational(1))
    throw DomainError("distance formula defined for r in [0,1]");
  return (Rational(3) - r) / (Rational(1) + r);
}

Rational almost_isometric_r(const Rational& eps) {
  if (!(eps.sign() > 0)) throw DomainError("eps must be positive");
  const Rational r = (Rational(2) - eps) / (Rational(2) + eps);
  return std::max(r, Rational(0));
}

namespace {

std::map<std::string, long> abs_multiset(const DualVec& v, long upto) {
  std::map<std::string, long> m;
  for (long i = 1; i <= upto; ++i) {
    const Rational a = v.entry(i).abs();
    if (!a.is_zero()) ++m[a.str()];
  }
  return m;
}

}  // namespace

TriBool isometric_equiv(const DualVec& a, const DualVec& b) {
  if (a.l1_norm() != b.l1_norm()) return TriBool::No;
  if (a.finitely_supported() && b.finitely_supported()) {
    // Finite sign flips plus a permutation reach every arrangement of the
    // same absolute values.
    return abs_multiset(a, a.prefix_len()) == abs_multiset(b, b.prefix_len())
               ? TriBool::Yes
               : TriBool::No;
  }
  if (a.finitely_supported() != b.finitely_supported())
    return TriBool::Undecided;
  const long start = std::max(a.prefix_len(), b.prefix_len()) + 1;
  if (a.tail().advanced_to(start) == b.tail().advanced_to(start)) {
    return abs_multiset(a, start - 1) == abs_multiset(b, start - 1)
               ? TriBool::Yes
               : TriBool::Undecided;
  }
  return TriBool::Undecided;
}

bool contains_c(const WAlphaSpace& space) {
  const auto s = sign_summary(space.alpha());
  return space.rstar() == Rational(1) && s.negatives_finite &&
         s.zeros_infinite;
}

FppVerdict fpp_verdict(const WAlphaSpace& space,
                       const std::optional<Rational>& eps) {
  FppVerdict v;
  v.stable = space.rstar() < Rational(1);
  if (!v.stable && eps) v.almost_isometric_r = almost_isometric_r(*eps);
  return v;
}

ClassReport classify(const WAlphaSpace& space) {
  const DualVec& a = space.alpha();
  const Rational norm = a.l1_norm();
  const auto s = sign_summary(a);
  ClassReport r;

  // At most one nonzero entry?
  long nonzero_count = 0;
  Rational single(0);
  if (s.support_finite) {
    for (long i = 1; i <= a.prefix_len(); ++i)
      if (!a.entry(i).is_zero()) {
        ++nonzero_count;
        single = a.entry(i);
      }
  } else {
    nonzero_count = -1;  // infinitely many
  }

  r.in_C = nonzero_count == 1 && single.abs() == Rational(1);
  r.in_C0 = a.is_zero();
  const bool sign_pattern =
      s.support_finite || (s.negatives_finite && !s.positives_finite) ||
      (s.positives_finite && !s.negatives_finite);
  r.in_A = norm == Rational(1) && sign_pattern;
  r.in_A0 = sign_pattern;
  r.in_M = nonzero_count == 0 || nonzero_count == 1;
  // For these hyperplanes the G-space and M-space classes coincide, so the
  // flag is always decided.
  if (r.in_M) {
    r.in_G = TriBool::Yes;
  } else {
    r.in_G = TriBool::No;
    if (!s.negatives_finite && !s.positives_finite)
      r.notes = "both sign sets infinite";
  }
  return r;
}

}  // namespace walpha
