#pragma once

#include <optional>
#include <random>
#include <vector>

#include "walpha/walpha.hpp"

namespace walpha {

/// Element of the nonnegative part of the unit sphere of l1:
/// entrywise >= 0 with exact norm one. Validated on construction.
class SPlusVec {
 public:
  explicit SPlusVec(DualVec v);
  const DualVec& vec() const { return v_; }

 private:
  DualVec v_;
};

/// The right shift x -> (0, x(1), x(2), ...): an isometry of the
/// nonnegative unit sphere onto itself with no fixed point (Tx = x would
/// force every entry to equal x(1), which is summable only when x = 0).
SPlusVec shift_splus(const SPlusVec& x);

/// Deterministic random element of the nonnegative unit sphere.
SPlusVec sample_splus(std::mt19937_64& rng);
std::vector<SPlusVec> sample_splus_many(long count, std::uint64_t seed);

/// Equivalences tying norm attainment on the hyperplane to the presence
/// of extreme points of its unit ball:
///   (i)  the space is an A(S) space;
///   (ii) some unit-norm member attains |<alpha, x>| = ||alpha|| = 1;
///   (iii) the unit ball has an extreme point.
struct Remark52Report {
  bool norm_one = false;           // ||alpha|| = 1, the premise
  bool witness_supplied = false;
  bool attainment = false;         // (ii), exact, when a witness is given
  bool affine_class = false;       // (i) == (iii), via the classification
};

/// Verifies (ii) exactly against the witness when one is supplied (throws
/// WitnessInvalid if the witness is not a unit-norm member) and reports
/// (i)/(iii) through the A(S) classification flag.
Remark52Report remark52_report(const DualVec& alpha,
                               const std::optional<PrimalVec>& witness);

}  // namespace walpha
