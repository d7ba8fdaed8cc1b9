#include "walpha/fpp.hpp"

#include <utility>

#include "walpha/errors.hpp"

namespace walpha {

namespace {

bool entrywise_nonnegative(const DualVec& v) {
  for (const Rational& r : v.prefix())
    if (r.sign() < 0) return false;
  const Tail& t = v.tail();
  switch (t.kind()) {
    case Tail::Kind::Zero:
      return true;
    case Tail::Kind::Geometric:
      if (t.first().is_zero()) return true;
      if (t.first().sign() < 0) return false;
      // a negative ratio alternates; ratio zero leaves one nonneg term
      return t.ratio().sign() >= 0;
    case Tail::Kind::ReciprocalProduct:
      return t.coeff().sign() >= 0;
  }
  return false;
}

}  // namespace

SPlusVec::SPlusVec(DualVec v) : v_(std::move(v)) {
  if (!entrywise_nonnegative(v_))
    throw NotInSPlus("vector has a negative entry");
  if (v_.l1_norm() != Rational(1))
    throw NotInSPlus("vector has norm " + v_.l1_norm().str() + ", not 1");
}

SPlusVec shift_splus(const SPlusVec& x) { return SPlusVec(x.vec().shifted(1)); }

SPlusVec sample_splus(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> kind(0, 2);
  std::uniform_int_distribution<long> len(1, 6);
  std::uniform_int_distribution<long> num(0, 8);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> prefix;
  const long n = len(rng);
  for (long i = 0; i < n; ++i) prefix.emplace_back(num(rng), den(rng));

  DualVec v;
  switch (kind(rng)) {
    case 0:
      v = DualVec::from_prefix(prefix);
      break;
    case 1: {
      const Rational first(num(rng) + 1, den(rng) + 8);
      const Rational ratio(1, den(rng) + 1);
      v = DualVec(prefix, Tail::geometric(first, ratio, n + 1));
      break;
    }
    default:
      v = DualVec(prefix, Tail::reciprocal_product(n + 1, Rational(num(rng) + 1)));
      break;
  }
  const Rational norm = v.l1_norm();
  if (norm.is_zero()) return SPlusVec(DualVec::basis(1));
  return SPlusVec(v.scaled(norm.inverse()));
}

std::vector<SPlusVec> sample_splus_many(long count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SPlusVec> out;
  out.reserve(count);
  for (long i = 0; i < count; ++i) out.push_back(sample_splus(rng));
  return out;
}

Remark52Report remark52_report(const DualVec& alpha,
                               const std::optional<PrimalVec>& witness) {
  Remark52Report rep;
  rep.norm_one = alpha.l1_norm() == Rational(1);
  const WAlphaSpace space(alpha);
  rep.affine_class = classify(space).in_A;
  if (witness) {
    rep.witness_supplied = true;
    if (!space.contains(*witness))
      throw WitnessInvalid("witness is not a member of the hyperplane");
    if (witness->sup_norm() != Rational(1))
      throw WitnessInvalid("witness has sup-norm " + witness->sup_norm().str());
    rep.attainment =
        rep.norm_one && pairing(alpha, *witness).abs() == alpha.l1_norm();
  }
  return rep;
}

}  // namespace walpha
