#include "walpha/sampling.hpp"

namespace walpha {

PrimalVec sample_member(const WAlphaSpace& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> len_dist(1, 6);
  std::uniform_int_distribution<long> num_dist(-8, 8);
  std::uniform_int_distribution<long> den_dist(1, 6);

  long m = len_dist(rng);
  std::vector<Rational> prefix;
  prefix.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i)
    prefix.emplace_back(num_dist(rng), den_dist(rng));

  const DualVec& alpha = space.alpha();
  // L (1 - A(m+1)) = Sum_i alpha(i) p_i; extend the prefix until the
  // denominator is nonzero (it vanishes for at most finitely many m).
  for (;;) {
    const Rational den = Rational(1) - alpha.signed_tail_from(m + 1);
    if (!den.is_zero()) {
      Rational s(0);
      for (long i = 1; i <= m; ++i) s += alpha.entry(i) * prefix[i - 1];
      return PrimalVec(std::move(prefix), s / den);
    }
    prefix.emplace_back(num_dist(rng), den_dist(rng));
    ++m;
  }
}

std::vector<PrimalVec> sample_members(const WAlphaSpace& space, long count,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PrimalVec> out;
  out.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(sample_member(space, rng));
  return out;
}

}  // namespace walpha
