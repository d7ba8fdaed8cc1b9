#pragma once

#include <random>

#include "walpha/walpha.hpp"

namespace walpha {

/// Deterministic random member of the hyperplane: a random small-rational
/// prefix, with the limit solved exactly from the defining equation.
PrimalVec sample_member(const WAlphaSpace& space, std::mt19937_64& rng);

std::vector<PrimalVec> sample_members(const WAlphaSpace& space, long count,
                                      std::uint64_t seed);

}  // namespace walpha
