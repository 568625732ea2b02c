#pragma once

#include "cgeo/region.hpp"

namespace cgeo {

// Lattice causal complement of a sampled set. Open input: drop lattice points
// strictly timelike to a closure sample (result closed). Otherwise drop points
// causally related to a member (result open).
SampledRegion sampled_complement(const SampledRegion& s);

// Closed form when one is known, the union rewrite next, else a sampled
// region on g.
RegionPtr causal_complement(const RegionPtr& r, const GridWindow& g, EvalContext* ctx = nullptr);
RegionPtr causal_completion(const RegionPtr& r, const GridWindow& g, EvalContext* ctx = nullptr);

}  // namespace cgeo
