#include "cgeo/complement.hpp"

#include "cgeo/sweep.hpp"

namespace cgeo {

SampledRegion sampled_complement(const SampledRegion& s) {
    SampledRegion out;
    out.grid = s.grid;
    const bool open = s.topology == Topology::Open;
    const Bitmap& src = open ? s.closure_or_members() : s.members;
    const Bitmap fut = causal_sweep(src, s.grid, true, open);
    const Bitmap past = causal_sweep(src, s.grid, false, open);
    out.members.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) out.members[i] = !(fut[i] | past[i]);
    out.topology = open ? Topology::Closed : Topology::Open;
    out.label = "complement(" + s.label + ")";
    return out;
}

RegionPtr causal_complement(const RegionPtr& r, const GridWindow& g, EvalContext* ctx) {
    if (auto cf = closed_complement(r)) return cf;
    if (r->kind == Kind::Union) {
        std::vector<RegionPtr> parts;
        for (auto& k : r->kids) parts.push_back(causal_complement(k, g, ctx));
        return parts.size() == 1 ? parts[0] : make_intersection(parts);
    }
    if (r->kind == Kind::Sampled && r->sampled->grid.size() == g.size() && r->sampled->grid.h == g.h)
        return make_sampled(std::make_shared<SampledRegion>(sampled_complement(*r->sampled)));
    SampledRegion s = sample(r, g, ctx);
    s.label = "sampled";
    return make_sampled(std::make_shared<SampledRegion>(sampled_complement(s)));
}

RegionPtr causal_completion(const RegionPtr& r, const GridWindow& g, EvalContext* ctx) {
    return causal_complement(causal_complement(r, g, ctx), g, ctx);
}

}  // namespace cgeo
