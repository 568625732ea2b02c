#include "cgeo/report_json.hpp"

#include <cstdio>

#include "cgeo/bitmap_io.hpp"
#include "cgeo/dsl.hpp"

namespace cgeo {

json to_json(const Point& p) { return p.to_vector(); }

json to_json(const GridWindow& g) { return {{"T", g.T}, {"X", g.X}, {"h", g.h}, {"s", g.s}}; }

json to_json(const PredicateReport& r) {
    json j{{"predicate", r.predicate},
           {"verdict", r.verdict},
           {"exact", r.exact},
           {"window_limited", r.window_limited},
           {"resolution", to_json(r.resolution)}};
    if (!r.witness.empty()) {
        json w = json::array();
        for (const auto& p : r.witness) w.push_back(to_json(p));
        j["witness"] = {{"kind", r.witness_kind}, {"points", w}};
    }
    if (!r.certificates.empty()) {
        json c = json::array();
        for (const auto& p : r.certificates) c.push_back(to_json(p));
        j["certificates"] = c;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const ApexRegion& a) {
    json j{{"exact", to_string(a.exact)},
           {"lattice_found", a.lattice_found},
           {"is_empty", a.is_empty()},
           {"outer_margin", a.outer_margin},
           {"warning", a.warning}};
    if (a.expr) j["region"] = region_json(a.expr);
    if (a.witness) j["witness"] = to_json(*a.witness);
    if (!a.farkas.empty()) j["farkas"] = a.farkas;
    if (!a.note.empty()) j["note"] = a.note;
    return j;
}

json to_json(const EpsilonResult& e) { return {{"eps", e.eps}, {"eps_star", e.eps_star}, {"verified", e.verified}}; }

json to_json(const EmptinessDecision& d) {
    json j{{"verdict", to_string(d.verdict)}, {"apex", to_json(d.apex)}};
    if (d.witness) j["witness"] = to_json(*d.witness);
    if (d.eps) {
        json shrunk = json::array();
        for (const auto& r : d.shrunk) shrunk.push_back(region_json(r));
        j["certificate"] = {{"epsilon", to_json(*d.eps)},
                            {"shrink_cone", region_json(d.shrink_cone)},
                            {"shrunk_inputs", shrunk},
                            {"shrunk_empty", d.shrunk_empty}};
    }
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

json to_json(const EnvelopeReport& e) {
    json w = json::array();
    for (const auto& x : e.shrunk.wedges) w.push_back(region_json(x));
    return {{"rho0", e.rho0},
            {"rho_hat", e.rho_hat},
            {"radii", e.radii_used},
            {"shrunk_cone", region_json(e.shrunk.cone)},
            {"shrunk_wedges", w},
            {"N", sampled_summary(e.N)},
            {"target_points", e.target_points},
            {"target_missing", e.target_missing},
            {"cross_term_points", e.cross_term_points},
            {"window_in_cylinder", e.window_in_cylinder},
            {"timelike_convex", to_json(e.timelike_convex)},
            {"jld", to_json(e.jld)},
            {"apex", to_json(e.apex)},
            {"ok", e.ok()}};
}

json to_json(const LocalizationResult& l) {
    json regions = json::array();
    const char* names[] = {"bold_K", "K", "bold_W", "W"};
    for (int i = 0; i < 4; ++i) {
        json r = sampled_summary(l.region(i));
        r["name"] = names[i];
        r["nonempty"] = l.nonempty[i];
        r["compact"] = l.compact[i];
        r["convex"] = l.convex[i];
        regions.push_back(r);
    }
    json j{{"regions", regions},
           {"diagram",
            {{"bold_K>=K", l.boldK_contains_K},
             {"bold_W>=W", l.boldW_contains_W},
             {"bold_K>=bold_W", l.boldK_contains_boldW},
             {"K>=W", l.K_contains_W}}},
           {"scalar", l.scalar}};
    if (!l.note.empty()) j["note"] = l.note;
    return j;
}

json to_json(const AuditReport& a) {
    json j{{"a_scalar", a.a_scalar},
           {"b_scalar", a.b_scalar},
           {"spacelike", a.spacelike},
           {"separator_valid", a.separator_valid},
           {"eps", a.eps},
           {"cover_a", a.cover_a.wedges.size()},
           {"cover_b", a.cover_b.wedges.size()},
           {"covers_separated", a.covers_separated},
           {"catalog_pair_spacelike", a.catalog_pair_spacelike},
           {"chain_complete", a.chain_complete},
           {"notes", a.notes}};
    if (a.separator) j["separator"] = region_json(a.separator);
    if (a.causal_pair[0]) j["causal_pair"] = {to_json(*a.causal_pair[0]), to_json(*a.causal_pair[1])};
    return j;
}

json to_json(const FixtureCheck& c) {
    return {{"fixture", c.fixture}, {"check", c.check}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass()},
            {"detail", c.detail}};
}

json region_json(const RegionPtr& r) {
    json j{{"kind", to_string(r->kind)}, {"n", r->n}};
    try {
        j["script"] = print_region(r);
    } catch (const std::exception&) {
        if (r->sampled) j["sampled"] = sampled_summary(*r->sampled);
    }
    return j;
}

json sampled_summary(const SampledRegion& s) {
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(bitmap_hash(s.members)));
    return {{"points", s.count()},
            {"topology", to_string(s.topology)},
            {"touches_boundary", s.touches_boundary()},
            {"hash", hash},
            {"window", to_json(s.grid)}};
}

json envelope_json(const std::string& command, json body) {
    json j{{"schema", kSchemaVersion}, {"command", command}};
    for (auto& [k, v] : body.items()) j[k] = v;
    return j;
}

json error_json(const std::string& command, const std::string& message, json detail) {
    json j{{"schema", kSchemaVersion}, {"command", command}, {"error", {{"message", message}}}};
    for (auto& [k, v] : detail.items()) j["error"][k] = v;
    return j;
}

}  // namespace cgeo
