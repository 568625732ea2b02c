#pragma once

#include <json.hpp>
#include <string>

#include "cgeo/envelope.hpp"
#include "cgeo/fixtures.hpp"
#include "cgeo/localization.hpp"
#include "cgeo/predicates.hpp"

namespace cgeo {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Point& p);
json to_json(const GridWindow& g);
json to_json(const PredicateReport& r);
json to_json(const ApexRegion& a);
json to_json(const EpsilonResult& e);
json to_json(const EmptinessDecision& d);
json to_json(const EnvelopeReport& e);
json to_json(const LocalizationResult& l);
json to_json(const AuditReport& a);
json to_json(const FixtureCheck& c);
json region_json(const RegionPtr& r);  // canonical script plus kind
json sampled_summary(const SampledRegion& s);

// {"schema": 1, "command": name, ...body}
json envelope_json(const std::string& command, json body);
json error_json(const std::string& command, const std::string& message, json detail = json::object());

}  // namespace cgeo
