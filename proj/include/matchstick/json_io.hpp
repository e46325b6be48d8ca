#pragma once

#include <string>

#include <json.hpp>

#include "matchstick/construct.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/rigidity.hpp"
#include "matchstick/verify.hpp"

namespace matchstick {

using Json = nlohmann::ordered_json;

// Non-finite numbers are written as null.
Json to_json(const VerificationReport& r);
Json to_json(const RigidityReport& r, std::size_t tail = 10);
Json to_json(const CoverageTable& t);
Json to_json(const CoverageCertificate& c);
Json to_json(const DegreeProfile& p);

/// {"name", "parts": [{"source", "reflect"}], "identifications":
/// [{"part_a", "slot_a", "part_b", "slot_b"}]}. Part sources are segment
/// file paths or corpus names; the part label is its source.
CompositionPlan plan_from_json(const Json& j);
Json plan_to_json(const CompositionPlan& plan);

}  // namespace matchstick
