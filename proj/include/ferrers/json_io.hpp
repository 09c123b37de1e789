#pragma once

#include "json.hpp"

#include "ferrers/bijections.hpp"
#include "ferrers/identities.hpp"
#include "ferrers/odd_ferrers.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/series.hpp"

namespace ferrers {

nlohmann::json to_json(const Partition&);
nlohmann::json to_json(const OddFerrersGraph&);

// [{"q": d, "terms": [{"y": a, "z": b, "c": "<decimal>"}, ...]}, ...]
// with degrees ascending and terms sorted by (y, z); coefficients are
// decimal strings so arbitrary precision survives the round trip.
nlohmann::json to_json(const LaurentSeries&);

// {"name", "order", "pass", "discrepancy"?}
nlohmann::json to_json(const VerificationReport&);

// {"kind", "start", "terminal", "steps": [{"step", "object", "delta"}],
//  "graph_shapes"}
nlohmann::json to_json(const BijectionTrace&);

Partition partition_from_json(const nlohmann::json&);

}  // namespace ferrers
