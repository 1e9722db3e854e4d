#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "destab/building.hpp"
#include "destab/ideal.hpp"
#include "destab/kempf.hpp"
#include "destab/state.hpp"
#include "destab/testconfig.hpp"
#include "destab/weights.hpp"

namespace destab {

// All serialized output uses insertion-ordered JSON so renderings are
// byte-identical across runs.
using Json = nlohmann::ordered_json;

// Accepts either inline JSON (text starting with '{' or '[') or a path to a
// JSON file; InputError on unreadable files or malformed JSON.
Json json_or_path_load(const std::string& text_or_path);

// --- Input formats ----------------------------------------------------------

// Ideal file: {"variables": ["x", ...], "generators": ["x*z - y^2", ...]}.
HomogeneousIdeal load_ideal(const Json& j);

// Weight file: {"weights": [..]} or a bare integer array.
WeightVector load_weights(const Json& j);

// State file: {"characters": [[..], ..]} with optional "labels" and optional
// "degree" (defaults to the common coordinate sum of the characters).
struct StateInput {
  StateSet state;
  long long degree = 0;
};
StateInput load_state(const Json& j);

// Matrix: array of equal-length rows; entries are integers or "p/q" strings.
ExactMatrix load_matrix(const Json& j);

// --- Report serializers ------------------------------------------------------
// `approx` adds an "approx" subobject of %.12g decimal strings marked
// non-authoritative; the exact string fields are always present.

Json ideal_json(const HomogeneousIdeal& I);
Json apartment_json(const ApartmentPoint& point);
Json normalized_json(const NormalizedValue& value, bool approx);
Json weight_report_json(const WeightReport& report, bool approx);
Json min_norm_json(const MinNormResult& result, bool approx);
Json destabilizer_json(const DestabilizerReport& report, bool approx);
Json building_point_json(const BuildingPoint& point, bool approx);
Json almost_trivial_json(const AlmostTrivialReport& report);
Json df_json(const DFReport& report, bool approx);
Json sweep_json(const SweepReport& report, bool approx);

// Renders a report as pretty JSON or as an indented key/value table.
// InputError on unknown format names (accepted: "json", "table").
std::string render(const Json& j, const std::string& format);

}  // namespace destab
