#pragma once

#include "coinparadox/game.hpp"
#include "coinparadox/montecarlo.hpp"
#include "coinparadox/report.hpp"

#include <json.hpp>

namespace coinparadox {

/// JSON value that keeps keys in insertion order.
using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits, the precision of every number this library writes.
double round_significant(double x);

Json to_json(const GameTrace& trace);
Json to_json(const RandomizationResult& result);
Json to_json(const AnalysisReport& report);

/// Rebuilds a trace through make_trace. Throws ValidationError if the stored
/// resolutions disagree with the recomputed ones, Json::exception on
/// schema errors.
GameTrace trace_from_json(const Json& j);
RandomizationResult randomization_from_json(const Json& j);
AnalysisReport report_from_json(const Json& j);

} // namespace coinparadox
