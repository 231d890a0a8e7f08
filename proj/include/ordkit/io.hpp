#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ordkit/cones.hpp"
#include "ordkit/fuchsian.hpp"
#include "ordkit/group.hpp"
#include "ordkit/lifts.hpp"
#include "ordkit/realization.hpp"
#include "ordkit/reconstruct.hpp"

namespace ordkit {

using Json = nlohmann::json;

// Error envelope printed on stderr by the command-line tool.
Json error_json(const std::string& code, const std::string& message);

Json bpoint_json(const BPoint& p);
Json orbit_config_json(const OrbitConfig& cfg);
Json lift_json(const LiftSpec& lift);
Json cones_json(const ConeSearchResult& res, const GroupHandle& g);
Json isolation_json(const IsolationEvidence& ev);
Json realization_json(const Realization& R, const GroupHandle& g);
Json pingpong_json(const PingPongData& pp, const PingPongReport& report);
Json generations_json(const Generations& gen);

// index,word,numerator,exponent with the word double-quoted; value = n/2^e.
std::string realization_csv(const Realization& R, const GroupHandle& g);

struct RealizationCsvRow {
  std::size_t index = 0;
  std::string word;
  std::string numerator;
  int exponent = 0;
};
std::vector<RealizationCsvRow> parse_realization_csv(const std::string& text);

// Deterministic drawings: no timestamps, fixed float precision.
std::string circle_svg(const OrbitConfig& cfg);
std::string realization_svg(const Realization& R, const GroupHandle& g,
                            std::size_t max_points = 64);

} // namespace ordkit
