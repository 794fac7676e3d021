#pragma once

#include <string>

#include <json.hpp>

#include "iwip/decide.hpp"
#include "iwip/subgroups.hpp"

namespace iwip {

nlohmann::json matrix_to_json(const TransitionMatrix& a);
nlohmann::json witness_to_json(const Report& report, const Witness& w);
nlohmann::json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

nlohmann::json turn_to_json(const Graph& g, const Turn& t);
std::string turn_to_string(const Graph& g, const Turn& t);
std::string segment_to_string(const Graph& g, const Segment& s);

}  // namespace iwip
