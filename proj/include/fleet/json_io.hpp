#pragma once

#include <string>

#include "fleet/instance.hpp"
#include "fleet/schedule.hpp"

#include <json.hpp>

namespace fleet {

using ordered_json = nlohmann::ordered_json;

// Instance and FleetSchedule files carry "schema_version": 1. Loading rejects
// unknown fields and wrong versions; save followed by load is lossless.

ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const ordered_json& j);
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

ordered_json schedule_to_json(const FleetSchedule& sched);
FleetSchedule schedule_from_json(const ordered_json& j);
void save_schedule(const FleetSchedule& sched, const std::string& path);
FleetSchedule load_schedule(const std::string& path);

ordered_json config_to_json(const Config& cfg);
Config config_from_json(const ordered_json& j);
Config load_config(const std::string& path);

}  // namespace fleet
