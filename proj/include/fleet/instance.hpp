#pragma once

#include <string>
#include <vector>

#include "fleet/geometry.hpp"

namespace fleet {

struct Task {
  int id = 0;
  Point location{};
  double release = 0.0;  // a_k, minutes
  double due = 0.0;      // b_k, minutes
  double service = 0.0;  // p_k, minutes
  double energy = 0.0;   // e_k, SOC fraction
};

struct ChargingMode {
  int id = 0;
  std::string name;
  double rate = 0.0;   // SOC fraction per minute, > 0
  double aging = 0.0;  // capacity-loss fraction per minute of charging, > 0
};

struct Robot {
  int id = 0;
  double soc_initial = 0.8;
  double soc_reserve = 0.1;
  double soc_max = 1.0;
  double idle_aging = 3e-5;  // capacity-loss fraction per (SOC * minute) of post-charge idling
  std::vector<ChargingMode> modes;

  const ChargingMode& mode(int mode_id) const {
    for (const auto& m : modes)
      if (m.id == mode_id) return m;
    throw std::invalid_argument("robot " + std::to_string(id) + ": unknown charging mode " +
                                std::to_string(mode_id));
  }
};

struct Charger {
  int id = 0;
  Point position{};
};

struct Instance {
  WarehouseGeometry geometry;
  std::vector<Robot> robots;
  std::vector<Task> tasks;
  std::vector<Charger> chargers;
  double horizon = 480.0;  // H, minutes

  const Task& task(int task_id) const {
    for (const auto& t : tasks)
      if (t.id == task_id) return t;
    throw std::invalid_argument("unknown task id " + std::to_string(task_id));
  }
  const Robot& robot(int robot_id) const {
    for (const auto& r : robots)
      if (r.id == robot_id) return r;
    throw std::invalid_argument("unknown robot id " + std::to_string(robot_id));
  }
  const Charger& charger(int charger_id) const {
    for (const auto& c : chargers)
      if (c.id == charger_id) return c;
    throw std::invalid_argument("unknown charger id " + std::to_string(charger_id));
  }
};

// Objective weights, partition counts and tolerances shared by every solve path.
struct Config {
  double lambda_wait = 0.1;   // weight per minute of charger queueing
  double mu_tardiness = 1.0;  // weight per minute of tardiness
  double rho_balance = 0.5;   // weight on the fleet-maximum degradation
  int soc_partitions = 3;     // P_S
  int wait_partitions = 3;    // P_W
  double feas_tol = 1e-6;
  double int_tol = 1e-6;
  double rel_gap = 1e-6;
};

// Throws std::invalid_argument on the first violated invariant.
void validate_instance(const Instance& inst);
void validate_config(const Config& cfg);

}  // namespace fleet
