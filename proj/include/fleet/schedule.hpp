#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fleet/instance.hpp"

namespace fleet {

// Route nodes: the depot source, a task id (>= 0), or the sink.
constexpr int kSourceNode = -1;
constexpr int kSinkNode = -2;

inline bool is_task_node(int node) { return node >= 0; }

// Charging stop taken between two route nodes.
struct ChargeDetail {
  int charger = 0;
  int mode = 0;
  double start = 0.0;      // charging start time B
  double queue = 0.0;      // time spent waiting for the charger q
  double duration = 0.0;   // charging time t_c
  double post_wait = 0.0;  // idle time at the charger after charging w
  double post_soc = 0.0;   // SOC when charging ends
  // Linearized soc*wait value reported by a solver, when the leg came out of a
  // degradation-aware model. Absent for constructed or degradation-blind schedules.
  std::optional<double> idle_product_lin;
};

struct Leg {
  int from = kSourceNode;
  int to = kSinkNode;
  std::optional<ChargeDetail> charge;  // empty: direct transition

  bool is_charge() const { return charge.has_value(); }
};

struct TaskTiming {
  double start = 0.0;        // T_k
  double tardiness = 0.0;    // tard_k
  double arrival_soc = 0.0;  // s_in at the task
};

struct RobotSchedule {
  int robot = 0;
  std::vector<Leg> legs;      // ordered chain source -> ... -> sink; empty if unused
  double degradation = 0.0;   // A_r
};

struct FleetSchedule {
  std::vector<RobotSchedule> robots;
  std::map<int, TaskTiming> tasks;  // keyed by task id
  double max_degradation = 0.0;     // A_max
};

struct Metrics {
  double total_degradation = 0.0;
  double max_degradation = 0.0;
  double imbalance = 0.0;  // A_max - min_r A_r
  double total_tardiness = 0.0;
  int throughput = 0;  // tasks finished on time
  double total_queueing = 0.0;
  double solve_seconds = 0.0;
  std::optional<double> gap;
};

enum class ObjectiveMode { Exact, Linearized };

// A_r over a leg chain: charging aging alpha*t_c plus idle aging beta*soc*wait.
// Direct legs contribute nothing.
double exact_degradation(const Robot& robot, const std::vector<Leg>& legs);

// Total objective: sum A_r + lambda*sum q + mu*sum tard + rho*A_max.
// Linearized mode uses the solver-reported idle products where present.
double objective_value(const Instance& inst, const FleetSchedule& sched, const Config& cfg,
                       ObjectiveMode mode = ObjectiveMode::Exact);

// Per-robot degradation of one schedule in the requested mode.
double schedule_degradation(const Robot& robot, const RobotSchedule& rs, ObjectiveMode mode);

Metrics compute_metrics(const Instance& inst, const FleetSchedule& sched,
                        const Config& cfg = Config{});

}  // namespace fleet
