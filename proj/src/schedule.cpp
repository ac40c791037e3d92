#include "fleet/schedule.hpp"

#include <algorithm>
#include <limits>

namespace fleet {

double exact_degradation(const Robot& robot, const std::vector<Leg>& legs) {
  double total = 0.0;
  for (const auto& leg : legs) {
    if (!leg.is_charge()) continue;
    const auto& c = *leg.charge;
    const ChargingMode& mode = robot.mode(c.mode);  // throws on unknown mode
    total += mode.aging * c.duration + robot.idle_aging * c.post_soc * c.post_wait;
  }
  return total;
}

double schedule_degradation(const Robot& robot, const RobotSchedule& rs, ObjectiveMode mode) {
  if (mode == ObjectiveMode::Exact) return exact_degradation(robot, rs.legs);
  double total = 0.0;
  for (const auto& leg : rs.legs) {
    if (!leg.is_charge()) continue;
    const auto& c = *leg.charge;
    const double idle = c.idle_product_lin ? *c.idle_product_lin : c.post_soc * c.post_wait;
    total += robot.mode(c.mode).aging * c.duration + robot.idle_aging * idle;
  }
  return total;
}

double objective_value(const Instance& inst, const FleetSchedule& sched, const Config& cfg,
                       ObjectiveMode mode) {
  double deg_sum = 0.0, deg_max = 0.0, queue_sum = 0.0, tard_sum = 0.0;
  for (const auto& rs : sched.robots) {
    const double a = schedule_degradation(inst.robot(rs.robot), rs, mode);
    deg_sum += a;
    deg_max = std::max(deg_max, a);
    for (const auto& leg : rs.legs)
      if (leg.is_charge()) queue_sum += leg.charge->queue;
  }
  for (const auto& [id, t] : sched.tasks) tard_sum += t.tardiness;
  return deg_sum + cfg.lambda_wait * queue_sum + cfg.mu_tardiness * tard_sum +
         cfg.rho_balance * deg_max;
}

Metrics compute_metrics(const Instance& inst, const FleetSchedule& sched, const Config& cfg) {
  Metrics m;
  double deg_min = std::numeric_limits<double>::infinity();
  for (const auto& rs : sched.robots) {
    const double a = exact_degradation(inst.robot(rs.robot), rs.legs);
    m.total_degradation += a;
    m.max_degradation = std::max(m.max_degradation, a);
    deg_min = std::min(deg_min, a);
    for (const auto& leg : rs.legs)
      if (leg.is_charge()) m.total_queueing += leg.charge->queue;
  }
  if (!sched.robots.empty()) m.imbalance = m.max_degradation - deg_min;
  for (const auto& [id, t] : sched.tasks) {
    m.total_tardiness += t.tardiness;
    if (t.tardiness <= cfg.feas_tol) ++m.throughput;
  }
  return m;
}

}  // namespace fleet
