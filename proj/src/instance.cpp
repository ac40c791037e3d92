#include "fleet/instance.hpp"

#include <set>
#include <string>

namespace fleet {

namespace {

void fail(const std::string& what) { throw std::invalid_argument("instance: " + what); }

}  // namespace

void validate_instance(const Instance& inst) {
  const auto& g = inst.geometry;
  if (g.width_m <= 0 || g.height_m <= 0) fail("warehouse dimensions must be positive");
  if (g.speed_m_per_min <= 0) fail("speed must be positive");
  if (g.energy_rate_per_min < 0) fail("energy rate must be nonnegative");
  if (!g.contains(g.depot)) fail("depot outside warehouse");
  for (const auto& p : g.charger_positions)
    if (!g.contains(p)) fail("charger position outside warehouse");

  if (g.charger_positions.size() != inst.chargers.size())
    fail("geometry charger_positions and chargers list disagree");
  std::set<int> charger_ids;
  for (std::size_t i = 0; i < inst.chargers.size(); ++i) {
    const auto& c = inst.chargers[i];
    if (!charger_ids.insert(c.id).second) fail("duplicate charger id " + std::to_string(c.id));
    if (!(c.position == g.charger_positions[i]))
      fail("charger " + std::to_string(c.id) + " position disagrees with geometry");
  }

  std::set<int> robot_ids;
  for (const auto& r : inst.robots) {
    const std::string tag = "robot " + std::to_string(r.id) + ": ";
    if (!robot_ids.insert(r.id).second) fail("duplicate robot id " + std::to_string(r.id));
    if (!(0 <= r.soc_reserve && r.soc_reserve < r.soc_initial && r.soc_initial <= r.soc_max &&
          r.soc_max <= 1.0))
      fail(tag + "need 0 <= Smin < S0 <= Smax <= 1");
    if (r.idle_aging <= 0) fail(tag + "idle aging coefficient must be positive");
    if (r.modes.empty()) fail(tag + "needs at least one charging mode");
    std::set<int> mode_ids;
    for (const auto& m : r.modes) {
      if (!mode_ids.insert(m.id).second) fail(tag + "duplicate mode id");
      if (m.rate <= 0) fail(tag + "charging rate must be positive");
      if (m.aging <= 0) fail(tag + "charging aging coefficient must be positive");
    }
  }

  double max_due = 0.0;
  std::set<int> task_ids;
  for (const auto& t : inst.tasks) {
    const std::string tag = "task " + std::to_string(t.id) + ": ";
    if (!task_ids.insert(t.id).second) fail("duplicate task id " + std::to_string(t.id));
    if (!g.contains(t.location)) fail(tag + "location outside warehouse");
    if (t.release < 0) fail(tag + "release must be nonnegative");
    if (t.due < t.release) fail(tag + "due before release");
    if (t.service <= 0) fail(tag + "service duration must be positive");
    if (!(t.energy > 0 && t.energy < 1)) fail(tag + "energy must lie in (0,1)");
    max_due = std::max(max_due, t.due);
  }

  if (inst.horizon < max_due) fail("horizon shorter than the latest due time");
  if (inst.horizon <= 0) fail("horizon must be positive");
}

void validate_config(const Config& cfg) {
  if (cfg.lambda_wait < 0 || cfg.mu_tardiness < 0 || cfg.rho_balance < 0)
    throw std::invalid_argument("config: objective weights must be nonnegative");
  if (cfg.soc_partitions < 1 || cfg.wait_partitions < 1)
    throw std::invalid_argument("config: partition counts must be >= 1");
  if (cfg.feas_tol <= 0 || cfg.int_tol <= 0 || cfg.rel_gap < 0)
    throw std::invalid_argument("config: tolerances must be positive");
}

}  // namespace fleet
