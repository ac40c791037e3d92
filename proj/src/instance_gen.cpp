#include "fleet/instance_gen.hpp"

#include <stdexcept>

#include "fleet/rng.hpp"

namespace fleet {

void validate_gen_params(const GenParams& p) {
  if (p.robots < 1 || p.tasks < 0 || p.chargers < 1)
    throw std::invalid_argument("gen: need robots >= 1, tasks >= 0, chargers >= 1");
  if (p.window_min > p.window_max || p.service_min > p.service_max ||
      p.energy_min > p.energy_max)
    throw std::invalid_argument("gen: range low exceeds high");
  if (p.service_min <= 0) throw std::invalid_argument("gen: service must be positive");
  if (p.energy_min <= 0 || p.energy_max >= 1)
    throw std::invalid_argument("gen: energy range must lie in (0,1)");
  // Releases go up to H/2 and windows up to window_max, so the horizon must
  // cover H/2 + window_max; with the 60-minute default that means H >= 120.
  if (p.horizon < 2.0 * p.window_max) throw std::invalid_argument("gen: horizon too short");
}

Instance generate(const GenParams& p) {
  validate_gen_params(p);

  Instance inst;
  inst.horizon = p.horizon;
  inst.geometry.width_m = 100.0;
  inst.geometry.height_m = 50.0;
  inst.geometry.depot = Point{0.0, 0.0};
  inst.geometry.speed_m_per_min = 60.0;
  inst.geometry.energy_rate_per_min = 0.002;

  // Chargers evenly spaced along the y=0 wall.
  for (int m = 0; m < p.chargers; ++m) {
    const Point pos{inst.geometry.width_m * (m + 1) / (p.chargers + 1), 0.0};
    inst.geometry.charger_positions.push_back(pos);
    inst.chargers.push_back(Charger{m, pos});
  }

  // Homogeneous fleet with a standard and a fast charging mode.
  for (int r = 0; r < p.robots; ++r) {
    Robot robot;
    robot.id = r;
    robot.soc_initial = 0.8;
    robot.soc_reserve = 0.1;
    robot.soc_max = 1.0;
    robot.idle_aging = 3e-5;
    robot.modes = {ChargingMode{0, "standard", 0.01, 5e-5},
                   ChargingMode{1, "fast", 0.025, 1.5e-4}};
    inst.robots.push_back(std::move(robot));
  }

  SplitMix64 rng(p.seed);
  for (int k = 0; k < p.tasks; ++k) {
    Task t;
    t.id = k;
    t.location.x = rng.uniform(0.0, inst.geometry.width_m);
    t.location.y = rng.uniform(0.0, inst.geometry.height_m);
    t.release = rng.uniform(0.0, p.horizon / 2.0);
    t.due = t.release + rng.uniform(p.window_min, p.window_max);
    t.service = rng.uniform(p.service_min, p.service_max);
    t.energy = rng.uniform(p.energy_min, p.energy_max);
    inst.tasks.push_back(t);
  }

  validate_instance(inst);
  return inst;
}

}  // namespace fleet
