#pragma once

#include <cstdint>

#include "fleet/instance.hpp"

namespace fleet {

// Random-instance parameters. Defaults follow the experimental setup:
// 100x50 m warehouse, depot at the origin, releases over the first half of
// an 8-hour shift, windows 15-60 min wide, service 2-8 min, energy 2-8% SOC.
struct GenParams {
  int robots = 2;
  int tasks = 20;
  int chargers = 1;
  double horizon = 480.0;
  double window_min = 15.0, window_max = 60.0;
  double service_min = 2.0, service_max = 8.0;
  double energy_min = 0.02, energy_max = 0.08;
  std::uint64_t seed = 1;
};

void validate_gen_params(const GenParams& p);

// Deterministic: one splitmix64 stream, fixed draw order
// (per task in id order: x, y, release, window, service, energy).
Instance generate(const GenParams& p);

}  // namespace fleet
