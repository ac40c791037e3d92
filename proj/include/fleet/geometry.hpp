#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fleet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

inline double manhattan(const Point& a, const Point& b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Rectangular warehouse with a corner depot and wall-mounted chargers.
// All times are minutes, all energies are SOC fractions.
struct WarehouseGeometry {
  double width_m = 100.0;
  double height_m = 50.0;
  Point depot{0.0, 0.0};
  std::vector<Point> charger_positions;
  double speed_m_per_min = 60.0;       // 1 m/s
  double energy_rate_per_min = 0.002;  // SOC fraction drained per minute of travel

  bool contains(const Point& p) const {
    return p.x >= 0.0 && p.x <= width_m && p.y >= 0.0 && p.y <= height_m;
  }
};

struct Travel {
  double minutes = 0.0;
  double energy = 0.0;  // SOC fraction
};

// Manhattan travel between two points of the warehouse.
inline Travel travel(const WarehouseGeometry& g, const Point& a, const Point& b) {
  if (!g.contains(a) || !g.contains(b))
    throw std::invalid_argument("travel: point outside warehouse");
  const double minutes = manhattan(a, b) / g.speed_m_per_min;
  return Travel{minutes, g.energy_rate_per_min * minutes};
}

}  // namespace fleet
