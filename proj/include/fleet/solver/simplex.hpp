#pragma once

#include <memory>
#include <vector>

#include "fleet/milp/model.hpp"

namespace fleet::solver {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit, Singular };

struct LpResult {
  LpStatus status = LpStatus::IterLimit;
  double objective = 0.0;
  std::vector<double> values;  // structural variables, empty unless Optimal
  long iterations = 0;
};

// Bounded-variable revised primal simplex. Rows are handled as logical
// variables with range bounds (Ax - s = 0), so any mix of <=, =, >= works
// without artificials. Deterministic: Dantzig pricing, switching to Bland's
// rule when a degenerate stretch suggests cycling.
class SimplexSolver {
 public:
  explicit SimplexSolver(const milp::MilpModel& model, double feas_tol = 1e-7,
                         double opt_tol = 1e-7);
  ~SimplexSolver();
  SimplexSolver(const SimplexSolver&) = delete;
  SimplexSolver& operator=(const SimplexSolver&) = delete;

  // Cold solve with the model's own bounds.
  LpResult solve();

  // Cold solve with overridden structural-variable bounds (branch-and-bound
  // nodes). Vectors must have one entry per model variable.
  LpResult solve_with_bounds(const std::vector<double>& lb, const std::vector<double>& ub);

  int num_structural() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One-shot LP solve of the model's relaxation (integrality dropped).
LpResult solve_lp(const milp::MilpModel& model, double feas_tol = 1e-7, double opt_tol = 1e-7);

}  // namespace fleet::solver
