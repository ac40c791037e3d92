#include "fleet/milp/model.hpp"

#include <stdexcept>

namespace fleet::milp {

void MilpModel::validate() const {
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto& v = vars[j];
    if (v.lb > v.ub)
      throw std::invalid_argument("model: variable " + v.name + " has lb > ub");
    if (v.kind == VarKind::Binary && (v.lb < 0.0 || v.ub > 1.0))
      throw std::invalid_argument("model: binary " + v.name + " has bounds outside [0,1]");
  }
  for (const auto& row : rows)
    for (const auto& t : row.terms)
      if (t.var < 0 || t.var >= static_cast<int>(vars.size()))
        throw std::invalid_argument("model: row " + row.name + " references unknown variable");
}

}  // namespace fleet::milp
