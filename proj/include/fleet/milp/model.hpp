#pragma once

#include <limits>
#include <string>
#include <vector>

namespace fleet::milp {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Binary };
enum class Sense { LE, EQ, GE };

struct Variable {
  VarKind kind = VarKind::Continuous;
  double lb = 0.0;
  double ub = kInf;
  double obj = 0.0;
  std::string name;
};

struct RowTerm {
  int var = 0;
  double coeff = 0.0;
};

struct Constraint {
  std::vector<RowTerm> terms;
  Sense sense = Sense::LE;
  double rhs = 0.0;
  std::string name;
};

// Solver-neutral minimization model. Variables and rows are append-only and
// referenced by index.
struct MilpModel {
  std::vector<Variable> vars;
  std::vector<Constraint> rows;

  int add_continuous(std::string name, double lb, double ub, double obj = 0.0) {
    vars.push_back(Variable{VarKind::Continuous, lb, ub, obj, std::move(name)});
    return static_cast<int>(vars.size()) - 1;
  }

  int add_binary(std::string name, double obj = 0.0) {
    vars.push_back(Variable{VarKind::Binary, 0.0, 1.0, obj, std::move(name)});
    return static_cast<int>(vars.size()) - 1;
  }

  int add_row(std::vector<RowTerm> terms, Sense sense, double rhs, std::string name) {
    rows.push_back(Constraint{std::move(terms), sense, rhs, std::move(name)});
    return static_cast<int>(rows.size()) - 1;
  }

  int num_vars() const { return static_cast<int>(vars.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_binaries() const {
    int n = 0;
    for (const auto& v : vars) n += v.kind == VarKind::Binary;
    return n;
  }

  // Checks bound consistency, binary bounds within [0,1] and row term indices.
  void validate() const;
};

}  // namespace fleet::milp
