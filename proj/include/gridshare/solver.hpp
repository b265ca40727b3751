#ifndef GRIDSHARE_SOLVER_HPP
#define GRIDSHARE_SOLVER_HPP

#include <string>
#include <vector>

#include "gridshare/model.hpp"

namespace gridshare {

enum class SolveStatus { Optimal, Infeasible, Unbounded, Limit };

struct SolveOptions {
  double gap_tol = 1e-6;      // MILP relative gap
  double time_limit_s = 0.0;  // 0 = none
  int threads = 1;            // keep 1 for determinism
  bool log = false;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<double> primal;
  // Row duals, LP only (empty when the model has binaries). Sign convention:
  // dual[i] = d(objective)/d(rhs of row i), i.e. positive when tightening a
  // binding >= row upward raises the optimum.
  std::vector<double> row_dual;
  // Reduced costs per column, LP only; same sensitivity convention w.r.t. the
  // binding variable bound.
  std::vector<double> col_dual;
  double objective = 0.0;
  double gap = 0.0;
  double wall_time_s = 0.0;

  double value(VarId v) const { return primal.at(static_cast<size_t>(v.v)); }
  double dual(RowId r) const { return row_dual.at(static_cast<size_t>(r.v)); }
  double reduced_cost(VarId v) const { return col_dual.at(static_cast<size_t>(v.v)); }
  double eval(const LinExpr& e) const;
  bool optimal() const { return status == SolveStatus::Optimal; }
};

// Solves with the HiGHS backend. Throws BackendError on engine failure;
// infeasible/unbounded/limit outcomes are reported via status, not thrown.
SolveOutcome solve(const ModelInstance& model, const SolveOptions& opts = {});

// Writes the model in CPLEX LP interchange format with the instance's
// variable and row names. Readable back by the backend for cross-checks.
void write_lp(const ModelInstance& model, const std::string& path);

// Solves a previously written LP file; returns its optimal objective.
// Used to verify the interchange round-trip.
double solve_lp_file(const std::string& path, const SolveOptions& opts = {});

}  // namespace gridshare

#endif
