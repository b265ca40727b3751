#ifndef GRIDSHARE_DSO_HPP
#define GRIDSHARE_DSO_HPP

#include <set>
#include <vector>

#include "gridshare/case.hpp"
#include "gridshare/cea.hpp"
#include "gridshare/model.hpp"
#include "gridshare/solver.hpp"

namespace gridshare {

// Net injection per (bus, period) as a linear expression of upper-level
// variables; constant for buses outside the active set.
struct InjectionMap {
  std::vector<std::vector<LinExpr>> p, q;  // [bus][t]
  std::vector<char> is_fixed;              // per bus

  int n_buses() const { return static_cast<int>(p.size()); }
};

// Couples community schedules to grid injections: active buses get -p_c/-q_c,
// passive community buses their fixed passive profile, all other non-slack
// buses their forecast load. Throws MissingScheduleError when an active bus
// has no handles.
InjectionMap injection_coupling(const NetworkCase& c, const std::set<int>& active,
                                const CeaHandles& handles);

// Constant injections from explicit matrices (standalone LP use).
InjectionMap fixed_injections(const NetworkCase& c, const std::vector<TimeSeries>& p_inj,
                              const std::vector<TimeSeries>& q_inj);

// Variable and row handles for the LinDistFlow LP.
struct GridHandles {
  std::vector<int> gen_bus;                        // generator-hosting buses, ascending
  std::vector<std::vector<VarId>> u;               // [bus][t], squared voltage
  std::vector<std::vector<VarId>> pg, qg;          // [gen][t]
  std::vector<std::vector<VarId>> p_flow, q_flow;  // [line][t], from->to

  std::vector<std::vector<RowId>> drop;            // [line][t]
  std::vector<std::vector<RowId>> pbal, qbal;      // [bus][t]
  std::vector<std::vector<RowId>> vlo, vhi;        // [bus][t], invalid at the slack bus
  std::vector<std::vector<RowId>> gplo, gphi, gqlo, gqhi;  // [gen][t]

  int gen_index(int bus) const;  // -1 when the bus hosts no generator
};

// Emits voltage drops, nodal balances, voltage windows, and generator bounds.
// The slack-bus squared voltage is pinned to slack_voltage^2 via its variable
// bounds (no window rows there).
GridHandles build_dso_lp(const NetworkCase& c, const InjectionMap& inj, ModelInstance& model);

// Procurement cost: wholesale-priced slack import plus local generator cost.
LinExpr dso_cost_expr(const NetworkCase& c, const GridHandles& g);

struct GridState {
  std::vector<std::vector<double>> u;               // [bus][t]
  std::vector<std::vector<double>> pg, qg;          // [gen][t]
  std::vector<std::vector<double>> p_flow, q_flow;  // [line][t]
  std::vector<std::vector<double>> p_inj, q_inj;    // [bus][t]
};

// Multipliers in the library's Lagrangian convention; lambda_p is the
// marginal cost of serving one more kW of load over a period ($/kW-period).
struct DualState {
  std::vector<std::vector<double>> lambda_p, lambda_q;        // [bus][t]
  std::vector<std::vector<double>> lambda_volt;               // [line][t]
  std::vector<std::vector<double>> lambda_u_lo, lambda_u_hi;  // [bus][t], zero at slack
  std::vector<std::vector<double>> gp_lo, gp_hi, gq_lo, gq_hi;  // [gen][t]
  std::vector<double> sigma;                                  // [t], slack-voltage fix

  // DLMP in $/kWh.
  double dlmp_p_kwh(int bus, int t, double dt) const {
    return lambda_p[static_cast<size_t>(bus)][static_cast<size_t>(t)] / dt;
  }
};

struct DsoSolution {
  GridState grid;
  DualState duals;
  double objective = 0.0;
  double dual_objective = 0.0;  // from the multipliers; equals objective at optimum
};

// Solves the standalone LP for fixed injections and extracts the duals.
// Throws InfeasibleError / UnboundedError; enforces a 1e-8 relative
// primal-dual gap.
DsoSolution solve_dso_lp(const NetworkCase& c, const std::vector<TimeSeries>& p_inj,
                         const std::vector<TimeSeries>& q_inj);

GridState extract_grid_state(const NetworkCase& c, const GridHandles& g, const InjectionMap& inj,
                             const SolveOutcome& out);

}  // namespace gridshare

#endif
