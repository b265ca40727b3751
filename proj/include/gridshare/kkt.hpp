#ifndef GRIDSHARE_KKT_HPP
#define GRIDSHARE_KKT_HPP

#include <functional>
#include <map>
#include <set>
#include <string>

#include "gridshare/case.hpp"
#include "gridshare/cea.hpp"
#include "gridshare/dso.hpp"
#include "gridshare/model.hpp"
#include "gridshare/solver.hpp"

namespace gridshare {

// Dual decision variables mirroring every DSO constraint.
struct DualVarHandles {
  std::vector<std::vector<VarId>> lambda_p, lambda_q;        // [bus][t], free
  std::vector<std::vector<VarId>> nu;                        // [line][t], free
  std::vector<std::vector<VarId>> mu_lo, mu_hi;              // [bus][t], >= 0, invalid at slack
  std::vector<std::vector<VarId>> gp_lo, gp_hi, gq_lo, gq_hi;  // [gen][t], >= 0
  std::vector<VarId> sigma;                                  // [t], free (slack-voltage fix)
};

// Produces each dual entity as a linear expression: variable handles when
// assembling the MILP, plain constants when certifying a solved LP's duals.
struct DualAccessor {
  std::function<LinExpr(int bus, int t)> lambda_p, lambda_q, mu_lo, mu_hi;
  std::function<LinExpr(int line, int t)> nu;
  std::function<LinExpr(int gen, int t)> gp_lo, gp_hi, gq_lo, gq_hi;
  std::function<LinExpr(int t)> sigma;
};
DualAccessor accessor_from_vars(const DualVarHandles& d);
DualAccessor accessor_from_values(const DualState& d);

// One stationarity equality per DSO primal variable and period, derived from
// the Lagrangian of the dispatch problem. The same template serves model
// emission and numeric certification.
struct StationarityRow {
  LinExpr expr;  // must equal zero
  std::string name;
};
std::vector<StationarityRow> stationarity_rows(const NetworkCase& c, const GridHandles& g,
                                               const DualAccessor& dual);

// Largest |residual| of the stationarity system at a solved primal-dual pair.
double max_stationarity_residual(const NetworkCase& c, const GridHandles& g, const DualState& d);

struct ComplementarityPair {
  LinExpr slack;      // DSO inequality slack, >= 0 at primal-feasible points
  VarId multiplier;
  VarId zswitch;
  double m_dual;      // big-M on the multiplier side (escalatable)
  double m_slack;     // provable range of the slack
  std::string name;
};

// Emits multiplier <= M_dual*z and slack <= M_slack*(1-z) for every pair.
void build_complementarity(ModelInstance& model, std::vector<ComplementarityPair>& pairs);

// Strong-duality objective: generator cost, fixed-bus price terms,
// curtailment compensation, bound terms, and the slack-voltage-fix term.
LinExpr build_duality_objective(const NetworkCase& c, const std::set<int>& active,
                                const CeaHandles& cea, const GridHandles& grid,
                                const DualVarHandles& duals, const InjectionMap& inj);

// Fully assembled single-level MILP.
struct SingleLevelModel {
  ModelInstance model;
  CeaHandles cea;
  GridHandles grid;
  DualVarHandles duals;
  InjectionMap injections;
  std::vector<ComplementarityPair> pairs;
  std::set<int> active;
  double big_m_dual = 0.0;
};
SingleLevelModel build_single_level(const NetworkCase& c, const std::set<int>& active,
                                    double big_m_dual);

struct ComplementarityAudit {
  double max_product = 0.0;       // max multiplier * slack over pairs
  double max_multiplier = 0.0;
  bool saturated = false;         // some multiplier within 0.1% of its M
  std::string worst_pair;
};
ComplementarityAudit audit_complementarity(const SingleLevelModel& slm, const SolveOutcome& out);

struct SingleLevelOptions {
  double gap_tol = 1e-6;
  int max_escalations = 3;  // big-M grows tenfold per retry
  double time_limit_s = 0.0;
  bool log = false;
};

struct CoalitionSolveResult {
  std::set<int> active;
  double objective = 0.0;  // MILP optimum (strong-duality form)
  double settlement_total = 0.0;            // all communities' cost at the solved prices
  std::map<int, double> settlement_by_ec;   // every community bus -> $ (passive at profile)
  std::map<int, double> settlement_by_bus;  // every bus -> $ paid at solved prices
  CommunitySchedule schedule;
  GridState grid;
  DualState duals;
  double max_comp_product = 0.0;
  double max_cea_violation = 0.0;
  double max_multiplier = 0.0;
  double big_m_used = 0.0;
  int escalations = 0;
  double milp_gap = 0.0;
  double wall_time_s = 0.0;
};

// Solves the single-level MILP for one coalition, escalating big-M when a
// multiplier saturates; throws BigMSaturatedError when escalation runs out,
// InfeasibleError when the instance cannot be scheduled.
CoalitionSolveResult solve_single_level(const NetworkCase& c, const std::set<int>& active,
                                        const SingleLevelOptions& opts = {});

// Cross-check of the embedded dispatch against a standalone LP re-solve at
// the same injections.
struct DsoCrossCheck {
  double embedded_cost = 0.0;       // generator cost inside the MILP solution
  double standalone_cost = 0.0;     // LP optimum at the extracted injections
  double embedded_settlement = 0.0;     // sum lambda_p * p_inj over buses/periods
  double standalone_settlement = 0.0;
};
DsoCrossCheck cross_check_dso(const NetworkCase& c, const CoalitionSolveResult& r);

}  // namespace gridshare

#endif
