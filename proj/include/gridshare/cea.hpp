#ifndef GRIDSHARE_CEA_HPP
#define GRIDSHARE_CEA_HPP

#include <map>
#include <set>
#include <utility>

#include "gridshare/case.hpp"
#include "gridshare/model.hpp"
#include "gridshare/solver.hpp"

namespace gridshare {

// Variable handles for one scheduled community. SoC has horizon+1 entries;
// mode flags are absent when the corresponding power cap is zero.
struct CommunityVarHandles {
  int bus = -1;
  std::vector<VarId> p_pv, q_pv;      // PV dispatch
  std::vector<VarId> p_ch, p_dis;     // BESS power
  std::vector<VarId> u_ch, u_dis;     // BESS mode flags (binary)
  std::vector<VarId> e;               // state of charge, horizon+1
  std::vector<VarId> p_bat;           // p_dis - p_ch
  std::vector<VarId> p_load, p_red;   // scheduled and curtailed load
  std::vector<VarId> p_c, q_c;        // net community consumption
};

struct CeaHandles {
  std::map<int, CommunityVarHandles> by_bus;
  // Throws InactiveCommunityError for buses outside the active set.
  const CommunityVarHandles& at(int bus) const;
};

// Emits DER scheduling constraints for every active community: PV limits with
// a 12-gon inner approximation of the inverter circle, the power-factor cone,
// BESS power/mode/energy coupling, load curtailment bounds, and the net
// consumption definitions.
CeaHandles build_cea_constraints(const NetworkCase& c, const std::set<int>& active,
                                 ModelInstance& model);

// Net consumption of a non-participating community: forecast load, PV at full
// forecast with no reactive support, battery idle.
std::pair<TimeSeries, TimeSeries> passive_profile(const NetworkCase& c, int bus);

// Numeric schedule extracted from a solved model.
struct CommunitySchedule {
  struct PerBus {
    TimeSeries p_pv, q_pv, p_ch, p_dis, u_ch, u_dis, e, p_bat, p_load, p_red, p_c, q_c;
  };
  std::map<int, PerBus> by_bus;
};
CommunitySchedule extract_schedule(const NetworkCase& c, const CeaHandles& h, const SolveOutcome& out);

// Bus-indexed DLMP series in $/kWh.
struct PriceSeries {
  std::map<int, TimeSeries> p;  // active power price
  std::map<int, TimeSeries> q;  // reactive power price
};

// Settlement over the scheduled communities:
//   sum_t dt * (lambda_p * p_c + lambda_q * q_c + pi_flex * p_red).
// Throws DimensionError when prices do not cover the schedule.
double cea_cost(const CommunitySchedule& s, const PriceSeries& prices, const NetworkCase& c);

// Largest violation of the DER scheduling constraints, re-evaluated from raw
// values (the inverter limit is checked against the exact circle). Model
// units: kW / kvar / kWh.
double max_cea_residual(const NetworkCase& c, int bus, const CommunitySchedule::PerBus& s);

}  // namespace gridshare

#endif
