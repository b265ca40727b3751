#ifndef GRIDSHARE_CASE_HPP
#define GRIDSHARE_CASE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridshare/errors.hpp"

namespace gridshare {

using TimeSeries = std::vector<double>;

enum class BusKind { Slack, Load, Community };

// Dispatchable generator (or, on the slack bus, the upstream import).
// Costs are stored in $/kWh; power bounds in kW / kvar.
struct GeneratorParams {
  double marginal_cost = 0.0;  // ignored on the slack bus, which prices at the wholesale series
  double p_min = 0.0, p_max = 0.0;
  double q_min = 0.0, q_max = 0.0;
};

struct Line {
  int from_bus = -1;
  int to_bus = -1;
  double r = 0.0;  // p.u.
  double x = 0.0;  // p.u.
};

struct Bus {
  int id = -1;
  BusKind kind = BusKind::Load;
  double v_min = 0.95, v_max = 1.05;  // p.u.
  TimeSeries load_p;                  // kW, length T
  TimeSeries load_q;                  // kvar, length T
  std::optional<GeneratorParams> generator;
};

struct PvParams {
  TimeSeries forecast;  // kW available, length T
  double s_max = 0.0;   // inverter rating, kVA
  double zeta = 0.0;    // reactive coefficient, |q| <= zeta * p
};

struct BessParams {
  double p_ch_max = 0.0, p_dis_max = 0.0;  // kW
  double e_min = 0.0, e_max = 0.0;         // kWh
  double eta_ch = 1.0, eta_dis = 1.0;
  double e_init = 0.0, e_final = 0.0;      // kWh, boundary state of charge
};

struct FlexParams {
  TimeSeries p_flex_max;  // kW, per-period curtailment cap, length T
  double pi_flex = 0.0;   // compensation, $/kWh
};

struct CommunityPortfolio {
  int bus = -1;
  PvParams pv;
  BessParams bess;
  FlexParams flex;
};

// A full problem instance. Immutable after parsing; safe to share across threads.
struct NetworkCase {
  int horizon = 0;             // T
  double dt_hours = 1.0;       // period length
  double slack_voltage = 1.0;  // p.u., fixed reference at the slack bus
  double big_m = 1e4;          // complementarity constant, model units
  double s_base_kva = 1000.0;  // power base coupling kW flows with p.u. impedances

  std::vector<Bus> buses;                       // ids are 0..n-1, slack at id 0
  std::vector<Line> lines;                      // radial, connected
  std::vector<CommunityPortfolio> communities;  // EC index = position here
  TimeSeries lmp;                               // wholesale price, $/kWh, length T

  int slack_bus() const { return 0; }
  const Bus& bus(int id) const { return buses.at(static_cast<size_t>(id)); }
  int community_index(int bus_id) const;  // -1 if the bus hosts no portfolio
  bool is_community(int bus_id) const { return community_index(bus_id) >= 0; }

  // Impedance magnitude summed along the unique tree path between two buses.
  double path_impedance(int bus_a, int bus_b) const;
  // Largest pairwise path impedance in the network.
  double max_path_impedance() const;
};

// Parses and validates the documented JSON case format (docs/case_format.md).
// Throws SchemaError, ValidationError, or TopologyError.
NetworkCase parse_case(const std::string& text);

// Canonical serialization; parse_case(serialize_case(c)) reproduces c exactly.
std::string serialize_case(const NetworkCase& c);

// FNV-1a over the canonical serialization, used to key ledgers and manifests.
std::uint64_t case_content_hash(const NetworkCase& c);
std::uint64_t fnv1a64(const std::string& bytes);

// tan(acos(pf_min)); DomainError unless 0 < pf_min <= 1.
double derive_zeta(double pf_min);

}  // namespace gridshare

#endif
