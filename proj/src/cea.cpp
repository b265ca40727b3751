#include "gridshare/cea.hpp"

#include <cmath>

namespace gridshare {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kInverterSides = 12;

std::string tag(const char* what, int bus, int t) {
  return std::string(what) + "_b" + std::to_string(bus) + "_t" + std::to_string(t);
}

}  // namespace

const CommunityVarHandles& CeaHandles::at(int bus) const {
  auto it = by_bus.find(bus);
  if (it == by_bus.end())
    throw InactiveCommunityError("bus " + std::to_string(bus) + " is not in the active set");
  return it->second;
}

CeaHandles build_cea_constraints(const NetworkCase& c, const std::set<int>& active,
                                 ModelInstance& model) {
  CeaHandles handles;
  const int T = c.horizon;
  const double dt = c.dt_hours;

  for (int bus : active) {
    int ci = c.community_index(bus);
    if (ci < 0)
      throw DomainError("active set contains bus " + std::to_string(bus) +
                        " which hosts no community");
    const CommunityPortfolio& p = c.communities[static_cast<size_t>(ci)];
    const Bus& host = c.bus(bus);
    CommunityVarHandles h;
    h.bus = bus;

    const bool has_ch = p.bess.p_ch_max > 0.0;
    const bool has_dis = p.bess.p_dis_max > 0.0;

    for (int t = 0; t < T; ++t) {
      h.p_pv.push_back(model.add_var(0.0, p.pv.forecast[static_cast<size_t>(t)], tag("ppv", bus, t)));
      h.q_pv.push_back(model.add_free(tag("qpv", bus, t)));
      h.p_ch.push_back(model.add_var(0.0, p.bess.p_ch_max, tag("pch", bus, t)));
      h.p_dis.push_back(model.add_var(0.0, p.bess.p_dis_max, tag("pdis", bus, t)));
      if (has_ch) h.u_ch.push_back(model.add_binary(tag("uch", bus, t)));
      if (has_dis) h.u_dis.push_back(model.add_binary(tag("udis", bus, t)));
      h.p_bat.push_back(model.add_free(tag("pbat", bus, t)));
      h.p_load.push_back(model.add_var(0.0, host.load_p[static_cast<size_t>(t)], tag("pload", bus, t)));
      h.p_red.push_back(
          model.add_var(0.0, p.flex.p_flex_max[static_cast<size_t>(t)], tag("pred", bus, t)));
      h.p_c.push_back(model.add_free(tag("pc", bus, t)));
      h.q_c.push_back(model.add_free(tag("qc", bus, t)));
    }
    for (int t = 0; t <= T; ++t) {
      double lo = p.bess.e_min, hi = p.bess.e_max;
      if (t == 0) lo = hi = p.bess.e_init;
      if (t == T) lo = hi = p.bess.e_final;
      h.e.push_back(model.add_var(lo, hi, tag("soc", bus, t)));
    }

    for (int t = 0; t < T; ++t) {
      // inverter circle, 12-gon inner approximation with a vertex on the p axis
      for (int j = 0; j < kInverterSides; ++j) {
        double phi = (j + 0.5) * 2.0 * kPi / kInverterSides;
        LinExpr side = LinExpr(h.p_pv[static_cast<size_t>(t)]) * std::cos(phi) +
                       LinExpr(h.q_pv[static_cast<size_t>(t)]) * std::sin(phi);
        model.add_le(side, p.pv.s_max * std::cos(kPi / kInverterSides),
                     tag("pvcap", bus, t) + "_s" + std::to_string(j));
      }
      // power-factor cone
      model.add_le(LinExpr(h.q_pv[static_cast<size_t>(t)]) - LinExpr(h.p_pv[static_cast<size_t>(t)]) * p.pv.zeta,
                   0.0, tag("pfpos", bus, t));
      model.add_le(LinExpr(h.q_pv[static_cast<size_t>(t)]) * -1.0 -
                       LinExpr(h.p_pv[static_cast<size_t>(t)]) * p.pv.zeta,
                   0.0, tag("pfneg", bus, t));
      // BESS mode gating
      if (has_ch)
        model.add_le(LinExpr(h.p_ch[static_cast<size_t>(t)]) -
                         LinExpr(h.u_ch[static_cast<size_t>(t)]) * p.bess.p_ch_max,
                     0.0, tag("chgate", bus, t));
      if (has_dis)
        model.add_le(LinExpr(h.p_dis[static_cast<size_t>(t)]) -
                         LinExpr(h.u_dis[static_cast<size_t>(t)]) * p.bess.p_dis_max,
                     0.0, tag("disgate", bus, t));
      if (has_ch && has_dis)
        model.add_le(LinExpr(h.u_ch[static_cast<size_t>(t)]) + LinExpr(h.u_dis[static_cast<size_t>(t)]),
                     1.0, tag("excl", bus, t));
      // state-of-charge recursion
      LinExpr soc = LinExpr(h.e[static_cast<size_t>(t) + 1]) - LinExpr(h.e[static_cast<size_t>(t)]) -
                    LinExpr(h.p_ch[static_cast<size_t>(t)]) * (p.bess.eta_ch * dt) +
                    LinExpr(h.p_dis[static_cast<size_t>(t)]) * (dt / p.bess.eta_dis);
      model.add_eq(soc, 0.0, tag("socbal", bus, t));
      // net battery power
      model.add_eq(LinExpr(h.p_bat[static_cast<size_t>(t)]) - LinExpr(h.p_dis[static_cast<size_t>(t)]) +
                       LinExpr(h.p_ch[static_cast<size_t>(t)]),
                   0.0, tag("batdef", bus, t));
      // curtailment definition
      model.add_eq(LinExpr(h.p_red[static_cast<size_t>(t)]) + LinExpr(h.p_load[static_cast<size_t>(t)]),
                   host.load_p[static_cast<size_t>(t)], tag("reddef", bus, t));
      // net consumption
      model.add_eq(LinExpr(h.p_c[static_cast<size_t>(t)]) - LinExpr(h.p_load[static_cast<size_t>(t)]) +
                       LinExpr(h.p_pv[static_cast<size_t>(t)]) + LinExpr(h.p_bat[static_cast<size_t>(t)]),
                   0.0, tag("pcdef", bus, t));
      model.add_eq(LinExpr(h.q_c[static_cast<size_t>(t)]) + LinExpr(h.q_pv[static_cast<size_t>(t)]),
                   host.load_q[static_cast<size_t>(t)], tag("qcdef", bus, t));
    }
    handles.by_bus.emplace(bus, std::move(h));
  }
  return handles;
}

std::pair<TimeSeries, TimeSeries> passive_profile(const NetworkCase& c, int bus) {
  int ci = c.community_index(bus);
  if (ci < 0) throw DomainError("bus " + std::to_string(bus) + " hosts no community");
  const CommunityPortfolio& p = c.communities[static_cast<size_t>(ci)];
  const Bus& host = c.bus(bus);
  TimeSeries pc(static_cast<size_t>(c.horizon)), qc(static_cast<size_t>(c.horizon));
  for (int t = 0; t < c.horizon; ++t) {
    pc[static_cast<size_t>(t)] =
        host.load_p[static_cast<size_t>(t)] - p.pv.forecast[static_cast<size_t>(t)];
    qc[static_cast<size_t>(t)] = host.load_q[static_cast<size_t>(t)];
  }
  return {pc, qc};
}

CommunitySchedule extract_schedule(const NetworkCase& c, const CeaHandles& h, const SolveOutcome& out) {
  CommunitySchedule s;
  const int T = c.horizon;
  for (const auto& [bus, vh] : h.by_bus) {
    CommunitySchedule::PerBus pb;
    for (int t = 0; t < T; ++t) {
      pb.p_pv.push_back(out.value(vh.p_pv[static_cast<size_t>(t)]));
      pb.q_pv.push_back(out.value(vh.q_pv[static_cast<size_t>(t)]));
      pb.p_ch.push_back(out.value(vh.p_ch[static_cast<size_t>(t)]));
      pb.p_dis.push_back(out.value(vh.p_dis[static_cast<size_t>(t)]));
      pb.u_ch.push_back(vh.u_ch.empty() ? 0.0 : out.value(vh.u_ch[static_cast<size_t>(t)]));
      pb.u_dis.push_back(vh.u_dis.empty() ? 0.0 : out.value(vh.u_dis[static_cast<size_t>(t)]));
      pb.p_bat.push_back(out.value(vh.p_bat[static_cast<size_t>(t)]));
      pb.p_load.push_back(out.value(vh.p_load[static_cast<size_t>(t)]));
      pb.p_red.push_back(out.value(vh.p_red[static_cast<size_t>(t)]));
      pb.p_c.push_back(out.value(vh.p_c[static_cast<size_t>(t)]));
      pb.q_c.push_back(out.value(vh.q_c[static_cast<size_t>(t)]));
    }
    for (int t = 0; t <= T; ++t) pb.e.push_back(out.value(vh.e[static_cast<size_t>(t)]));
    s.by_bus.emplace(bus, std::move(pb));
  }
  return s;
}

double cea_cost(const CommunitySchedule& s, const PriceSeries& prices, const NetworkCase& c) {
  const size_t T = static_cast<size_t>(c.horizon);
  double total = 0.0;
  for (const auto& [bus, pb] : s.by_bus) {
    auto ip = prices.p.find(bus);
    auto iq = prices.q.find(bus);
    if (ip == prices.p.end() || iq == prices.q.end())
      throw DimensionError("no price series for bus " + std::to_string(bus));
    if (ip->second.size() != T || iq->second.size() != T || pb.p_c.size() != T)
      throw DimensionError("price/schedule length mismatch at bus " + std::to_string(bus));
    int ci = c.community_index(bus);
    if (ci < 0) throw DimensionError("schedule bus " + std::to_string(bus) + " hosts no community");
    double pi_flex = c.communities[static_cast<size_t>(ci)].flex.pi_flex;
    for (size_t t = 0; t < T; ++t)
      total += c.dt_hours * (ip->second[t] * pb.p_c[t] + iq->second[t] * pb.q_c[t] +
                             pi_flex * pb.p_red[t]);
  }
  return total;
}

double max_cea_residual(const NetworkCase& c, int bus, const CommunitySchedule::PerBus& s) {
  int ci = c.community_index(bus);
  if (ci < 0) throw DomainError("bus " + std::to_string(bus) + " hosts no community");
  const CommunityPortfolio& p = c.communities[static_cast<size_t>(ci)];
  const Bus& host = c.bus(bus);
  const int T = c.horizon;
  const double dt = c.dt_hours;
  double r = 0.0;
  auto bump = [&](double v) { r = std::max(r, v); };

  for (int t = 0; t < T; ++t) {
    const size_t k = static_cast<size_t>(t);
    bump(-s.p_pv[k]);
    bump(s.p_pv[k] - p.pv.forecast[k]);
    bump(std::hypot(s.p_pv[k], s.q_pv[k]) - p.pv.s_max);  // exact circle, not the polygon
    bump(s.q_pv[k] - p.pv.zeta * s.p_pv[k]);
    bump(-s.q_pv[k] - p.pv.zeta * s.p_pv[k]);
    double uch = p.bess.p_ch_max > 0.0 ? s.u_ch[k] : 0.0;
    double udis = p.bess.p_dis_max > 0.0 ? s.u_dis[k] : 0.0;
    bump(std::abs(uch - std::round(uch)));
    bump(std::abs(udis - std::round(udis)));
    bump(-s.p_ch[k]);
    bump(s.p_ch[k] - p.bess.p_ch_max * uch);
    bump(-s.p_dis[k]);
    bump(s.p_dis[k] - p.bess.p_dis_max * udis);
    bump(uch + udis - 1.0);
    bump(std::abs(s.e[k + 1] - s.e[k] - p.bess.eta_ch * s.p_ch[k] * dt +
                  s.p_dis[k] * dt / p.bess.eta_dis));
    bump(p.bess.e_min - s.e[k]);
    bump(s.e[k] - p.bess.e_max);
    bump(std::abs(s.p_bat[k] - (s.p_dis[k] - s.p_ch[k])));
    bump(-s.p_load[k]);
    bump(s.p_load[k] - host.load_p[k]);
    bump(std::abs(s.p_red[k] - (host.load_p[k] - s.p_load[k])));
    bump(s.p_red[k] - p.flex.p_flex_max[k]);
    bump(std::abs(s.p_c[k] - (s.p_load[k] - s.p_pv[k] - s.p_bat[k])));
    bump(std::abs(s.q_c[k] - (host.load_q[k] - s.q_pv[k])));
  }
  bump(std::abs(s.e.front() - p.bess.e_init));
  bump(std::abs(s.e.back() - p.bess.e_final));
  return r;
}

}  // namespace gridshare
