#include "gridshare/dso.hpp"

#include <cmath>

namespace gridshare {

namespace {

std::string tag(const char* what, int a, int t) {
  return std::string(what) + "_" + std::to_string(a) + "_t" + std::to_string(t);
}

}  // namespace

int GridHandles::gen_index(int bus) const {
  for (size_t i = 0; i < gen_bus.size(); ++i)
    if (gen_bus[i] == bus) return static_cast<int>(i);
  return -1;
}

InjectionMap injection_coupling(const NetworkCase& c, const std::set<int>& active,
                                const CeaHandles& handles) {
  const int n = static_cast<int>(c.buses.size());
  const int T = c.horizon;
  InjectionMap m;
  m.p.assign(static_cast<size_t>(n), std::vector<LinExpr>(static_cast<size_t>(T)));
  m.q.assign(static_cast<size_t>(n), std::vector<LinExpr>(static_cast<size_t>(T)));
  m.is_fixed.assign(static_cast<size_t>(n), 1);

  for (int bus : active)
    if (handles.by_bus.find(bus) == handles.by_bus.end())
      throw MissingScheduleError("active bus " + std::to_string(bus) + " has no schedule handles");

  for (const auto& b : c.buses) {
    const size_t bi = static_cast<size_t>(b.id);
    if (active.count(b.id)) {
      const CommunityVarHandles& h = handles.at(b.id);
      for (int t = 0; t < T; ++t) {
        m.p[bi][static_cast<size_t>(t)] = LinExpr(h.p_c[static_cast<size_t>(t)]) * -1.0;
        m.q[bi][static_cast<size_t>(t)] = LinExpr(h.q_c[static_cast<size_t>(t)]) * -1.0;
      }
      m.is_fixed[bi] = 0;
    } else if (c.is_community(b.id)) {
      auto [pc, qc] = passive_profile(c, b.id);
      for (int t = 0; t < T; ++t) {
        m.p[bi][static_cast<size_t>(t)] = LinExpr(-pc[static_cast<size_t>(t)]);
        m.q[bi][static_cast<size_t>(t)] = LinExpr(-qc[static_cast<size_t>(t)]);
      }
    } else {
      for (int t = 0; t < T; ++t) {
        m.p[bi][static_cast<size_t>(t)] = LinExpr(-b.load_p[static_cast<size_t>(t)]);
        m.q[bi][static_cast<size_t>(t)] = LinExpr(-b.load_q[static_cast<size_t>(t)]);
      }
    }
  }
  return m;
}

InjectionMap fixed_injections(const NetworkCase& c, const std::vector<TimeSeries>& p_inj,
                              const std::vector<TimeSeries>& q_inj) {
  const size_t n = c.buses.size();
  const size_t T = static_cast<size_t>(c.horizon);
  if (p_inj.size() != n || q_inj.size() != n)
    throw DimensionError("injection matrices must cover all buses");
  InjectionMap m;
  m.p.assign(n, std::vector<LinExpr>(T));
  m.q.assign(n, std::vector<LinExpr>(T));
  m.is_fixed.assign(n, 1);
  for (size_t b = 0; b < n; ++b) {
    if (p_inj[b].size() != T || q_inj[b].size() != T)
      throw DimensionError("injection series must cover all periods");
    for (size_t t = 0; t < T; ++t) {
      m.p[b][t] = LinExpr(p_inj[b][t]);
      m.q[b][t] = LinExpr(q_inj[b][t]);
    }
  }
  return m;
}

GridHandles build_dso_lp(const NetworkCase& c, const InjectionMap& inj, ModelInstance& model) {
  const int n = static_cast<int>(c.buses.size());
  const int T = c.horizon;
  const int L = static_cast<int>(c.lines.size());
  if (inj.n_buses() != n) throw DimensionError("injection map does not cover all buses");

  // incidence
  std::vector<std::vector<int>> out_lines(static_cast<size_t>(n)), in_lines(static_cast<size_t>(n));
  for (int e = 0; e < L; ++e) {
    out_lines[static_cast<size_t>(c.lines[static_cast<size_t>(e)].from_bus)].push_back(e);
    in_lines[static_cast<size_t>(c.lines[static_cast<size_t>(e)].to_bus)].push_back(e);
  }
  for (int b = 1; b < n; ++b)
    if (out_lines[static_cast<size_t>(b)].empty() && in_lines[static_cast<size_t>(b)].empty())
      throw InfeasibleTopologyError("bus " + std::to_string(b) + " has no incident line");

  GridHandles g;
  for (int b = 0; b < n; ++b)
    if (c.buses[static_cast<size_t>(b)].generator) g.gen_bus.push_back(b);

  const double u0 = c.slack_voltage * c.slack_voltage;
  g.u.resize(static_cast<size_t>(n));
  for (int b = 0; b < n; ++b) {
    for (int t = 0; t < T; ++t) {
      if (b == c.slack_bus())
        g.u[static_cast<size_t>(b)].push_back(model.add_var(u0, u0, tag("u_b", b, t)));
      else
        g.u[static_cast<size_t>(b)].push_back(model.add_free(tag("u_b", b, t)));
    }
  }
  g.pg.resize(g.gen_bus.size());
  g.qg.resize(g.gen_bus.size());
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi)
    for (int t = 0; t < T; ++t) {
      g.pg[gi].push_back(model.add_free(tag("pg_b", g.gen_bus[gi], t)));
      g.qg[gi].push_back(model.add_free(tag("qg_b", g.gen_bus[gi], t)));
    }
  g.p_flow.resize(static_cast<size_t>(L));
  g.q_flow.resize(static_cast<size_t>(L));
  for (int e = 0; e < L; ++e)
    for (int t = 0; t < T; ++t) {
      g.p_flow[static_cast<size_t>(e)].push_back(model.add_free(tag("P_l", e, t)));
      g.q_flow[static_cast<size_t>(e)].push_back(model.add_free(tag("Q_l", e, t)));
    }

  // voltage drop along each line
  g.drop.resize(static_cast<size_t>(L));
  const double s = c.s_base_kva;
  for (int e = 0; e < L; ++e) {
    const Line& ln = c.lines[static_cast<size_t>(e)];
    for (int t = 0; t < T; ++t) {
      LinExpr row = LinExpr(g.u[static_cast<size_t>(ln.to_bus)][static_cast<size_t>(t)]) -
                    LinExpr(g.u[static_cast<size_t>(ln.from_bus)][static_cast<size_t>(t)]) +
                    LinExpr(g.p_flow[static_cast<size_t>(e)][static_cast<size_t>(t)]) * (2.0 * ln.r / s) +
                    LinExpr(g.q_flow[static_cast<size_t>(e)][static_cast<size_t>(t)]) * (2.0 * ln.x / s);
      g.drop[static_cast<size_t>(e)].push_back(model.add_eq(row, 0.0, tag("drop_l", e, t)));
    }
  }

  // nodal balances; injections enter the right-hand side (or couple variables)
  g.pbal.resize(static_cast<size_t>(n));
  g.qbal.resize(static_cast<size_t>(n));
  for (int b = 0; b < n; ++b) {
    int gi = g.gen_index(b);
    for (int t = 0; t < T; ++t) {
      LinExpr prow, qrow;
      for (int e : out_lines[static_cast<size_t>(b)]) {
        prow += LinExpr(g.p_flow[static_cast<size_t>(e)][static_cast<size_t>(t)]);
        qrow += LinExpr(g.q_flow[static_cast<size_t>(e)][static_cast<size_t>(t)]);
      }
      for (int e : in_lines[static_cast<size_t>(b)]) {
        prow -= LinExpr(g.p_flow[static_cast<size_t>(e)][static_cast<size_t>(t)]);
        qrow -= LinExpr(g.q_flow[static_cast<size_t>(e)][static_cast<size_t>(t)]);
      }
      if (gi >= 0) {
        prow -= LinExpr(g.pg[static_cast<size_t>(gi)][static_cast<size_t>(t)]);
        qrow -= LinExpr(g.qg[static_cast<size_t>(gi)][static_cast<size_t>(t)]);
      }
      prow -= inj.p[static_cast<size_t>(b)][static_cast<size_t>(t)];
      qrow -= inj.q[static_cast<size_t>(b)][static_cast<size_t>(t)];
      g.pbal[static_cast<size_t>(b)].push_back(model.add_eq(prow, 0.0, tag("pbal_b", b, t)));
      g.qbal[static_cast<size_t>(b)].push_back(model.add_eq(qrow, 0.0, tag("qbal_b", b, t)));
    }
  }

  // voltage windows (slack is pinned instead)
  g.vlo.assign(static_cast<size_t>(n), {});
  g.vhi.assign(static_cast<size_t>(n), {});
  for (int b = 0; b < n; ++b) {
    if (b == c.slack_bus()) {
      g.vlo[static_cast<size_t>(b)].assign(static_cast<size_t>(T), RowId{});
      g.vhi[static_cast<size_t>(b)].assign(static_cast<size_t>(T), RowId{});
      continue;
    }
    const Bus& bus = c.buses[static_cast<size_t>(b)];
    for (int t = 0; t < T; ++t) {
      g.vlo[static_cast<size_t>(b)].push_back(
          model.add_ge(LinExpr(g.u[static_cast<size_t>(b)][static_cast<size_t>(t)]),
                       bus.v_min * bus.v_min, tag("vlo_b", b, t)));
      g.vhi[static_cast<size_t>(b)].push_back(
          model.add_le(LinExpr(g.u[static_cast<size_t>(b)][static_cast<size_t>(t)]),
                       bus.v_max * bus.v_max, tag("vhi_b", b, t)));
    }
  }

  // generator bounds
  g.gplo.resize(g.gen_bus.size());
  g.gphi.resize(g.gen_bus.size());
  g.gqlo.resize(g.gen_bus.size());
  g.gqhi.resize(g.gen_bus.size());
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi) {
    const GeneratorParams& gp = *c.buses[static_cast<size_t>(g.gen_bus[gi])].generator;
    for (int t = 0; t < T; ++t) {
      g.gplo[gi].push_back(
          model.add_ge(LinExpr(g.pg[gi][static_cast<size_t>(t)]), gp.p_min, tag("gplo_b", g.gen_bus[gi], t)));
      g.gphi[gi].push_back(
          model.add_le(LinExpr(g.pg[gi][static_cast<size_t>(t)]), gp.p_max, tag("gphi_b", g.gen_bus[gi], t)));
      g.gqlo[gi].push_back(
          model.add_ge(LinExpr(g.qg[gi][static_cast<size_t>(t)]), gp.q_min, tag("gqlo_b", g.gen_bus[gi], t)));
      g.gqhi[gi].push_back(
          model.add_le(LinExpr(g.qg[gi][static_cast<size_t>(t)]), gp.q_max, tag("gqhi_b", g.gen_bus[gi], t)));
    }
  }
  return g;
}

LinExpr dso_cost_expr(const NetworkCase& c, const GridHandles& g) {
  LinExpr cost;
  const double dt = c.dt_hours;
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi) {
    int b = g.gen_bus[gi];
    for (int t = 0; t < c.horizon; ++t) {
      double price = b == c.slack_bus() ? c.lmp[static_cast<size_t>(t)]
                                        : c.buses[static_cast<size_t>(b)].generator->marginal_cost;
      cost += LinExpr(g.pg[gi][static_cast<size_t>(t)]) * (dt * price);
    }
  }
  return cost;
}

GridState extract_grid_state(const NetworkCase& c, const GridHandles& g, const InjectionMap& inj,
                             const SolveOutcome& out) {
  GridState gs;
  const size_t n = c.buses.size();
  const size_t T = static_cast<size_t>(c.horizon);
  gs.u.assign(n, std::vector<double>(T));
  gs.p_inj.assign(n, std::vector<double>(T));
  gs.q_inj.assign(n, std::vector<double>(T));
  for (size_t b = 0; b < n; ++b)
    for (size_t t = 0; t < T; ++t) {
      gs.u[b][t] = out.value(g.u[b][t]);
      gs.p_inj[b][t] = out.eval(inj.p[b][t]);
      gs.q_inj[b][t] = out.eval(inj.q[b][t]);
    }
  gs.pg.assign(g.gen_bus.size(), std::vector<double>(T));
  gs.qg.assign(g.gen_bus.size(), std::vector<double>(T));
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi)
    for (size_t t = 0; t < T; ++t) {
      gs.pg[gi][t] = out.value(g.pg[gi][t]);
      gs.qg[gi][t] = out.value(g.qg[gi][t]);
    }
  gs.p_flow.assign(c.lines.size(), std::vector<double>(T));
  gs.q_flow.assign(c.lines.size(), std::vector<double>(T));
  for (size_t e = 0; e < c.lines.size(); ++e)
    for (size_t t = 0; t < T; ++t) {
      gs.p_flow[e][t] = out.value(g.p_flow[e][t]);
      gs.q_flow[e][t] = out.value(g.q_flow[e][t]);
    }
  return gs;
}

DsoSolution solve_dso_lp(const NetworkCase& c, const std::vector<TimeSeries>& p_inj,
                         const std::vector<TimeSeries>& q_inj) {
  ModelInstance model;
  InjectionMap inj = fixed_injections(c, p_inj, q_inj);
  GridHandles g = build_dso_lp(c, inj, model);
  model.set_objective(dso_cost_expr(c, g));
  SolveOutcome out = solve(model);
  if (out.status == SolveStatus::Infeasible)
    throw InfeasibleError("DSO LP infeasible for the given injections");
  if (out.status == SolveStatus::Unbounded) throw UnboundedError("DSO LP unbounded");
  if (!out.optimal()) throw BackendError("DSO LP did not reach optimality");

  DsoSolution sol;
  sol.objective = out.objective;
  sol.grid = extract_grid_state(c, g, inj, out);

  const size_t n = c.buses.size();
  const size_t T = static_cast<size_t>(c.horizon);
  DualState& d = sol.duals;
  d.lambda_p.assign(n, std::vector<double>(T, 0.0));
  d.lambda_q.assign(n, std::vector<double>(T, 0.0));
  d.lambda_volt.assign(c.lines.size(), std::vector<double>(T, 0.0));
  d.lambda_u_lo.assign(n, std::vector<double>(T, 0.0));
  d.lambda_u_hi.assign(n, std::vector<double>(T, 0.0));
  d.gp_lo.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  d.gp_hi.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  d.gq_lo.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  d.gq_hi.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  d.sigma.assign(T, 0.0);

  // Lagrangian convention: equality multipliers are -d(obj)/d(rhs); lower /
  // upper bound multipliers are +dual / -dual so that both come out >= 0.
  for (size_t b = 0; b < n; ++b)
    for (size_t t = 0; t < T; ++t) {
      d.lambda_p[b][t] = -out.dual(g.pbal[b][t]);
      d.lambda_q[b][t] = -out.dual(g.qbal[b][t]);
      if (static_cast<int>(b) != c.slack_bus()) {
        d.lambda_u_lo[b][t] = out.dual(g.vlo[b][t]);
        d.lambda_u_hi[b][t] = -out.dual(g.vhi[b][t]);
      }
    }
  for (size_t e = 0; e < c.lines.size(); ++e)
    for (size_t t = 0; t < T; ++t) d.lambda_volt[e][t] = -out.dual(g.drop[e][t]);
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi)
    for (size_t t = 0; t < T; ++t) {
      d.gp_lo[gi][t] = out.dual(g.gplo[gi][t]);
      d.gp_hi[gi][t] = -out.dual(g.gphi[gi][t]);
      d.gq_lo[gi][t] = out.dual(g.gqlo[gi][t]);
      d.gq_hi[gi][t] = -out.dual(g.gqhi[gi][t]);
    }
  for (size_t t = 0; t < T; ++t)
    d.sigma[t] = -out.reduced_cost(g.u[static_cast<size_t>(c.slack_bus())][t]);

  // dual objective, for the strong-duality guarantee of the LP contract
  double gobj = 0.0;
  const double u0 = c.slack_voltage * c.slack_voltage;
  for (size_t b = 0; b < n; ++b) {
    const Bus& bus = c.buses[b];
    for (size_t t = 0; t < T; ++t) {
      gobj -= d.lambda_p[b][t] * sol.grid.p_inj[b][t];
      gobj -= d.lambda_q[b][t] * sol.grid.q_inj[b][t];
      if (static_cast<int>(b) != c.slack_bus())
        gobj -= d.lambda_u_hi[b][t] * bus.v_max * bus.v_max - d.lambda_u_lo[b][t] * bus.v_min * bus.v_min;
    }
  }
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi) {
    const GeneratorParams& gp = *c.buses[static_cast<size_t>(g.gen_bus[gi])].generator;
    for (size_t t = 0; t < T; ++t) {
      gobj -= d.gp_hi[gi][t] * gp.p_max - d.gp_lo[gi][t] * gp.p_min;
      gobj -= d.gq_hi[gi][t] * gp.q_max - d.gq_lo[gi][t] * gp.q_min;
    }
  }
  for (size_t t = 0; t < T; ++t) gobj -= d.sigma[t] * u0;
  sol.dual_objective = gobj;

  double scale = std::max({1.0, std::abs(sol.objective), std::abs(gobj)});
  if (std::abs(sol.objective - gobj) > 1e-8 * scale)
    throw BackendError("LP primal-dual gap " + std::to_string(std::abs(sol.objective - gobj)) +
                       " exceeds tolerance");
  return sol;
}

}  // namespace gridshare
