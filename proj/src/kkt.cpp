#include "gridshare/kkt.hpp"

#include <chrono>
#include <cmath>

namespace gridshare {

namespace {

std::string tag(const char* what, int a, int t) {
  return std::string(what) + "_" + std::to_string(a) + "_t" + std::to_string(t);
}

}  // namespace

DualAccessor accessor_from_vars(const DualVarHandles& d) {
  DualAccessor a;
  a.lambda_p = [&d](int b, int t) { return LinExpr(d.lambda_p[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.lambda_q = [&d](int b, int t) { return LinExpr(d.lambda_q[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.mu_lo = [&d](int b, int t) { return LinExpr(d.mu_lo[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.mu_hi = [&d](int b, int t) { return LinExpr(d.mu_hi[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.nu = [&d](int e, int t) { return LinExpr(d.nu[static_cast<size_t>(e)][static_cast<size_t>(t)]); };
  a.gp_lo = [&d](int g, int t) { return LinExpr(d.gp_lo[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.gp_hi = [&d](int g, int t) { return LinExpr(d.gp_hi[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.gq_lo = [&d](int g, int t) { return LinExpr(d.gq_lo[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.gq_hi = [&d](int g, int t) { return LinExpr(d.gq_hi[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.sigma = [&d](int t) { return LinExpr(d.sigma[static_cast<size_t>(t)]); };
  return a;
}

DualAccessor accessor_from_values(const DualState& d) {
  DualAccessor a;
  a.lambda_p = [&d](int b, int t) { return LinExpr(d.lambda_p[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.lambda_q = [&d](int b, int t) { return LinExpr(d.lambda_q[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.mu_lo = [&d](int b, int t) { return LinExpr(d.lambda_u_lo[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.mu_hi = [&d](int b, int t) { return LinExpr(d.lambda_u_hi[static_cast<size_t>(b)][static_cast<size_t>(t)]); };
  a.nu = [&d](int e, int t) { return LinExpr(d.lambda_volt[static_cast<size_t>(e)][static_cast<size_t>(t)]); };
  a.gp_lo = [&d](int g, int t) { return LinExpr(d.gp_lo[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.gp_hi = [&d](int g, int t) { return LinExpr(d.gp_hi[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.gq_lo = [&d](int g, int t) { return LinExpr(d.gq_lo[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.gq_hi = [&d](int g, int t) { return LinExpr(d.gq_hi[static_cast<size_t>(g)][static_cast<size_t>(t)]); };
  a.sigma = [&d](int t) { return LinExpr(d.sigma[static_cast<size_t>(t)]); };
  return a;
}

std::vector<StationarityRow> stationarity_rows(const NetworkCase& c, const GridHandles& g,
                                               const DualAccessor& dual) {
  const int n = static_cast<int>(c.buses.size());
  const int T = c.horizon;
  const int L = static_cast<int>(c.lines.size());
  const double dt = c.dt_hours;
  const double s = c.s_base_kva;
  std::vector<StationarityRow> rows;

  // d/d(pg), d/d(qg)
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi) {
    int b = g.gen_bus[gi];
    for (int t = 0; t < T; ++t) {
      double price = b == c.slack_bus() ? c.lmp[static_cast<size_t>(t)]
                                        : c.buses[static_cast<size_t>(b)].generator->marginal_cost;
      LinExpr pe = LinExpr(dt * price) - dual.lambda_p(b, t) - dual.gp_lo(static_cast<int>(gi), t) +
                   dual.gp_hi(static_cast<int>(gi), t);
      rows.push_back({pe, tag("st_pg_b", b, t)});
      LinExpr qe = LinExpr(0.0) - dual.lambda_q(b, t) - dual.gq_lo(static_cast<int>(gi), t) +
                   dual.gq_hi(static_cast<int>(gi), t);
      rows.push_back({qe, tag("st_qg_b", b, t)});
    }
  }
  // d/d(P), d/d(Q): flow from -> to
  for (int e = 0; e < L; ++e) {
    const Line& ln = c.lines[static_cast<size_t>(e)];
    for (int t = 0; t < T; ++t) {
      LinExpr pe = dual.nu(e, t) * (2.0 * ln.r / s) + dual.lambda_p(ln.from_bus, t) -
                   dual.lambda_p(ln.to_bus, t);
      rows.push_back({pe, tag("st_P_l", e, t)});
      LinExpr qe = dual.nu(e, t) * (2.0 * ln.x / s) + dual.lambda_q(ln.from_bus, t) -
                   dual.lambda_q(ln.to_bus, t);
      rows.push_back({qe, tag("st_Q_l", e, t)});
    }
  }
  // d/d(u): incident voltage-drop multipliers, window multipliers, slack fix
  for (int b = 0; b < n; ++b) {
    for (int t = 0; t < T; ++t) {
      LinExpr ue;
      for (int e = 0; e < L; ++e) {
        if (c.lines[static_cast<size_t>(e)].to_bus == b) ue += dual.nu(e, t);
        if (c.lines[static_cast<size_t>(e)].from_bus == b) ue -= dual.nu(e, t);
      }
      if (b == c.slack_bus())
        ue += dual.sigma(t);
      else
        ue += dual.mu_hi(b, t) - dual.mu_lo(b, t);
      rows.push_back({ue, tag("st_u_b", b, t)});
    }
  }

  const size_t expected =
      static_cast<size_t>(T) * (2 * g.gen_bus.size() + 2 * static_cast<size_t>(L) + static_cast<size_t>(n));
  if (rows.size() != expected)
    throw UnhousedVariableError("stationarity emitted " + std::to_string(rows.size()) +
                                " rows, expected " + std::to_string(expected));
  return rows;
}

double max_stationarity_residual(const NetworkCase& c, const GridHandles& g, const DualState& d) {
  double worst = 0.0;
  for (const auto& row : stationarity_rows(c, g, accessor_from_values(d)))
    worst = std::max(worst, std::abs(row.expr.constant()));
  return worst;
}

void build_complementarity(ModelInstance& model, std::vector<ComplementarityPair>& pairs) {
  for (auto& pr : pairs) {
    pr.zswitch = model.add_binary("z_" + pr.name);
    model.add_le(LinExpr(pr.multiplier) - LinExpr(pr.zswitch) * pr.m_dual, 0.0, "compd_" + pr.name);
    LinExpr slack_side = pr.slack + LinExpr(pr.zswitch) * pr.m_slack;
    model.add_le(slack_side, pr.m_slack, "comps_" + pr.name);
  }
}

LinExpr build_duality_objective(const NetworkCase& c, const std::set<int>& active,
                                const CeaHandles& cea, const GridHandles& grid,
                                const DualVarHandles& duals, const InjectionMap& inj) {
  const int T = c.horizon;
  const double dt = c.dt_hours;
  LinExpr obj = dso_cost_expr(c, grid);

  // Price terms run over non-community buses only; a passive community's
  // -lambda*p_inj cancels against its settlement term, which keeps the
  // objective equal to the settlement of every community, active or not.
  for (const auto& bus : c.buses) {
    const size_t b = static_cast<size_t>(bus.id);
    if (!inj.is_fixed[b] || c.is_community(bus.id)) continue;
    for (int t = 0; t < T; ++t) {
      obj += LinExpr(duals.lambda_p[b][static_cast<size_t>(t)]) *
             inj.p[b][static_cast<size_t>(t)].constant();
      obj += LinExpr(duals.lambda_q[b][static_cast<size_t>(t)]) *
             inj.q[b][static_cast<size_t>(t)].constant();
    }
  }
  // curtailment compensation for scheduled communities
  for (int bus : active) {
    const CommunityVarHandles& h = cea.at(bus);
    double pi_flex = c.communities[static_cast<size_t>(c.community_index(bus))].flex.pi_flex;
    for (int t = 0; t < T; ++t)
      obj += LinExpr(h.p_red[static_cast<size_t>(t)]) * (dt * pi_flex);
  }
  // generator bound terms
  for (size_t gi = 0; gi < grid.gen_bus.size(); ++gi) {
    const GeneratorParams& gp = *c.buses[static_cast<size_t>(grid.gen_bus[gi])].generator;
    for (int t = 0; t < T; ++t) {
      const size_t ts = static_cast<size_t>(t);
      obj += LinExpr(duals.gp_hi[gi][ts]) * gp.p_max - LinExpr(duals.gp_lo[gi][ts]) * gp.p_min;
      obj += LinExpr(duals.gq_hi[gi][ts]) * gp.q_max - LinExpr(duals.gq_lo[gi][ts]) * gp.q_min;
    }
  }
  // voltage bound terms
  for (const auto& bus : c.buses) {
    if (bus.id == c.slack_bus()) continue;
    const size_t b = static_cast<size_t>(bus.id);
    for (int t = 0; t < T; ++t) {
      const size_t ts = static_cast<size_t>(t);
      obj += LinExpr(duals.mu_hi[b][ts]) * (bus.v_max * bus.v_max) -
             LinExpr(duals.mu_lo[b][ts]) * (bus.v_min * bus.v_min);
    }
  }
  // slack-voltage fix enters the dual objective once the reference is pinned
  const double u0 = c.slack_voltage * c.slack_voltage;
  for (int t = 0; t < T; ++t) obj += LinExpr(duals.sigma[static_cast<size_t>(t)]) * u0;
  return obj;
}

SingleLevelModel build_single_level(const NetworkCase& c, const std::set<int>& active,
                                    double big_m_dual) {
  SingleLevelModel slm;
  slm.active = active;
  slm.big_m_dual = big_m_dual;
  ModelInstance& model = slm.model;

  slm.cea = build_cea_constraints(c, active, model);
  slm.injections = injection_coupling(c, active, slm.cea);
  slm.grid = build_dso_lp(c, slm.injections, model);

  const size_t n = c.buses.size();
  const int T = c.horizon;
  const size_t L = c.lines.size();
  DualVarHandles& d = slm.duals;
  d.lambda_p.resize(n);
  d.lambda_q.resize(n);
  d.mu_lo.resize(n);
  d.mu_hi.resize(n);
  for (size_t b = 0; b < n; ++b)
    for (int t = 0; t < T; ++t) {
      d.lambda_p[b].push_back(model.add_free(tag("lamp_b", static_cast<int>(b), t)));
      d.lambda_q[b].push_back(model.add_free(tag("lamq_b", static_cast<int>(b), t)));
      if (static_cast<int>(b) == c.slack_bus()) {
        d.mu_lo[b].push_back(VarId{});
        d.mu_hi[b].push_back(VarId{});
      } else {
        d.mu_lo[b].push_back(model.add_nonneg(tag("mulo_b", static_cast<int>(b), t)));
        d.mu_hi[b].push_back(model.add_nonneg(tag("muhi_b", static_cast<int>(b), t)));
      }
    }
  d.nu.resize(L);
  for (size_t e = 0; e < L; ++e)
    for (int t = 0; t < T; ++t)
      d.nu[e].push_back(model.add_free(tag("nu_l", static_cast<int>(e), t)));
  const size_t ng = slm.grid.gen_bus.size();
  d.gp_lo.resize(ng);
  d.gp_hi.resize(ng);
  d.gq_lo.resize(ng);
  d.gq_hi.resize(ng);
  for (size_t gi = 0; gi < ng; ++gi) {
    int b = slm.grid.gen_bus[gi];
    for (int t = 0; t < T; ++t) {
      d.gp_lo[gi].push_back(model.add_nonneg(tag("alo_b", b, t)));
      d.gp_hi[gi].push_back(model.add_nonneg(tag("ahi_b", b, t)));
      d.gq_lo[gi].push_back(model.add_nonneg(tag("blo_b", b, t)));
      d.gq_hi[gi].push_back(model.add_nonneg(tag("bhi_b", b, t)));
    }
  }
  for (int t = 0; t < T; ++t) d.sigma.push_back(model.add_free(tag("sigma", 0, t)));

  for (const auto& row : stationarity_rows(c, slm.grid, accessor_from_vars(d)))
    model.add_eq(row.expr, 0.0, row.name);

  // complementarity pairs for every DSO inequality (voltage windows and
  // generator bounds; both sides each)
  for (const auto& bus : c.buses) {
    if (bus.id == c.slack_bus()) continue;
    const size_t b = static_cast<size_t>(bus.id);
    const double lo2 = bus.v_min * bus.v_min, hi2 = bus.v_max * bus.v_max;
    for (int t = 0; t < T; ++t) {
      const size_t ts = static_cast<size_t>(t);
      ComplementarityPair plo;
      plo.slack = LinExpr(slm.grid.u[b][ts]) - LinExpr(lo2);
      plo.multiplier = d.mu_lo[b][ts];
      plo.m_dual = big_m_dual;
      plo.m_slack = hi2 - lo2;
      plo.name = tag("vlo_b", bus.id, t);
      slm.pairs.push_back(std::move(plo));
      ComplementarityPair phi;
      phi.slack = LinExpr(hi2) - LinExpr(slm.grid.u[b][ts]);
      phi.multiplier = d.mu_hi[b][ts];
      phi.m_dual = big_m_dual;
      phi.m_slack = hi2 - lo2;
      phi.name = tag("vhi_b", bus.id, t);
      slm.pairs.push_back(std::move(phi));
    }
  }
  for (size_t gi = 0; gi < ng; ++gi) {
    int b = slm.grid.gen_bus[gi];
    const GeneratorParams& gp = *c.buses[static_cast<size_t>(b)].generator;
    for (int t = 0; t < T; ++t) {
      const size_t ts = static_cast<size_t>(t);
      auto push = [&](LinExpr slack, VarId mult, double range, const char* nm) {
        ComplementarityPair pr;
        pr.slack = std::move(slack);
        pr.multiplier = mult;
        pr.m_dual = big_m_dual;
        pr.m_slack = range;
        pr.name = tag(nm, b, t);
        slm.pairs.push_back(std::move(pr));
      };
      push(LinExpr(slm.grid.pg[gi][ts]) - LinExpr(gp.p_min), d.gp_lo[gi][ts], gp.p_max - gp.p_min,
           "gplo_b");
      push(LinExpr(gp.p_max) - LinExpr(slm.grid.pg[gi][ts]), d.gp_hi[gi][ts], gp.p_max - gp.p_min,
           "gphi_b");
      push(LinExpr(slm.grid.qg[gi][ts]) - LinExpr(gp.q_min), d.gq_lo[gi][ts], gp.q_max - gp.q_min,
           "gqlo_b");
      push(LinExpr(gp.q_max) - LinExpr(slm.grid.qg[gi][ts]), d.gq_hi[gi][ts], gp.q_max - gp.q_min,
           "gqhi_b");
    }
  }
  build_complementarity(model, slm.pairs);

  model.set_objective(build_duality_objective(c, active, slm.cea, slm.grid, d, slm.injections));
  return slm;
}

ComplementarityAudit audit_complementarity(const SingleLevelModel& slm, const SolveOutcome& out) {
  ComplementarityAudit audit;
  for (const auto& pr : slm.pairs) {
    double mult = out.value(pr.multiplier);
    double slack = out.eval(pr.slack);
    double prod = std::abs(mult * slack);
    if (prod > audit.max_product) {
      audit.max_product = prod;
      audit.worst_pair = pr.name;
    }
    audit.max_multiplier = std::max(audit.max_multiplier, mult);
    if (mult >= pr.m_dual * (1.0 - 1e-3)) audit.saturated = true;
  }
  return audit;
}

namespace {

DualState duals_from_vars(const NetworkCase& c, const GridHandles& g, const DualVarHandles& d,
                          const SolveOutcome& out) {
  const size_t n = c.buses.size();
  const size_t T = static_cast<size_t>(c.horizon);
  DualState v;
  v.lambda_p.assign(n, std::vector<double>(T, 0.0));
  v.lambda_q.assign(n, std::vector<double>(T, 0.0));
  v.lambda_volt.assign(c.lines.size(), std::vector<double>(T, 0.0));
  v.lambda_u_lo.assign(n, std::vector<double>(T, 0.0));
  v.lambda_u_hi.assign(n, std::vector<double>(T, 0.0));
  v.gp_lo.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  v.gp_hi.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  v.gq_lo.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  v.gq_hi.assign(g.gen_bus.size(), std::vector<double>(T, 0.0));
  v.sigma.assign(T, 0.0);
  for (size_t b = 0; b < n; ++b)
    for (size_t t = 0; t < T; ++t) {
      v.lambda_p[b][t] = out.value(d.lambda_p[b][t]);
      v.lambda_q[b][t] = out.value(d.lambda_q[b][t]);
      if (static_cast<int>(b) != c.slack_bus()) {
        v.lambda_u_lo[b][t] = out.value(d.mu_lo[b][t]);
        v.lambda_u_hi[b][t] = out.value(d.mu_hi[b][t]);
      }
    }
  for (size_t e = 0; e < c.lines.size(); ++e)
    for (size_t t = 0; t < T; ++t) v.lambda_volt[e][t] = out.value(d.nu[e][t]);
  for (size_t gi = 0; gi < g.gen_bus.size(); ++gi)
    for (size_t t = 0; t < T; ++t) {
      v.gp_lo[gi][t] = out.value(d.gp_lo[gi][t]);
      v.gp_hi[gi][t] = out.value(d.gp_hi[gi][t]);
      v.gq_lo[gi][t] = out.value(d.gq_lo[gi][t]);
      v.gq_hi[gi][t] = out.value(d.gq_hi[gi][t]);
    }
  for (size_t t = 0; t < T; ++t) v.sigma[t] = out.value(d.sigma[t]);
  return v;
}

}  // namespace

CoalitionSolveResult solve_single_level(const NetworkCase& c, const std::set<int>& active,
                                        const SingleLevelOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int attempt = 0;; ++attempt) {
    const double m_dual = c.big_m * std::pow(10.0, attempt);
    SingleLevelModel slm = build_single_level(c, active, m_dual);
    SolveOptions sopts;
    sopts.gap_tol = opts.gap_tol;
    sopts.time_limit_s = opts.time_limit_s;
    sopts.log = opts.log;
    SolveOutcome out = solve(slm.model, sopts);
    if (out.status == SolveStatus::Infeasible)
      throw InfeasibleError("single-level model infeasible for coalition");
    if (out.status == SolveStatus::Unbounded)
      throw UnboundedError("single-level model unbounded; check case data");
    if (out.status == SolveStatus::Limit)
      throw BackendError("single-level solve hit a limit before optimality");

    ComplementarityAudit audit = audit_complementarity(slm, out);
    if (audit.saturated) {
      if (attempt >= opts.max_escalations)
        throw BigMSaturatedError("multiplier near M after " + std::to_string(attempt) +
                                 " escalations (pair " + audit.worst_pair + ")");
      continue;
    }

    CoalitionSolveResult r;
    r.active = active;
    r.objective = out.objective;
    r.schedule = extract_schedule(c, slm.cea, out);
    r.grid = extract_grid_state(c, slm.grid, slm.injections, out);
    r.duals = duals_from_vars(c, slm.grid, slm.duals, out);
    r.max_comp_product = audit.max_product;
    r.max_multiplier = audit.max_multiplier;
    r.big_m_used = m_dual;
    r.escalations = attempt;
    r.milp_gap = out.gap;

    for (int bus : active) {
      const auto& pb = r.schedule.by_bus.at(bus);
      double pi_flex = c.communities[static_cast<size_t>(c.community_index(bus))].flex.pi_flex;
      double settle = 0.0;
      const size_t b = static_cast<size_t>(bus);
      for (size_t t = 0; t < static_cast<size_t>(c.horizon); ++t)
        settle += r.duals.lambda_p[b][t] * pb.p_c[t] + r.duals.lambda_q[b][t] * pb.q_c[t] +
                  c.dt_hours * pi_flex * pb.p_red[t];
      r.settlement_by_ec[bus] = settle;
      r.settlement_by_bus[bus] = settle;
      r.max_cea_violation = std::max(r.max_cea_violation, max_cea_residual(c, bus, pb));
    }
    for (const auto& bus : c.buses) {
      const size_t b = static_cast<size_t>(bus.id);
      if (!slm.injections.is_fixed[b]) continue;
      double settle = 0.0;
      for (size_t t = 0; t < static_cast<size_t>(c.horizon); ++t)
        settle -= r.duals.lambda_p[b][t] * slm.injections.p[b][t].constant() +
                  r.duals.lambda_q[b][t] * slm.injections.q[b][t].constant();
      r.settlement_by_bus[bus.id] = settle;
      // a passive community settles its fixed profile at the solved prices
      if (c.is_community(bus.id)) r.settlement_by_ec[bus.id] = settle;
    }
    for (const auto& [bus, settle] : r.settlement_by_ec) r.settlement_total += settle;

    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
}

DsoCrossCheck cross_check_dso(const NetworkCase& c, const CoalitionSolveResult& r) {
  DsoCrossCheck x;
  const double dt = c.dt_hours;
  // generator list in the result mirrors build order: bus-ascending
  std::vector<int> gen_bus;
  for (const auto& bus : c.buses)
    if (bus.generator) gen_bus.push_back(bus.id);
  for (size_t gi = 0; gi < r.grid.pg.size(); ++gi) {
    int b = gen_bus.at(gi);
    for (size_t t = 0; t < static_cast<size_t>(c.horizon); ++t) {
      double price = b == c.slack_bus() ? c.lmp[t] : c.buses[static_cast<size_t>(b)].generator->marginal_cost;
      x.embedded_cost += dt * price * r.grid.pg[gi][t];
    }
  }
  std::vector<TimeSeries> pinj(c.buses.size()), qinj(c.buses.size());
  for (size_t b = 0; b < c.buses.size(); ++b) {
    pinj[b] = r.grid.p_inj[b];
    qinj[b] = r.grid.q_inj[b];
  }
  DsoSolution lp = solve_dso_lp(c, pinj, qinj);
  x.standalone_cost = lp.objective;
  for (size_t b = 0; b < c.buses.size(); ++b)
    for (size_t t = 0; t < static_cast<size_t>(c.horizon); ++t) {
      x.embedded_settlement += r.duals.lambda_p[b][t] * r.grid.p_inj[b][t];
      x.standalone_settlement += lp.duals.lambda_p[b][t] * lp.grid.p_inj[b][t];
    }
  return x;
}

}  // namespace gridshare
