#include <doctest.h>

#include <cmath>
#include <iostream>
#include <random>

#include "gridshare/casegen.hpp"
#include "gridshare/kkt.hpp"

using namespace gridshare;

namespace {

std::pair<std::vector<TimeSeries>, std::vector<TimeSeries>> passive_injection_matrix(
    const NetworkCase& c) {
  CeaHandles empty;
  InjectionMap im = injection_coupling(c, {}, empty);
  std::vector<TimeSeries> p(c.buses.size()), q(c.buses.size());
  for (size_t b = 0; b < c.buses.size(); ++b)
    for (int t = 0; t < c.horizon; ++t) {
      p[b].push_back(im.p[b][static_cast<size_t>(t)].constant());
      q[b].push_back(im.q[b][static_cast<size_t>(t)].constant());
    }
  return {p, q};
}

}  // namespace

TEST_CASE("slack-only network pins the price to the wholesale rate") {
  std::string j = R"({
    "meta": {"horizon": 2},
    "buses": [{"id": 0, "kind": "slack", "load_p": 25.0,
               "generator": {"p_min_kw": -400, "p_max_kw": 400}}],
    "lines": [],
    "lmp_mwh": [40.0, 55.0]
  })";
  NetworkCase c = parse_case(j);
  auto [p, q] = passive_injection_matrix(c);
  DsoSolution sol = solve_dso_lp(c, p, q);
  for (int t = 0; t < 2; ++t)
    CHECK(sol.duals.lambda_p[0][static_cast<size_t>(t)] ==
          doctest::Approx(c.dt_hours * c.lmp[static_cast<size_t>(t)]).epsilon(1e-9));

  ModelInstance m;
  GridHandles g = build_dso_lp(c, fixed_injections(c, p, q), m);
  CHECK(max_stationarity_residual(c, g, sol.duals) <= 1e-7);
}

TEST_CASE("a generator at its bound prices at cost plus the bound multiplier") {
  std::string j = R"({
    "meta": {"horizon": 1},
    "buses": [
      {"id": 0, "kind": "slack", "generator": {"p_min_kw": -50, "p_max_kw": 50}},
      {"id": 1, "kind": "load", "load_p": 100.0,
       "generator": {"marginal_cost_mwh": 250.0, "p_min_kw": 0, "p_max_kw": 200}}
    ],
    "lines": [{"from": 0, "to": 1, "r": 0.01, "x": 0.02}],
    "lmp_mwh": [40.0]
  })";
  NetworkCase c = parse_case(j);
  auto [p, q] = passive_injection_matrix(c);
  DsoSolution sol = solve_dso_lp(c, p, q);
  // slack import saturates at 50; the peaker covers the rest below its cap
  CHECK(sol.duals.lambda_p[1][0] == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(sol.duals.gp_hi[0][0] == doctest::Approx(sol.duals.lambda_p[0][0] - 0.04).epsilon(1e-7));
  ModelInstance m;
  GridHandles g = build_dso_lp(c, fixed_injections(c, p, q), m);
  CHECK(max_stationarity_residual(c, g, sol.duals) <= 1e-7);
}

TEST_CASE("stationarity certification on a radial 3-bus chain") {
  std::string j = R"({
    "meta": {"horizon": 2},
    "buses": [
      {"id": 0, "kind": "slack", "generator": {"p_min_kw": -400, "p_max_kw": 400}},
      {"id": 1, "kind": "load", "load_p": [60.0, 80.0], "load_q": [12.0, 16.0]},
      {"id": 2, "kind": "load", "load_p": [40.0, 90.0], "load_q": [8.0, 18.0],
       "generator": {"marginal_cost_mwh": 250.0, "p_min_kw": 0, "p_max_kw": 120}}
    ],
    "lines": [
      {"from": 0, "to": 1, "r": 0.012, "x": 0.016},
      {"from": 1, "to": 2, "r": 0.015, "x": 0.02}
    ],
    "lmp_mwh": [40.0, 55.0]
  })";
  NetworkCase c = parse_case(j);
  auto [p, q] = passive_injection_matrix(c);
  DsoSolution sol = solve_dso_lp(c, p, q);
  ModelInstance m;
  GridHandles g = build_dso_lp(c, fixed_injections(c, p, q), m);
  CHECK(max_stationarity_residual(c, g, sol.duals) <= 1e-7);
}

TEST_CASE("stationarity holds on randomized fixed-injection instances") {
  std::mt19937_64 rng(20240818u);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  };
  NetworkCase c = make_toy6(3, 4);
  for (int iter = 0; iter < 6; ++iter) {
    auto [p, q] = passive_injection_matrix(c);
    for (size_t b = 1; b < c.buses.size(); ++b)
      for (int t = 0; t < c.horizon; ++t) {
        p[b][static_cast<size_t>(t)] *= uni(0.5, 1.5);
        q[b][static_cast<size_t>(t)] *= uni(0.5, 1.5);
      }
    DsoSolution sol = solve_dso_lp(c, p, q);
    ModelInstance m;
    GridHandles g = build_dso_lp(c, fixed_injections(c, p, q), m);
    CHECK(max_stationarity_residual(c, g, sol.duals) <= 1e-7);
  }
}

TEST_CASE("complementarity big-M semantics") {
  ModelInstance m;
  VarId lam = m.add_nonneg("lam");
  VarId s = m.add_var(0.0, 8.0, "s");
  std::vector<ComplementarityPair> pairs(1);
  pairs[0].slack = LinExpr(s);
  pairs[0].multiplier = lam;
  pairs[0].m_dual = 100.0;
  pairs[0].m_slack = 8.0;
  pairs[0].name = "demo";
  build_complementarity(m, pairs);

  SUBCASE("z = 0 forces the multiplier to zero and frees the slack") {
    m.add_eq(LinExpr(pairs[0].zswitch), 0.0, "pin_z");
    m.set_objective(LinExpr(lam) * -1.0 + LinExpr(s) * -1.0);
    SolveOutcome out = solve(m);
    REQUIRE(out.optimal());
    CHECK(out.value(lam) == doctest::Approx(0.0));
    CHECK(out.value(s) == doctest::Approx(8.0));
  }
  SUBCASE("z = 1 forces the slack to zero and frees the multiplier") {
    m.add_eq(LinExpr(pairs[0].zswitch), 1.0, "pin_z");
    m.set_objective(LinExpr(lam) * -1.0 + LinExpr(s) * -1.0);
    SolveOutcome out = solve(m);
    REQUIRE(out.optimal());
    CHECK(out.value(s) == doctest::Approx(0.0));
    CHECK(out.value(lam) == doctest::Approx(100.0));
  }
}

TEST_CASE("duality objective reduces to generator cost when all duals vanish") {
  NetworkCase c = make_toy6(5, 3);
  std::set<int> active = {c.communities[0].bus};
  SingleLevelModel slm = build_single_level(c, active, c.big_m);

  SolveOutcome fake;
  fake.status = SolveStatus::Optimal;
  fake.primal.assign(static_cast<size_t>(slm.model.n_vars()), 0.0);
  std::mt19937_64 rng(5);
  double expect = 0.0;
  for (size_t gi = 0; gi < slm.grid.gen_bus.size(); ++gi) {
    int b = slm.grid.gen_bus[gi];
    for (int t = 0; t < c.horizon; ++t) {
      double v = static_cast<double>(rng() % 100);
      fake.primal[static_cast<size_t>(slm.grid.pg[gi][static_cast<size_t>(t)].v)] = v;
      double price = b == 0 ? c.lmp[static_cast<size_t>(t)]
                            : c.buses[static_cast<size_t>(b)].generator->marginal_cost;
      expect += c.dt_hours * price * v;
    }
  }
  CHECK(fake.eval(slm.model.objective()) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("single-level solve on the toy feeder") {
  NetworkCase c = make_toy6();

  CoalitionSolveResult empty = solve_single_level(c, {});
  // objective equals the no-coalition baseline: every community passive
  CHECK(std::abs(empty.objective - empty.settlement_total) <=
        1e-5 * std::max(1.0, std::abs(empty.objective)));
  CHECK(empty.schedule.by_bus.empty());
  CHECK(empty.max_comp_product <= 1e-6 * empty.big_m_used);
  CHECK(empty.settlement_by_ec.size() == c.communities.size());

  // KKT consistency: embedded dispatch cost equals a standalone LP re-solve
  DsoCrossCheck x = cross_check_dso(c, empty);
  CHECK(std::abs(x.embedded_cost - x.standalone_cost) <=
        1e-6 * std::max(1.0, std::abs(x.standalone_cost)));
  CHECK(std::abs(x.embedded_settlement - x.standalone_settlement) <=
        1e-5 * std::max(1.0, std::abs(x.standalone_settlement)));

  // a zero-capacity community leaves the optimum untouched
  int null_bus = c.communities[2].bus;
  CoalitionSolveResult null_only = solve_single_level(c, {null_bus});
  CHECK(std::abs(null_only.objective - empty.objective) <=
        1e-5 * std::max(1.0, std::abs(empty.objective)));

  // strong-duality identity on a scheduled coalition
  std::set<int> active = {c.communities[0].bus, c.communities[1].bus};
  CoalitionSolveResult r = solve_single_level(c, active);
  CHECK(std::abs(r.objective - r.settlement_total) <=
        1e-5 * std::max(1.0, std::abs(r.objective)));
  CHECK(r.max_cea_violation <= 1e-6);
  CHECK(r.max_comp_product <= 1e-6 * r.big_m_used);
  CHECK(r.max_multiplier < 0.999 * r.big_m_used);

  // the solved duals satisfy stationarity as re-emitted rows
  ModelInstance probe;
  CeaHandles ph = build_cea_constraints(c, {}, probe);
  InjectionMap pim = injection_coupling(c, {}, ph);
  GridHandles pg = build_dso_lp(c, pim, probe);
  CHECK(max_stationarity_residual(c, pg, r.duals) <= 1e-6);

  DsoCrossCheck x2 = cross_check_dso(c, r);
  CHECK(std::abs(x2.embedded_cost - x2.standalone_cost) <=
        1e-6 * std::max(1.0, std::abs(x2.standalone_cost)));
}

TEST_CASE("activating communities never raises the all-community settlement") {
  NetworkCase c = make_toy6();
  std::vector<int> buses;
  for (const auto& ec : c.communities) buses.push_back(ec.bus);

  std::vector<double> objectives;
  std::set<int> grand(buses.begin(), buses.end());
  CoalitionSolveResult g = solve_single_level(c, grand);
  for (int mask = 0; mask < 8; ++mask) {
    std::set<int> active;
    for (int i = 0; i < 3; ++i)
      if (mask & (1 << i)) active.insert(buses[static_cast<size_t>(i)]);
    CoalitionSolveResult r = solve_single_level(c, active);
    objectives.push_back(r.objective);
    CHECK(g.objective <= r.objective + 1e-5 * std::max(1.0, std::abs(r.objective)));
    CHECK(std::abs(r.objective - r.settlement_total) <=
          1e-5 * std::max(1.0, std::abs(r.objective)));
  }
}

TEST_CASE("19-bus grand coalition solves within the runtime budget") {
  NetworkCase c = make_cigre19();
  std::set<int> grand;
  for (const auto& ec : c.communities) grand.insert(ec.bus);
  CoalitionSolveResult r = solve_single_level(c, grand);
  std::cout << "[perf] cigre19 grand coalition: " << r.wall_time_s << " s, objective " << r.objective
            << ", escalations " << r.escalations << "\n";
  CHECK(std::abs(r.objective - r.settlement_total) <=
        1e-5 * std::max(1.0, std::abs(r.objective)));
  CHECK(r.wall_time_s < 30.0);
}
