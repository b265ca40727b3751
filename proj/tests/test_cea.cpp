#include <doctest.h>

#include <cmath>
#include <random>

#include "gridshare/casegen.hpp"
#include "gridshare/cea.hpp"

using namespace gridshare;

namespace {

// Fix every community decision that the test does not care about by solving a
// tiny feasibility model with pinned values.
SolveOutcome solve_with(ModelInstance& m) {
  m.set_objective(LinExpr());
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  return out;
}

}  // namespace

TEST_CASE("BESS state of charge follows the efficiency recursion") {
  // eta = 0.95, dt = 1 h, charging 10 kW from 25 kWh gives 34.5 kWh
  NetworkCase c = make_toy6();
  c.communities[0].bess.e_init = 25.0;
  c.communities[0].bess.e_final = 25.0;
  int bus = c.communities[0].bus;

  ModelInstance m;
  CeaHandles h = build_cea_constraints(c, {bus}, m);
  const auto& vh = h.at(bus);
  m.add_eq(LinExpr(vh.p_ch[0]), 10.0, "pin_pch");
  m.add_eq(LinExpr(vh.p_dis[0]), 0.0, "pin_pdis");
  SolveOutcome out = solve_with(m);
  CHECK(out.value(vh.e[0]) == doctest::Approx(25.0));
  CHECK(out.value(vh.e[1]) == doctest::Approx(34.5).epsilon(1e-9));
}

TEST_CASE("zero PV forecast forces both PV outputs to zero") {
  NetworkCase c = make_toy6();
  int bus = c.communities[0].bus;
  for (auto& v : c.communities[0].pv.forecast) v = 0.0;

  ModelInstance m;
  CeaHandles h = build_cea_constraints(c, {bus}, m);
  const auto& vh = h.at(bus);
  // push q_pv upward; the cone must pin it at zero anyway
  LinExpr obj;
  for (int t = 0; t < c.horizon; ++t) obj -= LinExpr(vh.q_pv[static_cast<size_t>(t)]);
  m.set_objective(obj);
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  for (int t = 0; t < c.horizon; ++t) {
    CHECK(std::abs(out.value(vh.p_pv[static_cast<size_t>(t)])) <= 1e-9);
    CHECK(std::abs(out.value(vh.q_pv[static_cast<size_t>(t)])) <= 1e-9);
  }
}

TEST_CASE("curtailment window: 30% flexibility over 100 kW load") {
  NetworkCase c = make_toy6();
  int bus = c.communities[0].bus;
  auto& host = c.buses[static_cast<size_t>(bus)];
  host.load_p.assign(static_cast<size_t>(c.horizon), 100.0);
  c.communities[0].flex.p_flex_max.assign(static_cast<size_t>(c.horizon), 30.0);

  ModelInstance m;
  CeaHandles h = build_cea_constraints(c, {bus}, m);
  const auto& vh = h.at(bus);
  // minimize p_load -> hits 70; maximize -> 100
  m.set_objective(LinExpr(vh.p_load[0]));
  SolveOutcome lo = solve(m);
  REQUIRE(lo.optimal());
  CHECK(lo.value(vh.p_load[0]) == doctest::Approx(70.0));
  m.set_objective(LinExpr(vh.p_load[0]) * -1.0);
  SolveOutcome hi = solve(m);
  REQUIRE(hi.optimal());
  CHECK(hi.value(vh.p_load[0]) == doctest::Approx(100.0));
  CHECK(hi.value(vh.p_red[0]) == doctest::Approx(0.0));
}

TEST_CASE("handles for inactive buses are refused") {
  NetworkCase c = make_toy6();
  ModelInstance m;
  CeaHandles h = build_cea_constraints(c, {c.communities[0].bus}, m);
  CHECK_THROWS_AS(h.at(c.communities[1].bus), InactiveCommunityError);
}

TEST_CASE("passive profile composes load and PV forecast") {
  NetworkCase c = make_toy6();
  int bus = c.communities[0].bus;
  auto& host = c.buses[static_cast<size_t>(bus)];
  auto& pv = c.communities[0].pv.forecast;

  SUBCASE("load 50, PV 20 nets to 30") {
    host.load_p.assign(static_cast<size_t>(c.horizon), 50.0);
    pv.assign(static_cast<size_t>(c.horizon), 20.0);
    auto [pc, qc] = passive_profile(c, bus);
    CHECK(pc[0] == doctest::Approx(30.0));
    CHECK(qc[0] == doctest::Approx(host.load_q[0]));
  }
  SUBCASE("no PV nets to the forecast load") {
    pv.assign(static_cast<size_t>(c.horizon), 0.0);
    auto [pc, qc] = passive_profile(c, bus);
    for (int t = 0; t < c.horizon; ++t)
      CHECK(pc[static_cast<size_t>(t)] == doctest::Approx(host.load_p[static_cast<size_t>(t)]));
  }
  SUBCASE("PV above load exports") {
    host.load_p.assign(static_cast<size_t>(c.horizon), 50.0);
    c.communities[0].flex.p_flex_max.assign(static_cast<size_t>(c.horizon), 10.0);
    pv.assign(static_cast<size_t>(c.horizon), 60.0);
    auto [pc, qc] = passive_profile(c, bus);
    CHECK(pc[0] == doctest::Approx(-10.0));
  }
}

TEST_CASE("cea_cost matches a brute-force summation oracle") {
  NetworkCase c = make_toy6();
  std::mt19937_64 rng(99);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  };

  CommunitySchedule s;
  PriceSeries prices;
  for (const auto& ec : c.communities) {
    CommunitySchedule::PerBus pb;
    TimeSeries lp, lq;
    for (int t = 0; t < c.horizon; ++t) {
      pb.p_c.push_back(uni(-30.0, 60.0));
      pb.q_c.push_back(uni(-10.0, 15.0));
      pb.p_red.push_back(uni(0.0, 8.0));
      lp.push_back(uni(-0.02, 0.09));
      lq.push_back(uni(-0.01, 0.01));
    }
    s.by_bus[ec.bus] = pb;
    prices.p[ec.bus] = lp;
    prices.q[ec.bus] = lq;
  }

  // spreadsheet-style independent total
  double expect = 0.0;
  for (const auto& ec : c.communities)
    for (int t = 0; t < c.horizon; ++t) {
      const size_t ts = static_cast<size_t>(t);
      expect += c.dt_hours * (prices.p[ec.bus][ts] * s.by_bus[ec.bus].p_c[ts] +
                              prices.q[ec.bus][ts] * s.by_bus[ec.bus].q_c[ts] +
                              ec.flex.pi_flex * s.by_bus[ec.bus].p_red[ts]);
    }
  CHECK(cea_cost(s, prices, c) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("cea_cost trivial shapes") {
  NetworkCase c = make_toy6(7, 1);
  int bus = c.communities[0].bus;
  CommunitySchedule s;
  CommunitySchedule::PerBus pb;
  pb.p_c = {100.0};
  pb.q_c = {0.0};
  pb.p_red = {0.0};
  s.by_bus[bus] = pb;
  PriceSeries prices;

  SUBCASE("single period at 0.05 $/kWh costs $5") {
    prices.p[bus] = {0.05};
    prices.q[bus] = {0.0};
    CHECK(cea_cost(s, prices, c) == doctest::Approx(5.0));
  }
  SUBCASE("zero prices leave only curtailment compensation") {
    prices.p[bus] = {0.0};
    prices.q[bus] = {0.0};
    s.by_bus[bus].p_red = {12.0};
    double pi = c.communities[0].flex.pi_flex;
    CHECK(cea_cost(s, prices, c) == doctest::Approx(pi * 12.0));
  }
  SUBCASE("missing price series raises DimensionError") {
    CHECK_THROWS_AS(cea_cost(s, prices, c), DimensionError);
  }
}

TEST_CASE("feasible schedules satisfy the exact inverter circle and all DER rules") {
  NetworkCase c = make_toy6();
  int bus = c.communities[0].bus;
  std::mt19937_64 rng(41);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  };

  for (int iter = 0; iter < 12; ++iter) {
    ModelInstance m;
    CeaHandles h = build_cea_constraints(c, {bus}, m);
    const auto& vh = h.at(bus);
    // random objective explores different vertices of the feasible region
    LinExpr obj;
    for (int t = 0; t < c.horizon; ++t) {
      obj += LinExpr(vh.p_pv[static_cast<size_t>(t)]) * uni(-1.0, 1.0);
      obj += LinExpr(vh.q_pv[static_cast<size_t>(t)]) * uni(-1.0, 1.0);
      obj += LinExpr(vh.p_ch[static_cast<size_t>(t)]) * uni(-1.0, 1.0);
      obj += LinExpr(vh.p_dis[static_cast<size_t>(t)]) * uni(-1.0, 1.0);
      obj += LinExpr(vh.p_load[static_cast<size_t>(t)]) * uni(-1.0, 1.0);
    }
    m.set_objective(obj);
    SolveOutcome out = solve(m);
    REQUIRE(out.optimal());
    CommunitySchedule s = extract_schedule(c, h, out);
    const auto& pb = s.by_bus.at(bus);

    // independent residual evaluator, including the exact quadratic circle
    CHECK(max_cea_residual(c, bus, pb) <= 1e-6);

    // mode exclusivity as a product
    for (int t = 0; t < c.horizon; ++t)
      CHECK(std::abs(pb.p_ch[static_cast<size_t>(t)] * pb.p_dis[static_cast<size_t>(t)]) <= 1e-6);

    // energy conservation across the horizon
    double delta = 0.0;
    const auto& b = c.communities[0].bess;
    for (int t = 0; t < c.horizon; ++t)
      delta += (b.eta_ch * pb.p_ch[static_cast<size_t>(t)] -
                pb.p_dis[static_cast<size_t>(t)] / b.eta_dis) *
               c.dt_hours;
    CHECK(pb.e.back() - pb.e.front() == doctest::Approx(delta).epsilon(1e-9));
  }
}

TEST_CASE("12-gon keeps full rating on the p axis and loses under 3.5% off-axis") {
  NetworkCase c = make_toy6();
  int bus = c.communities[0].bus;
  auto& pv = c.communities[0].pv;
  pv.forecast.assign(static_cast<size_t>(c.horizon), 100.0);
  pv.s_max = 50.0;
  pv.zeta = 10.0;  // cone wide open for this test

  ModelInstance m;
  CeaHandles h = build_cea_constraints(c, {bus}, m);
  const auto& vh = h.at(bus);
  m.set_objective(LinExpr(vh.p_pv[0]) * -1.0);
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  // vertex on the p axis: the full rating is reachable at q = 0
  CHECK(out.value(vh.p_pv[0]) == doctest::Approx(50.0).epsilon(1e-9));

  m.set_objective(LinExpr(vh.q_pv[0]) * -1.0);
  SolveOutcome out2 = solve(m);
  REQUIRE(out2.optimal());
  CHECK(out2.value(vh.q_pv[0]) >= 50.0 * std::cos(3.14159265358979323846 / 12.0) - 1e-9);
  CHECK(out2.value(vh.q_pv[0]) <= 50.0 + 1e-9);
}
