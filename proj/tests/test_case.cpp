#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "gridshare/case.hpp"

using namespace gridshare;

namespace {

// Minimal valid instance: slack + one community bus, one line.
std::string two_bus_json() {
  return R"({
    "meta": {"horizon": 3, "dt_hours": 1.0},
    "series": {"ld": [40.0, 50.0, 60.0], "pv": [0.0, 20.0, 10.0], "pi": [30.0, 45.0, 25.0]},
    "buses": [
      {"id": 0, "kind": "slack", "generator": {"p_min_kw": -400, "p_max_kw": 400}},
      {"id": 1, "kind": "community", "load_p": "ld", "load_q": 5.0}
    ],
    "lines": [{"from": 0, "to": 1, "r": 0.01, "x": 0.02}],
    "communities": [
      {"bus": 1,
       "pv": {"forecast": "pv", "s_max_kva": 25.0, "zeta": 0.2},
       "bess": {"p_ch_max_kw": 10, "p_dis_max_kw": 10, "e_max_kwh": 40, "eta_ch": 0.95, "eta_dis": 0.95},
       "flex": {"pi_flex_mwh": 75.0}}
    ],
    "lmp_mwh": "pi"
  })";
}

}  // namespace

TEST_CASE("parse accepts a minimal two-bus case") {
  NetworkCase c = parse_case(two_bus_json());
  CHECK(c.buses.size() == 2);
  CHECK(c.lines.size() == 1);
  CHECK(c.communities.size() == 1);
  CHECK(c.horizon == 3);
  // prices converted from $/MWh to $/kWh at parse time
  CHECK(c.lmp[1] == doctest::Approx(0.045).epsilon(1e-12));
  CHECK(c.communities[0].flex.pi_flex == doctest::Approx(0.075).epsilon(1e-12));
  // flex cap defaults to 30% of the bus load
  CHECK(c.communities[0].flex.p_flex_max[2] == doctest::Approx(18.0));
  // boundary SoC defaults to half of e_max
  CHECK(c.communities[0].bess.e_init == doctest::Approx(20.0));
  CHECK(c.communities[0].bess.e_final == doctest::Approx(20.0));
  // radiality bookkeeping
  CHECK(c.lines.size() == c.buses.size() - 1);
  CHECK(c.community_index(1) == 0);
  CHECK(c.community_index(0) == -1);
}

TEST_CASE("two slack buses are rejected naming the invariant") {
  std::string j = R"({
    "meta": {"horizon": 1},
    "buses": [
      {"id": 0, "kind": "slack"},
      {"id": 1, "kind": "slack"}
    ],
    "lines": [{"from": 0, "to": 1, "r": 0.01, "x": 0.01}],
    "lmp_mwh": [40.0]
  })";
  CHECK_THROWS_WITH_AS(parse_case(j), doctest::Contains("slack uniqueness"), ValidationError);
}

TEST_CASE("a cycle among three buses is a topology error") {
  std::string j = R"({
    "meta": {"horizon": 1},
    "buses": [
      {"id": 0, "kind": "slack"},
      {"id": 1, "kind": "load"},
      {"id": 2, "kind": "load"}
    ],
    "lines": [
      {"from": 0, "to": 1, "r": 0.01, "x": 0.01},
      {"from": 1, "to": 2, "r": 0.01, "x": 0.01},
      {"from": 2, "to": 0, "r": 0.01, "x": 0.01}
    ],
    "lmp_mwh": [40.0]
  })";
  CHECK_THROWS_AS(parse_case(j), TopologyError);
}

TEST_CASE("disconnected networks are rejected") {
  std::string j = R"({
    "meta": {"horizon": 1},
    "buses": [
      {"id": 0, "kind": "slack"},
      {"id": 1, "kind": "load"},
      {"id": 2, "kind": "load"},
      {"id": 3, "kind": "load"}
    ],
    "lines": [
      {"from": 0, "to": 1, "r": 0.01, "x": 0.01},
      {"from": 2, "to": 3, "r": 0.01, "x": 0.01},
      {"from": 3, "to": 2, "r": 0.02, "x": 0.01}
    ],
    "lmp_mwh": [40.0]
  })";
  CHECK_THROWS_AS(parse_case(j), TopologyError);
}

TEST_CASE("truncated input is a schema error") {
  CHECK_THROWS_AS(parse_case("{\"meta\": {"), SchemaError);
  CHECK_THROWS_AS(parse_case("[1,2,3]"), SchemaError);
}

TEST_CASE("derive_zeta") {
  CHECK(derive_zeta(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  // 0.9 power factor allows roughly 0.484 times the active power
  CHECK(derive_zeta(0.9) == doctest::Approx(0.484).epsilon(2e-3));
  CHECK(derive_zeta(0.9) == doctest::Approx(0.48432210483785254).epsilon(1e-12));
  // independently evaluated tan(acos(0.5)) = sqrt(3)
  CHECK(derive_zeta(0.5) == doctest::Approx(1.7320508075688772).epsilon(1e-12));
  CHECK_THROWS_AS(derive_zeta(0.0), DomainError);
  CHECK_THROWS_AS(derive_zeta(1.2), DomainError);
  CHECK_THROWS_AS(derive_zeta(-0.5), DomainError);
}

TEST_CASE("invariant violations are named") {
  NetworkCase base = parse_case(two_bus_json());

  SUBCASE("eta outside (0,1]") {
    NetworkCase c = base;
    c.communities[0].bess.eta_ch = 1.5;
    CHECK_THROWS_WITH_AS(parse_case(serialize_case(c)), doctest::Contains("eta_ch"), ValidationError);
  }
  SUBCASE("e_init outside band") {
    NetworkCase c = base;
    c.communities[0].bess.e_init = 99.0;
    CHECK_THROWS_WITH_AS(parse_case(serialize_case(c)), doctest::Contains("e_init"), ValidationError);
  }
  SUBCASE("flex cap above load") {
    NetworkCase c = base;
    c.communities[0].flex.p_flex_max[0] = 1000.0;
    CHECK_THROWS_WITH_AS(parse_case(serialize_case(c)), doctest::Contains("p_flex_max"), ValidationError);
  }
  SUBCASE("negative zeta") {
    NetworkCase c = base;
    c.communities[0].pv.zeta = -0.1;
    CHECK_THROWS_WITH_AS(parse_case(serialize_case(c)), doctest::Contains("zeta"), ValidationError);
  }
  SUBCASE("voltage window") {
    NetworkCase c = base;
    c.buses[1].v_min = 1.10;
    CHECK_THROWS_WITH_AS(parse_case(serialize_case(c)), doctest::Contains("v_min"), ValidationError);
  }
  SUBCASE("bad big_m") {
    NetworkCase c = base;
    c.big_m = 0.0;
    CHECK_THROWS_WITH_AS(parse_case(serialize_case(c)), doctest::Contains("big_m"), ValidationError);
  }
  SUBCASE("series length mismatch") {
    std::string j = two_bus_json();
    auto pos = j.find("[40.0, 50.0, 60.0]");
    j.replace(pos, std::string("[40.0, 50.0, 60.0]").size(), "[40.0, 50.0]");
    CHECK_THROWS_AS(parse_case(j), ValidationError);
  }
  SUBCASE("community kind without portfolio") {
    std::string j = R"({
      "meta": {"horizon": 1},
      "buses": [{"id": 0, "kind": "slack"}, {"id": 1, "kind": "community"}],
      "lines": [{"from": 0, "to": 1, "r": 0.01, "x": 0.01}],
      "lmp_mwh": [40.0]
    })";
    CHECK_THROWS_AS(parse_case(j), ValidationError);
  }
  SUBCASE("portfolio on a non-community bus") {
    std::string j = R"({
      "meta": {"horizon": 1},
      "buses": [{"id": 0, "kind": "slack"}, {"id": 1, "kind": "load"}],
      "lines": [{"from": 0, "to": 1, "r": 0.01, "x": 0.01}],
      "communities": [{"bus": 1}],
      "lmp_mwh": [40.0]
    })";
    CHECK_THROWS_AS(parse_case(j), ValidationError);
  }
}

TEST_CASE("slack bus gets a default upstream interface") {
  std::string j = R"({
    "meta": {"horizon": 1, "s_base_kva": 500.0},
    "buses": [{"id": 0, "kind": "slack"}, {"id": 1, "kind": "load", "load_p": 10.0}],
    "lines": [{"from": 0, "to": 1, "r": 0.01, "x": 0.01}],
    "lmp_mwh": [40.0]
  })";
  NetworkCase c = parse_case(j);
  REQUIRE(c.buses[0].generator.has_value());
  CHECK(c.buses[0].generator->p_max == doctest::Approx(500.0));
  CHECK(c.buses[0].generator->p_min == doctest::Approx(-500.0));
  CHECK(c.buses[0].generator->q_max ==
        doctest::Approx(std::tan(std::acos(0.9)) * 500.0).epsilon(1e-12));
}

TEST_CASE("round-trip: parse(serialize(case)) is canonical-identical") {
  // randomized small cases exercise the full schema
  std::mt19937_64 rng(20240817u);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
  };
  for (int iter = 0; iter < 25; ++iter) {
    NetworkCase c;
    c.horizon = 1 + static_cast<int>(rng() % 6);
    c.dt_hours = uni(0.25, 2.0);
    c.slack_voltage = 1.0;
    c.big_m = uni(1e3, 1e5);
    c.s_base_kva = uni(400.0, 2000.0);
    int n = 2 + static_cast<int>(rng() % 5);
    for (int b = 0; b < n; ++b) {
      Bus bus;
      bus.id = b;
      bus.kind = b == 0 ? BusKind::Slack : (b % 2 == 1 ? BusKind::Community : BusKind::Load);
      bus.v_min = 0.94;
      bus.v_max = 1.06;
      for (int t = 0; t < c.horizon; ++t) {
        bus.load_p.push_back(uni(0.0, 80.0));
        bus.load_q.push_back(uni(-5.0, 15.0));
      }
      if (b == 0) {
        GeneratorParams g;
        g.p_min = -uni(100.0, 500.0);
        g.p_max = uni(100.0, 500.0);
        g.q_min = -uni(10.0, 100.0);
        g.q_max = uni(10.0, 100.0);
        g.marginal_cost = 0.0;
        bus.generator = g;
      }
      c.buses.push_back(std::move(bus));
    }
    for (int b = 1; b < n; ++b) {
      Line l;
      l.from_bus = static_cast<int>(rng() % static_cast<unsigned>(b));
      l.to_bus = b;
      l.r = uni(0.001, 0.05);
      l.x = uni(0.001, 0.05);
      c.lines.push_back(l);
    }
    for (int b = 1; b < n; b += 2) {
      CommunityPortfolio p;
      p.bus = b;
      p.pv.s_max = uni(0.0, 30.0);
      p.pv.zeta = 0.2;
      p.bess.p_ch_max = uni(0.0, 20.0);
      p.bess.p_dis_max = uni(0.0, 20.0);
      p.bess.e_max = uni(10.0, 60.0);
      p.bess.e_min = 0.0;
      p.bess.eta_ch = 0.95;
      p.bess.eta_dis = 0.95;
      p.bess.e_init = 0.5 * p.bess.e_max;
      p.bess.e_final = 0.5 * p.bess.e_max;
      p.flex.pi_flex = 0.075;
      for (int t = 0; t < c.horizon; ++t) {
        p.pv.forecast.push_back(uni(0.0, 25.0));
        p.flex.p_flex_max.push_back(0.3 * c.buses[static_cast<size_t>(b)].load_p[static_cast<size_t>(t)]);
      }
      c.communities.push_back(std::move(p));
    }
    for (int t = 0; t < c.horizon; ++t) c.lmp.push_back(uni(0.01, 0.06));

    std::string s1 = serialize_case(c);
    NetworkCase c2 = parse_case(s1);
    std::string s2 = serialize_case(c2);
    REQUIRE(s1 == s2);
    REQUIRE(case_content_hash(c) == case_content_hash(c2));
  }
}

TEST_CASE("path impedance follows the unique tree path") {
  // chain 0-1-2, |z01| = 5 on 3-4, |z12| = hypot(0.06, 0.08) = 0.1
  std::string j = R"({
    "meta": {"horizon": 1},
    "buses": [
      {"id": 0, "kind": "slack"},
      {"id": 1, "kind": "load"},
      {"id": 2, "kind": "load"}
    ],
    "lines": [
      {"from": 0, "to": 1, "r": 0.03, "x": 0.04},
      {"from": 1, "to": 2, "r": 0.06, "x": 0.08}
    ],
    "lmp_mwh": [40.0]
  })";
  NetworkCase c = parse_case(j);
  CHECK(c.path_impedance(0, 1) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(c.path_impedance(0, 2) == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(c.path_impedance(2, 0) == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(c.path_impedance(1, 1) == doctest::Approx(0.0));
  CHECK(c.max_path_impedance() == doctest::Approx(0.15).epsilon(1e-12));
}
