#include "gridshare/casegen.hpp"

#include <cmath>
#include <random>

namespace gridshare {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic uniform in [-1, 1] independent of distribution implementations.
class NoiseSource {
 public:
  explicit NoiseSource(unsigned seed) : rng_(seed) {}
  double uni() { return 2.0 * (static_cast<double>(rng_() >> 11) / 9007199254740992.0) - 1.0; }

 private:
  std::mt19937_64 rng_;
};

double hour_of(int t, double dt) { return std::fmod(t * dt, 24.0); }

TimeSeries diurnal_load(int T, double dt, double base, NoiseSource& ns) {
  TimeSeries s(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t) {
    double h = hour_of(t, dt);
    double shape = 0.75 + 0.25 * std::sin(2.0 * kPi * (h - 9.0) / 24.0);
    s[static_cast<size_t>(t)] = base * shape * (1.0 + 0.05 * ns.uni());
  }
  return s;
}

TimeSeries pv_bell(int T, double dt, double cap, NoiseSource& ns) {
  TimeSeries s(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t) {
    double h = hour_of(t, dt);
    double v = 0.0;
    if (h > 6.0 && h < 18.0) {
      v = cap * std::pow(std::sin(kPi * (h - 6.0) / 12.0), 1.2);
      v *= 1.0 + 0.05 * ns.uni();
    }
    s[static_cast<size_t>(t)] = std::max(0.0, v);
  }
  return s;
}

// $/kWh; shaped after a 12..55 $/MWh wholesale band peaking in the evening.
TimeSeries price_band(int T, double dt, NoiseSource& ns) {
  TimeSeries s(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t) {
    double h = hour_of(t, dt);
    double mwh = 33.5 + 21.5 * std::sin(2.0 * kPi * (h - 15.0) / 24.0) + 2.0 * ns.uni();
    s[static_cast<size_t>(t)] = std::max(5.0, mwh) / 1000.0;
  }
  return s;
}

Bus make_bus(int id, BusKind kind, int T, double dt, double base_load, NoiseSource& ns) {
  Bus b;
  b.id = id;
  b.kind = kind;
  b.v_min = 0.95;
  b.v_max = 1.05;
  b.load_p = diurnal_load(T, dt, base_load, ns);
  b.load_q.resize(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t) b.load_q[static_cast<size_t>(t)] = 0.2 * b.load_p[static_cast<size_t>(t)];
  return b;
}

GeneratorParams local_gen(double p_max) {
  GeneratorParams g;
  g.marginal_cost = 0.25;  // $250/MWh peaker
  g.p_min = 0.0;
  g.p_max = p_max;
  double qcap = std::tan(std::acos(0.9)) * p_max;
  g.q_min = -qcap;
  g.q_max = qcap;
  return g;
}

GeneratorParams slack_import(double cap_kva) {
  GeneratorParams g;
  g.marginal_cost = 0.0;  // priced by the wholesale series, not this field
  g.p_min = -cap_kva;
  g.p_max = cap_kva;
  double qcap = std::tan(std::acos(0.9)) * cap_kva;
  g.q_min = -qcap;
  g.q_max = qcap;
  return g;
}

CommunityPortfolio make_portfolio(int bus, const Bus& host, double pv_cap, double bess_kw,
                                  double bess_kwh, int T, double dt, NoiseSource& ns) {
  CommunityPortfolio p;
  p.bus = bus;
  p.pv.forecast = pv_bell(T, dt, pv_cap, ns);
  p.pv.s_max = pv_cap * 1.1;
  p.pv.zeta = 0.2;
  p.bess.p_ch_max = bess_kw;
  p.bess.p_dis_max = bess_kw;
  p.bess.e_min = 0.0;
  p.bess.e_max = bess_kwh;
  p.bess.eta_ch = 0.95;
  p.bess.eta_dis = 0.95;
  p.bess.e_init = 0.5 * bess_kwh;
  p.bess.e_final = 0.5 * bess_kwh;
  p.flex.pi_flex = 0.075;  // $75/MWh curtailment compensation
  p.flex.p_flex_max.resize(static_cast<size_t>(T));
  for (int t = 0; t < T; ++t)
    p.flex.p_flex_max[static_cast<size_t>(t)] = 0.3 * host.load_p[static_cast<size_t>(t)];
  return p;
}

void finish(NetworkCase& c, NoiseSource& ns) {
  c.lmp = price_band(c.horizon, c.dt_hours, ns);
}

}  // namespace

NetworkCase make_toy6(unsigned seed, int horizon) {
  NoiseSource ns(seed);
  NetworkCase c;
  c.horizon = horizon;
  c.dt_hours = 1.0;
  c.slack_voltage = 1.0;
  c.big_m = 1e4;
  c.s_base_kva = 1000.0;

  // 0-1-2 trunk, 2-3, 2-4, 4-5
  c.buses.push_back(make_bus(0, BusKind::Slack, horizon, c.dt_hours, 0.0, ns));
  c.buses.push_back(make_bus(1, BusKind::Load, horizon, c.dt_hours, 35.0, ns));
  c.buses.push_back(make_bus(2, BusKind::Load, horizon, c.dt_hours, 45.0, ns));
  c.buses.push_back(make_bus(3, BusKind::Community, horizon, c.dt_hours, 55.0, ns));
  c.buses.push_back(make_bus(4, BusKind::Community, horizon, c.dt_hours, 40.0, ns));
  c.buses.push_back(make_bus(5, BusKind::Community, horizon, c.dt_hours, 30.0, ns));
  c.buses[0].generator = slack_import(400.0);
  c.buses[2].generator = local_gen(80.0);

  c.lines.push_back({0, 1, 0.006, 0.009});
  c.lines.push_back({1, 2, 0.008, 0.012});
  c.lines.push_back({2, 3, 0.010, 0.014});
  c.lines.push_back({2, 4, 0.007, 0.010});
  c.lines.push_back({4, 5, 0.012, 0.016});

  c.communities.push_back(
      make_portfolio(3, c.buses[3], 30.0, 20.0, 50.0, horizon, c.dt_hours, ns));
  c.communities.push_back(
      make_portfolio(4, c.buses[4], 20.0, 15.0, 35.0, horizon, c.dt_hours, ns));
  // null player: a community with no usable DERs
  CommunityPortfolio null_ec = make_portfolio(5, c.buses[5], 0.0, 0.0, 0.0, horizon, c.dt_hours, ns);
  null_ec.flex.p_flex_max.assign(static_cast<size_t>(horizon), 0.0);
  c.communities.push_back(std::move(null_ec));

  finish(c, ns);
  return c;
}

NetworkCase make_twin6(unsigned seed, int horizon) {
  NoiseSource ns(seed);
  NetworkCase c;
  c.horizon = horizon;
  c.dt_hours = 1.0;
  c.slack_voltage = 1.0;
  c.big_m = 1e4;
  c.s_base_kva = 1000.0;

  // 0-1 trunk; mirrored branches 1-2-3 and 1-4-5 host identical ECs at 3 and 5.
  c.buses.push_back(make_bus(0, BusKind::Slack, horizon, c.dt_hours, 0.0, ns));
  c.buses.push_back(make_bus(1, BusKind::Load, horizon, c.dt_hours, 30.0, ns));
  Bus mid = make_bus(2, BusKind::Load, horizon, c.dt_hours, 25.0, ns);
  Bus leaf = make_bus(3, BusKind::Community, horizon, c.dt_hours, 50.0, ns);
  Bus mid2 = mid;
  mid2.id = 4;
  Bus leaf2 = leaf;
  leaf2.id = 5;
  c.buses.push_back(mid);
  c.buses.push_back(leaf);
  c.buses.push_back(mid2);
  c.buses.push_back(leaf2);
  c.buses[0].generator = slack_import(400.0);

  c.lines.push_back({0, 1, 0.006, 0.009});
  c.lines.push_back({1, 2, 0.010, 0.014});
  c.lines.push_back({2, 3, 0.012, 0.016});
  c.lines.push_back({1, 4, 0.010, 0.014});
  c.lines.push_back({4, 5, 0.012, 0.016});

  CommunityPortfolio ec = make_portfolio(3, c.buses[3], 25.0, 20.0, 50.0, horizon, c.dt_hours, ns);
  CommunityPortfolio ec2 = ec;
  ec2.bus = 5;
  c.communities.push_back(std::move(ec));
  c.communities.push_back(std::move(ec2));

  finish(c, ns);
  return c;
}

NetworkCase make_cigre19(unsigned seed, int horizon) {
  NoiseSource ns(seed);
  NetworkCase c;
  c.horizon = horizon;
  c.dt_hours = 1.0;
  c.slack_voltage = 1.0;
  c.big_m = 1e4;
  c.s_base_kva = 1000.0;

  // Trunk 0..10; laterals 3-11-12, 5-13-14, 8-15-16, 10-17-18.
  // Communities sit at 9 (trunk), 11 (near lateral), 18 (remote lateral end).
  struct Spec {
    BusKind kind;
    double base_load;
  };
  std::vector<Spec> spec = {
      {BusKind::Slack, 0.0},      // 0
      {BusKind::Load, 20.0},      // 1
      {BusKind::Load, 25.0},      // 2
      {BusKind::Load, 20.0},      // 3
      {BusKind::Load, 30.0},      // 4
      {BusKind::Load, 25.0},      // 5
      {BusKind::Load, 20.0},      // 6
      {BusKind::Load, 30.0},      // 7
      {BusKind::Load, 25.0},      // 8
      {BusKind::Community, 55.0}, // 9
      {BusKind::Load, 20.0},      // 10
      {BusKind::Community, 50.0}, // 11
      {BusKind::Load, 25.0},      // 12
      {BusKind::Load, 20.0},      // 13
      {BusKind::Load, 25.0},      // 14
      {BusKind::Load, 20.0},      // 15
      {BusKind::Load, 25.0},      // 16
      {BusKind::Load, 20.0},      // 17
      {BusKind::Community, 60.0}, // 18
  };
  for (int i = 0; i < static_cast<int>(spec.size()); ++i)
    c.buses.push_back(make_bus(i, spec[static_cast<size_t>(i)].kind, horizon, c.dt_hours,
                               spec[static_cast<size_t>(i)].base_load, ns));
  c.buses[0].generator = slack_import(800.0);
  c.buses[4].generator = local_gen(120.0);
  c.buses[16].generator = local_gen(80.0);
  c.buses[18].generator = local_gen(60.0);

  auto trunk = [&](int a, int b) { c.lines.push_back({a, b, 0.0045, 0.0060}); };
  auto lateral = [&](int a, int b, double scale) {
    c.lines.push_back({a, b, 0.0065 * scale, 0.0085 * scale});
  };
  for (int i = 0; i < 10; ++i) trunk(i, i + 1);
  lateral(3, 11, 1.0);
  lateral(11, 12, 1.0);
  lateral(5, 13, 1.0);
  lateral(13, 14, 1.0);
  lateral(8, 15, 1.0);
  lateral(15, 16, 1.0);
  lateral(10, 17, 1.6);
  lateral(17, 18, 1.6);  // remote, electrically weak corner

  c.communities.push_back(make_portfolio(9, c.buses[9], 30.0, 20.0, 50.0, horizon, c.dt_hours, ns));
  c.communities.push_back(make_portfolio(11, c.buses[11], 30.0, 20.0, 50.0, horizon, c.dt_hours, ns));
  c.communities.push_back(make_portfolio(18, c.buses[18], 30.0, 20.0, 50.0, horizon, c.dt_hours, ns));

  finish(c, ns);
  return c;
}

NetworkCase make_case69_pairs(unsigned seed, int horizon) {
  NoiseSource ns(seed);
  NetworkCase c;
  c.horizon = horizon;
  c.dt_hours = 1.0;
  c.slack_voltage = 1.0;
  c.big_m = 1e4;
  c.s_base_kva = 2000.0;

  // Trunk 0..40. EC pairs hang as mirrored leaves: {45,46} under bus 15,
  // {47,48} under bus 20, and the weakly coupled {51,52} under bus 50 at the
  // end of a long lateral. Remaining buses are plain load laterals.
  const int kTrunkEnd = 40;
  for (int i = 0; i <= kTrunkEnd; ++i)
    c.buses.push_back(make_bus(i, BusKind::Slack, horizon, c.dt_hours, 0.0, ns));
  for (auto& b : c.buses)
    if (b.id != 0) {
      b.kind = BusKind::Load;
      b.load_p = diurnal_load(horizon, c.dt_hours, 12.0, ns);
      b.load_q.resize(static_cast<size_t>(horizon));
      for (int t = 0; t < horizon; ++t)
        b.load_q[static_cast<size_t>(t)] = 0.2 * b.load_p[static_cast<size_t>(t)];
    }
  for (int i = 0; i < kTrunkEnd; ++i) c.lines.push_back({i, i + 1, 0.0016, 0.0022});

  auto add_chain = [&](int parent, int count, double base_load, double r, double x) {
    int first = static_cast<int>(c.buses.size());
    int prev = parent;
    for (int i = 0; i < count; ++i) {
      int id = static_cast<int>(c.buses.size());
      c.buses.push_back(make_bus(id, BusKind::Load, horizon, c.dt_hours, base_load, ns));
      c.lines.push_back({prev, id, r, x});
      prev = id;
    }
    return first;
  };

  add_chain(10, 4, 10.0, 0.0030, 0.0040);  // 41..44

  // Mirrored leaves share the parent, the line data, the load profile, and
  // the portfolio; members of a pair are exactly interchangeable.
  auto add_twin_leaves = [&](int parent, double base_load, double r, double x) {
    int a = static_cast<int>(c.buses.size());
    Bus ba = make_bus(a, BusKind::Community, horizon, c.dt_hours, base_load, ns);
    Bus bb = ba;
    bb.id = a + 1;
    c.buses.push_back(ba);
    c.buses.push_back(bb);
    c.lines.push_back({parent, a, r, x});
    c.lines.push_back({parent, a + 1, r, x});
    return std::pair<int, int>{a, a + 1};
  };

  auto [ec1a, ec1b] = add_twin_leaves(15, 35.0, 0.0040, 0.0055);  // 45, 46
  auto [ec2a, ec2b] = add_twin_leaves(20, 35.0, 0.0040, 0.0055);  // 47, 48
  add_chain(35, 2, 8.0, 0.0080, 0.0105);                          // 49, 50
  auto [ec3a, ec3b] = add_twin_leaves(50, 20.0, 0.0060, 0.0080);  // 51, 52

  add_chain(5, 4, 10.0, 0.0030, 0.0040);    // 53..56
  add_chain(25, 4, 10.0, 0.0030, 0.0040);   // 57..60
  add_chain(30, 4, 10.0, 0.0030, 0.0040);   // 61..64
  add_chain(38, 4, 8.0, 0.0030, 0.0040);    // 65..68

  c.buses[0].generator = slack_import(1600.0);
  c.buses[18].generator = local_gen(150.0);
  c.buses[33].generator = local_gen(100.0);

  CommunityPortfolio p1 = make_portfolio(ec1a, c.buses[static_cast<size_t>(ec1a)], 25.0, 20.0, 50.0,
                                         horizon, c.dt_hours, ns);
  CommunityPortfolio p1b = p1;
  p1b.bus = ec1b;
  CommunityPortfolio p2 = make_portfolio(ec2a, c.buses[static_cast<size_t>(ec2a)], 25.0, 20.0, 50.0,
                                         horizon, c.dt_hours, ns);
  CommunityPortfolio p2b = p2;
  p2b.bus = ec2b;
  // near-null pair: one percent of the normal DER capacity
  CommunityPortfolio p3 = make_portfolio(ec3a, c.buses[static_cast<size_t>(ec3a)], 0.25, 0.2, 0.5,
                                         horizon, c.dt_hours, ns);
  p3.flex.p_flex_max.assign(static_cast<size_t>(horizon), 0.0);
  CommunityPortfolio p3b = p3;
  p3b.bus = ec3b;
  c.communities.push_back(std::move(p1));
  c.communities.push_back(std::move(p1b));
  c.communities.push_back(std::move(p2));
  c.communities.push_back(std::move(p2b));
  c.communities.push_back(std::move(p3));
  c.communities.push_back(std::move(p3b));

  finish(c, ns);

  if (c.buses.size() != 69) throw Error("case69 generator produced " + std::to_string(c.buses.size()) + " buses");
  return c;
}

std::vector<NamedCase> bundled_cases() {
  return {{"toy6", make_toy6()},
          {"twin6", make_twin6()},
          {"cigre19", make_cigre19()},
          {"case69_pairs", make_case69_pairs()}};
}

NetworkCase make_case(const std::string& topology, unsigned seed, int horizon) {
  if (topology == "toy6") return make_toy6(seed, horizon > 0 ? horizon : 6);
  if (topology == "twin6") return make_twin6(seed, horizon > 0 ? horizon : 6);
  if (topology == "cigre19") return make_cigre19(seed, horizon > 0 ? horizon : 24);
  if (topology == "case69_pairs") return make_case69_pairs(seed, horizon > 0 ? horizon : 8);
  throw DomainError("unknown topology '" + topology + "'");
}

}  // namespace gridshare
