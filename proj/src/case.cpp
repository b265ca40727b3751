#include "gridshare/case.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include <json.hpp>

namespace gridshare {

using nlohmann::json;

namespace {

constexpr double kMwhToKwh = 1.0 / 1000.0;

// q-bound rule for generators that do not state one: 0.9 minimum power factor.
double default_q_ratio() { return std::tan(std::acos(0.9)); }

const json& require(const json& obj, const char* key, const char* ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string(ctx) + ": missing field '" + key + "'");
  return *it;
}

double num(const json& v, const char* ctx) {
  if (!v.is_number()) throw SchemaError(std::string(ctx) + ": expected a number");
  return v.get<double>();
}

double num_or(const json& obj, const char* key, double fallback, const char* ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  return num(*it, ctx);
}

// A series-valued field is a named reference into "series", an inline array,
// or a single number meaning a constant series.
TimeSeries series_field(const json& v, const std::map<std::string, TimeSeries>& named, int horizon,
                        const std::string& ctx) {
  TimeSeries out;
  if (v.is_string()) {
    auto it = named.find(v.get<std::string>());
    if (it == named.end())
      throw SchemaError(ctx + ": unknown series id '" + v.get<std::string>() + "'");
    out = it->second;
  } else if (v.is_array()) {
    for (const auto& e : v) out.push_back(num(e, ctx.c_str()));
  } else if (v.is_number()) {
    out.assign(static_cast<size_t>(horizon), v.get<double>());
  } else {
    throw SchemaError(ctx + ": expected series id, array, or number");
  }
  if (static_cast<int>(out.size()) != horizon)
    throw ValidationError(ctx + ": series length " + std::to_string(out.size()) +
                          " does not equal horizon " + std::to_string(horizon));
  return out;
}

TimeSeries series_field_or(const json& obj, const char* key, const std::map<std::string, TimeSeries>& named,
                           int horizon, double fallback, const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) return TimeSeries(static_cast<size_t>(horizon), fallback);
  return series_field(*it, named, horizon, ctx + "." + key);
}

json series_to_json(const TimeSeries& s) {
  json a = json::array();
  for (double v : s) a.push_back(v);
  return a;
}

void check_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw ValidationError(what + " must be finite");
}

}  // namespace

double derive_zeta(double pf_min) {
  if (!(pf_min > 0.0) || pf_min > 1.0)
    throw DomainError("pf_min must lie in (0, 1], got " + std::to_string(pf_min));
  return std::tan(std::acos(pf_min));
}

int NetworkCase::community_index(int bus_id) const {
  for (size_t i = 0; i < communities.size(); ++i)
    if (communities[i].bus == bus_id) return static_cast<int>(i);
  return -1;
}

double NetworkCase::path_impedance(int bus_a, int bus_b) const {
  const size_t n = buses.size();
  if (bus_a < 0 || bus_b < 0 || bus_a >= static_cast<int>(n) || bus_b >= static_cast<int>(n))
    throw DomainError("path_impedance: bus id out of range");
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (const auto& l : lines) {
    double z = std::hypot(l.r, l.x);
    adj[static_cast<size_t>(l.from_bus)].push_back({l.to_bus, z});
    adj[static_cast<size_t>(l.to_bus)].push_back({l.from_bus, z});
  }
  std::vector<double> dist(n, -1.0);
  std::deque<int> q{bus_a};
  dist[static_cast<size_t>(bus_a)] = 0.0;
  while (!q.empty()) {
    int b = q.front();
    q.pop_front();
    for (auto [nb, z] : adj[static_cast<size_t>(b)]) {
      if (dist[static_cast<size_t>(nb)] < 0.0) {
        dist[static_cast<size_t>(nb)] = dist[static_cast<size_t>(b)] + z;
        q.push_back(nb);
      }
    }
  }
  return dist[static_cast<size_t>(bus_b)];
}

double NetworkCase::max_path_impedance() const {
  // Weighted tree diameter by double sweep.
  auto farthest = [&](int from) {
    int best = from;
    double best_d = 0.0;
    for (const auto& b : buses) {
      double d = path_impedance(from, b.id);
      if (d > best_d) {
        best_d = d;
        best = b.id;
      }
    }
    return std::pair<int, double>{best, best_d};
  };
  auto [u, d0] = farthest(slack_bus());
  auto [v, d1] = farthest(u);
  (void)v;
  return std::max(d0, d1);
}

NetworkCase parse_case(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("top level must be an object");

  NetworkCase c;
  const json& meta = require(root, "meta", "case");
  c.horizon = static_cast<int>(num(require(meta, "horizon", "meta"), "meta.horizon"));
  c.dt_hours = num_or(meta, "dt_hours", 1.0, "meta.dt_hours");
  c.slack_voltage = num_or(meta, "slack_voltage", 1.0, "meta.slack_voltage");
  c.big_m = num_or(meta, "big_m", 1e4, "meta.big_m");
  c.s_base_kva = num_or(meta, "s_base_kva", 1000.0, "meta.s_base_kva");
  if (c.horizon < 1) throw ValidationError("meta.horizon must be >= 1");
  if (!(c.dt_hours > 0.0)) throw ValidationError("meta.dt_hours must be > 0");
  if (!(c.big_m > 0.0)) throw ValidationError("meta.big_m must be > 0");
  if (!(c.s_base_kva > 0.0)) throw ValidationError("meta.s_base_kva must be > 0");
  if (!(c.slack_voltage > 0.0)) throw ValidationError("meta.slack_voltage must be > 0");

  std::map<std::string, TimeSeries> named;
  if (root.contains("series")) {
    const json& ser = root["series"];
    if (!ser.is_object()) throw SchemaError("series: expected an object of named arrays");
    for (auto it = ser.begin(); it != ser.end(); ++it) {
      TimeSeries s;
      if (!it.value().is_array()) throw SchemaError("series." + it.key() + ": expected an array");
      for (const auto& e : it.value()) s.push_back(num(e, "series"));
      named[it.key()] = std::move(s);
    }
  }

  // Buses.
  const json& jbuses = require(root, "buses", "case");
  if (!jbuses.is_array() || jbuses.empty()) throw SchemaError("buses: expected a non-empty array");
  int slack_count = 0;
  for (size_t i = 0; i < jbuses.size(); ++i) {
    const json& jb = jbuses[i];
    Bus b;
    b.id = static_cast<int>(num(require(jb, "id", "bus"), "bus.id"));
    if (b.id != static_cast<int>(i))
      throw SchemaError("buses: ids must be 0..n-1 in order (bus at position " + std::to_string(i) +
                        " has id " + std::to_string(b.id) + ")");
    std::string kind = require(jb, "kind", "bus").get<std::string>();
    if (kind == "slack") {
      b.kind = BusKind::Slack;
      ++slack_count;
    } else if (kind == "load") {
      b.kind = BusKind::Load;
    } else if (kind == "community") {
      b.kind = BusKind::Community;
    } else {
      throw SchemaError("bus " + std::to_string(b.id) + ": unknown kind '" + kind + "'");
    }
    b.v_min = num_or(jb, "v_min", 0.95, "bus.v_min");
    b.v_max = num_or(jb, "v_max", 1.05, "bus.v_max");
    std::string ctx = "bus " + std::to_string(b.id);
    if (!(b.v_min > 0.0) || !(b.v_min < b.v_max))
      throw ValidationError(ctx + ": voltage limits must satisfy 0 < v_min < v_max");
    b.load_p = series_field_or(jb, "load_p", named, c.horizon, 0.0, ctx);
    b.load_q = series_field_or(jb, "load_q", named, c.horizon, 0.0, ctx);
    if (jb.contains("generator")) {
      const json& jg = jb["generator"];
      GeneratorParams g;
      double cost_kwh;
      if (jg.contains("marginal_cost_kwh"))
        cost_kwh = num(jg["marginal_cost_kwh"], "generator.marginal_cost_kwh");
      else
        cost_kwh = num_or(jg, "marginal_cost_mwh", 0.0, "generator.marginal_cost_mwh") * kMwhToKwh;
      g.marginal_cost = cost_kwh;
      g.p_min = num(require(jg, "p_min_kw", (ctx + ".generator").c_str()), "generator.p_min_kw");
      g.p_max = num(require(jg, "p_max_kw", (ctx + ".generator").c_str()), "generator.p_max_kw");
      double q_ratio_cap = default_q_ratio() * std::max(std::abs(g.p_min), std::abs(g.p_max));
      g.q_min = num_or(jg, "q_min_kvar", -q_ratio_cap, "generator.q_min_kvar");
      g.q_max = num_or(jg, "q_max_kvar", q_ratio_cap, "generator.q_max_kvar");
      for (double v : {g.marginal_cost, g.p_min, g.p_max, g.q_min, g.q_max})
        check_finite(v, ctx + ".generator bounds/cost");
      if (g.p_min > g.p_max) throw ValidationError(ctx + ": generator p_min must be <= p_max");
      if (g.q_min > g.q_max) throw ValidationError(ctx + ": generator q_min must be <= q_max");
      b.generator = g;
    }
    c.buses.push_back(std::move(b));
  }
  if (slack_count != 1)
    throw ValidationError("slack uniqueness: exactly one bus must have kind = slack, found " +
                          std::to_string(slack_count));
  if (c.buses[0].kind != BusKind::Slack)
    throw ValidationError("slack placement: the slack bus must be bus 0");
  if (c.slack_voltage < c.buses[0].v_min || c.slack_voltage > c.buses[0].v_max)
    throw ValidationError("meta.slack_voltage must lie within the slack bus voltage limits");
  // The slack bus always has an upstream interface; default to one base unit of import.
  if (!c.buses[0].generator) {
    GeneratorParams g;
    g.marginal_cost = 0.0;
    g.p_min = -c.s_base_kva;
    g.p_max = c.s_base_kva;
    double qcap = default_q_ratio() * c.s_base_kva;
    g.q_min = -qcap;
    g.q_max = qcap;
    c.buses[0].generator = g;
  }

  // Lines.
  const json& jlines = require(root, "lines", "case");
  if (!jlines.is_array()) throw SchemaError("lines: expected an array");
  const int n = static_cast<int>(c.buses.size());
  for (const auto& jl : jlines) {
    Line l;
    l.from_bus = static_cast<int>(num(require(jl, "from", "line"), "line.from"));
    l.to_bus = static_cast<int>(num(require(jl, "to", "line"), "line.to"));
    l.r = num(require(jl, "r", "line"), "line.r");
    l.x = num(require(jl, "x", "line"), "line.x");
    if (l.from_bus < 0 || l.from_bus >= n || l.to_bus < 0 || l.to_bus >= n)
      throw SchemaError("line: endpoint out of range");
    if (l.from_bus == l.to_bus) throw TopologyError("line: self-loop at bus " + std::to_string(l.from_bus));
    if (l.r < 0.0 || l.x < 0.0 || (l.r == 0.0 && l.x == 0.0))
      throw ValidationError("line " + std::to_string(l.from_bus) + "-" + std::to_string(l.to_bus) +
                            ": need r >= 0, x >= 0, (r, x) != (0, 0)");
    c.lines.push_back(l);
  }
  if (static_cast<int>(c.lines.size()) != n - 1)
    throw TopologyError("network is not radial: need |lines| = |buses| - 1, got " +
                        std::to_string(c.lines.size()) + " lines for " + std::to_string(n) + " buses");
  {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& l : c.lines) {
      adj[static_cast<size_t>(l.from_bus)].push_back(l.to_bus);
      adj[static_cast<size_t>(l.to_bus)].push_back(l.from_bus);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int b = q.front();
      q.pop_front();
      for (int nb : adj[static_cast<size_t>(b)])
        if (!seen[static_cast<size_t>(nb)]) {
          seen[static_cast<size_t>(nb)] = 1;
          ++reached;
          q.push_back(nb);
        }
    }
    if (reached != n)
      throw TopologyError("network is disconnected: only " + std::to_string(reached) + " of " +
                          std::to_string(n) + " buses reachable from the slack bus");
  }

  // Communities.
  if (root.contains("communities")) {
    const json& jcs = root["communities"];
    if (!jcs.is_array()) throw SchemaError("communities: expected an array");
    std::set<int> seen_buses;
    for (const auto& jc : jcs) {
      CommunityPortfolio p;
      p.bus = static_cast<int>(num(require(jc, "bus", "community"), "community.bus"));
      std::string ctx = "community at bus " + std::to_string(p.bus);
      if (p.bus < 0 || p.bus >= n) throw SchemaError(ctx + ": bus does not exist");
      if (c.buses[static_cast<size_t>(p.bus)].kind != BusKind::Community)
        throw ValidationError(ctx + ": bus kind must be 'community'");
      if (!seen_buses.insert(p.bus).second)
        throw ValidationError(ctx + ": at most one portfolio per bus");
      const Bus& host = c.buses[static_cast<size_t>(p.bus)];

      if (jc.contains("pv")) {
        const json& jpv = jc["pv"];
        p.pv.forecast = series_field_or(jpv, "forecast", named, c.horizon, 0.0, ctx + ".pv");
        p.pv.s_max = num_or(jpv, "s_max_kva", 0.0, "pv.s_max_kva");
        if (jpv.contains("zeta"))
          p.pv.zeta = num(jpv["zeta"], "pv.zeta");
        else if (jpv.contains("pf_min"))
          p.pv.zeta = derive_zeta(num(jpv["pf_min"], "pv.pf_min"));
        else
          p.pv.zeta = 0.0;
        if (p.pv.zeta < 0.0) throw ValidationError(ctx + ": pv zeta must be >= 0");
        if (p.pv.s_max < 0.0) throw ValidationError(ctx + ": pv s_max must be >= 0");
        for (double v : p.pv.forecast)
          if (v < 0.0) throw ValidationError(ctx + ": pv forecast must be >= 0");
      } else {
        p.pv.forecast.assign(static_cast<size_t>(c.horizon), 0.0);
      }

      if (jc.contains("bess")) {
        const json& jb = jc["bess"];
        p.bess.p_ch_max = num_or(jb, "p_ch_max_kw", 0.0, "bess.p_ch_max_kw");
        p.bess.p_dis_max = num_or(jb, "p_dis_max_kw", 0.0, "bess.p_dis_max_kw");
        p.bess.e_min = num_or(jb, "e_min_kwh", 0.0, "bess.e_min_kwh");
        p.bess.e_max = num_or(jb, "e_max_kwh", 0.0, "bess.e_max_kwh");
        p.bess.eta_ch = num_or(jb, "eta_ch", 1.0, "bess.eta_ch");
        p.bess.eta_dis = num_or(jb, "eta_dis", 1.0, "bess.eta_dis");
        p.bess.e_init = num_or(jb, "e_init_kwh", 0.5 * p.bess.e_max, "bess.e_init_kwh");
        p.bess.e_final = num_or(jb, "e_final_kwh", 0.5 * p.bess.e_max, "bess.e_final_kwh");
        if (!(p.bess.eta_ch > 0.0) || p.bess.eta_ch > 1.0)
          throw ValidationError(ctx + ": bess eta_ch must lie in (0, 1]");
        if (!(p.bess.eta_dis > 0.0) || p.bess.eta_dis > 1.0)
          throw ValidationError(ctx + ": bess eta_dis must lie in (0, 1]");
        if (p.bess.p_ch_max < 0.0 || p.bess.p_dis_max < 0.0)
          throw ValidationError(ctx + ": bess power limits must be >= 0");
        if (p.bess.e_min > p.bess.e_max) throw ValidationError(ctx + ": bess e_min must be <= e_max");
        if (p.bess.e_init < p.bess.e_min || p.bess.e_init > p.bess.e_max)
          throw ValidationError(ctx + ": bess e_init must lie in [e_min, e_max]");
        if (p.bess.e_final < p.bess.e_min || p.bess.e_final > p.bess.e_max)
          throw ValidationError(ctx + ": bess e_final must lie in [e_min, e_max]");
      }

      if (jc.contains("flex")) {
        const json& jf = jc["flex"];
        if (jf.contains("p_flex_max")) {
          p.flex.p_flex_max = series_field(jf["p_flex_max"], named, c.horizon, ctx + ".flex.p_flex_max");
        } else {
          p.flex.p_flex_max.resize(static_cast<size_t>(c.horizon));
          for (int t = 0; t < c.horizon; ++t)
            p.flex.p_flex_max[static_cast<size_t>(t)] = 0.3 * host.load_p[static_cast<size_t>(t)];
        }
        if (jf.contains("pi_flex_kwh"))
          p.flex.pi_flex = num(jf["pi_flex_kwh"], "flex.pi_flex_kwh");
        else
          p.flex.pi_flex = num_or(jf, "pi_flex_mwh", 0.0, "flex.pi_flex_mwh") * kMwhToKwh;
      } else {
        p.flex.p_flex_max.assign(static_cast<size_t>(c.horizon), 0.0);
      }
      for (int t = 0; t < c.horizon; ++t) {
        if (p.flex.p_flex_max[static_cast<size_t>(t)] < 0.0)
          throw ValidationError(ctx + ": p_flex_max must be >= 0");
        if (p.flex.p_flex_max[static_cast<size_t>(t)] > host.load_p[static_cast<size_t>(t)] + 1e-12)
          throw ValidationError(ctx + ": p_flex_max[" + std::to_string(t) +
                                "] exceeds the bus load at that period");
      }
      c.communities.push_back(std::move(p));
    }
  }
  for (const auto& b : c.buses)
    if (b.kind == BusKind::Community && c.community_index(b.id) < 0)
      throw ValidationError("bus " + std::to_string(b.id) +
                            " has kind 'community' but no portfolio entry");

  // Wholesale price series.
  if (root.contains("lmp_kwh"))
    c.lmp = series_field(root["lmp_kwh"], named, c.horizon, "lmp_kwh");
  else if (root.contains("lmp_mwh")) {
    c.lmp = series_field(root["lmp_mwh"], named, c.horizon, "lmp_mwh");
    for (double& v : c.lmp) v *= kMwhToKwh;
  } else {
    throw SchemaError("case: missing field 'lmp_mwh' (or 'lmp_kwh')");
  }

  return c;
}

std::string serialize_case(const NetworkCase& c) {
  json root;
  root["meta"] = {{"horizon", c.horizon},
                  {"dt_hours", c.dt_hours},
                  {"slack_voltage", c.slack_voltage},
                  {"big_m", c.big_m},
                  {"s_base_kva", c.s_base_kva}};
  json jbuses = json::array();
  for (const auto& b : c.buses) {
    json jb;
    jb["id"] = b.id;
    jb["kind"] = b.kind == BusKind::Slack ? "slack" : (b.kind == BusKind::Load ? "load" : "community");
    jb["v_min"] = b.v_min;
    jb["v_max"] = b.v_max;
    jb["load_p"] = series_to_json(b.load_p);
    jb["load_q"] = series_to_json(b.load_q);
    if (b.generator) {
      jb["generator"] = {{"marginal_cost_kwh", b.generator->marginal_cost},
                         {"p_min_kw", b.generator->p_min},
                         {"p_max_kw", b.generator->p_max},
                         {"q_min_kvar", b.generator->q_min},
                         {"q_max_kvar", b.generator->q_max}};
    }
    jbuses.push_back(std::move(jb));
  }
  root["buses"] = std::move(jbuses);
  json jlines = json::array();
  for (const auto& l : c.lines)
    jlines.push_back({{"from", l.from_bus}, {"to", l.to_bus}, {"r", l.r}, {"x", l.x}});
  root["lines"] = std::move(jlines);
  json jcs = json::array();
  for (const auto& p : c.communities) {
    json jc;
    jc["bus"] = p.bus;
    jc["pv"] = {{"forecast", series_to_json(p.pv.forecast)}, {"s_max_kva", p.pv.s_max}, {"zeta", p.pv.zeta}};
    jc["bess"] = {{"p_ch_max_kw", p.bess.p_ch_max}, {"p_dis_max_kw", p.bess.p_dis_max},
                  {"e_min_kwh", p.bess.e_min},      {"e_max_kwh", p.bess.e_max},
                  {"eta_ch", p.bess.eta_ch},        {"eta_dis", p.bess.eta_dis},
                  {"e_init_kwh", p.bess.e_init},    {"e_final_kwh", p.bess.e_final}};
    jc["flex"] = {{"p_flex_max", series_to_json(p.flex.p_flex_max)}, {"pi_flex_kwh", p.flex.pi_flex}};
    jcs.push_back(std::move(jc));
  }
  root["communities"] = std::move(jcs);
  root["lmp_kwh"] = series_to_json(c.lmp);
  return root.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t case_content_hash(const NetworkCase& c) { return fnv1a64(serialize_case(c)); }

}  // namespace gridshare
