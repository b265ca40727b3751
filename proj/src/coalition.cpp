#include "gridshare/coalition.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace gridshare {

using nlohmann::json;

std::string iso8601_utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<int> coalition_buses(const NetworkCase& c, CoalitionMask mask) {
  std::vector<int> buses;
  for (size_t i = 0; i < c.communities.size(); ++i)
    if (mask & (CoalitionMask{1} << i)) buses.push_back(c.communities[i].bus);
  return buses;
}

namespace {

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json record_to_json(const CoalitionRecord& r) {
  json j;
  j["kind"] = "result";
  j["mask"] = r.mask;
  j["objective"] = r.objective;
  j["coalition_cost"] = r.coalition_cost;
  json by_ec = json::object();
  for (const auto& [bus, v] : r.settlement_by_ec) by_ec[std::to_string(bus)] = v;
  j["settlement_by_ec"] = std::move(by_ec);
  json by_bus = json::object();
  for (const auto& [bus, v] : r.settlement_by_bus) by_bus[std::to_string(bus)] = v;
  j["settlement_by_bus"] = std::move(by_bus);
  j["max_comp_product"] = r.max_comp_product;
  j["max_cea_violation"] = r.max_cea_violation;
  j["milp_gap"] = r.milp_gap;
  j["big_m_used"] = r.big_m_used;
  j["escalations"] = r.escalations;
  j["wall_time_s"] = r.wall_time_s;
  j["audit_ok"] = r.audit_ok;
  j["provenance"] = r.provenance;
  j["timestamp"] = r.timestamp;
  return j;
}

CoalitionRecord record_from_json(const json& j) {
  CoalitionRecord r;
  r.mask = j.at("mask").get<CoalitionMask>();
  r.objective = j.at("objective").get<double>();
  r.coalition_cost = j.at("coalition_cost").get<double>();
  for (auto it = j.at("settlement_by_ec").begin(); it != j.at("settlement_by_ec").end(); ++it)
    r.settlement_by_ec[std::stoi(it.key())] = it.value().get<double>();
  for (auto it = j.at("settlement_by_bus").begin(); it != j.at("settlement_by_bus").end(); ++it)
    r.settlement_by_bus[std::stoi(it.key())] = it.value().get<double>();
  r.max_comp_product = j.at("max_comp_product").get<double>();
  r.max_cea_violation = j.at("max_cea_violation").get<double>();
  r.milp_gap = j.at("milp_gap").get<double>();
  r.big_m_used = j.at("big_m_used").get<double>();
  r.escalations = j.at("escalations").get<int>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.audit_ok = j.at("audit_ok").get<bool>();
  r.provenance = j.at("provenance").get<std::string>();
  r.timestamp = j.value("timestamp", "");
  return r;
}

}  // namespace

CoalitionLedger::CoalitionLedger(std::string path, const NetworkCase& c) : path_(std::move(path)) {
  case_hash_ = case_content_hash(c);
  load(c);
}

void CoalitionLedger::load(const NetworkCase& c) {
  std::ifstream f(path_);
  if (!f) {
    // fresh ledger: write the header
    std::ofstream out(path_);
    if (!out) throw Error("cannot create ledger at '" + path_ + "'");
    json h;
    h["kind"] = "header";
    h["format"] = 1;
    h["case_hash"] = hash_hex(case_hash_);
    json buses = json::array();
    for (const auto& ec : c.communities) buses.push_back(ec.bus);
    h["ec_buses"] = std::move(buses);
    out << h.dump() << "\n";
    return;
  }
  std::string line;
  bool header_seen = false;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception&) {
      break;  // trailing partial record from an interrupted writer
    }
    std::string kind = j.value("kind", "");
    if (kind == "header") {
      if (j.at("case_hash").get<std::string>() != hash_hex(case_hash_))
        throw ValidationError("ledger '" + path_ + "' was written for a different case");
      header_seen = true;
    } else if (kind == "result") {
      CoalitionRecord r = record_from_json(j);
      records_[r.mask] = std::move(r);
    }
  }
  if (!header_seen) throw ValidationError("ledger '" + path_ + "' has no header record");
}

std::optional<CoalitionRecord> CoalitionLedger::find(CoalitionMask mask) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = records_.find(mask);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void CoalitionLedger::append(const CoalitionRecord& rec) {
  std::lock_guard<std::mutex> lock(mu_);
  if (records_.count(rec.mask)) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot append to ledger '" + path_ + "'");
  out << record_to_json(rec).dump() << "\n";
  out.flush();
  records_[rec.mask] = rec;
}

size_t CoalitionLedger::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return records_.size();
}

double ValueTable::v(CoalitionMask mask) const {
  auto it = values.find(mask);
  if (it == values.end())
    throw IncompleteTableError("no value for coalition mask " + std::to_string(mask));
  return it->second;
}

std::string ValueTable::serialize() const {
  json j;
  j["n"] = n;
  j["case_hash"] = hash_hex(case_hash);
  j["ec_buses"] = ec_buses;
  j["c_indiv"] = c_indiv;
  json vals = json::array();
  for (const auto& [mask, v] : values) vals.push_back({mask, v});
  j["values"] = std::move(vals);
  return j.dump() + "\n";
}

CoalitionEngine::CoalitionEngine(const NetworkCase& c, CoalitionLedger* ledger)
    : case_(c), ledger_(ledger) {
  for (const auto& ec : c.communities) ec_buses_.push_back(ec.bus);
  if (ec_buses_.size() > kMaxCommunities)
    throw DomainError("coalition bitmask supports at most 30 communities");
}

std::vector<CoalitionMask> CoalitionEngine::all_masks() const {
  std::vector<CoalitionMask> masks;
  const CoalitionMask total = CoalitionMask{1} << ec_buses_.size();
  for (CoalitionMask m = 0; m < total; ++m) masks.push_back(m);
  return masks;
}

CoalitionRecord CoalitionEngine::solve_mask(CoalitionMask mask, const EvaluateOptions& opts) {
  std::set<int> active;
  for (size_t i = 0; i < ec_buses_.size(); ++i)
    if (mask & (CoalitionMask{1} << i)) active.insert(ec_buses_[i]);
  CoalitionSolveResult sr = solve_single_level(case_, active, opts.solve);

  CoalitionRecord r;
  r.mask = mask;
  r.objective = sr.objective;
  r.settlement_by_ec = sr.settlement_by_ec;
  r.settlement_by_bus = sr.settlement_by_bus;
  for (int bus : active) r.coalition_cost += sr.settlement_by_ec.at(bus);
  r.max_comp_product = sr.max_comp_product;
  r.max_cea_violation = sr.max_cea_violation;
  r.milp_gap = sr.milp_gap;
  r.big_m_used = sr.big_m_used;
  r.escalations = sr.escalations;
  r.wall_time_s = sr.wall_time_s;
  r.audit_ok = sr.max_comp_product <= 1e-6 * sr.big_m_used && sr.max_cea_violation <= 1e-6;
  r.provenance = opts.provenance;
  r.timestamp = iso8601_utc_now();
  return r;
}

CoalitionRecord CoalitionEngine::evaluate(CoalitionMask mask, const EvaluateOptions& opts) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
  }
  if (ledger_) {
    if (auto rec = ledger_->find(mask)) {
      std::lock_guard<std::mutex> lock(mu_);
      cache_[mask] = *rec;
      return *rec;
    }
  }
  CoalitionRecord rec = solve_mask(mask, opts);
  if (rec.audit_ok) {
    std::lock_guard<std::mutex> lock(mu_);
    cache_[mask] = rec;
    if (ledger_) ledger_->append(rec);
  }
  return rec;
}

double CoalitionEngine::individual_cost(int ec_index, const EvaluateOptions& opts) {
  if (ec_index < 0 || ec_index >= n_communities())
    throw DomainError("community index out of range");
  CoalitionRecord rec = evaluate(CoalitionMask{1} << ec_index, opts);
  return rec.coalition_cost;
}

double CoalitionEngine::coalition_value(CoalitionMask mask, const EvaluateOptions& opts) {
  if (mask == 0) return 0.0;  // empty sum
  CoalitionRecord rec = evaluate(mask, opts);
  double indiv = 0.0;
  for (size_t i = 0; i < ec_buses_.size(); ++i)
    if (mask & (CoalitionMask{1} << i)) indiv += individual_cost(static_cast<int>(i), opts);
  return indiv - rec.coalition_cost;
}

ValueTable CoalitionEngine::evaluate_all(const std::vector<CoalitionMask>& masks,
                                         const EvaluateOptions& opts, EvaluateReport* report) {
  const auto t0 = std::chrono::steady_clock::now();
  std::set<CoalitionMask> wanted(masks.begin(), masks.end());

  // pending work: whatever the cache/ledger does not already hold
  std::vector<CoalitionMask> pending;
  int cache_hits = 0;
  for (CoalitionMask m : wanted) {
    bool have = false;
    {
      std::lock_guard<std::mutex> lock(mu_);
      have = cache_.count(m) > 0;
    }
    if (!have && ledger_) {
      if (auto rec = ledger_->find(m)) {
        std::lock_guard<std::mutex> lock(mu_);
        cache_[m] = *rec;
        have = true;
      }
    }
    if (have)
      ++cache_hits;
    else
      pending.push_back(m);
  }

  std::vector<CoalitionMask> failed;
  std::mutex fail_mu;
  std::atomic<size_t> next{0};
  int workers = std::max(1, opts.workers);
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      CoalitionMask m = pending[i];
      try {
        CoalitionRecord rec = solve_mask(m, opts);
        if (!rec.audit_ok) throw Error("residual audit failed");
        std::lock_guard<std::mutex> lock(mu_);
        cache_[m] = rec;
        if (ledger_) ledger_->append(rec);
      } catch (const std::exception&) {
        std::lock_guard<std::mutex> lock(fail_mu);
        failed.push_back(m);
      }
    }
  };
  if (workers == 1 || pending.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  if (report) {
    report->solved = static_cast<int>(pending.size() - failed.size());
    report->cache_hits = cache_hits;
    std::sort(failed.begin(), failed.end());
    report->failed = failed;
    report->wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  // assemble deterministically from the sorted cache
  ValueTable table;
  table.n = n_communities();
  table.case_hash = case_content_hash(case_);
  table.ec_buses = ec_buses_;
  table.c_indiv.assign(ec_buses_.size(), std::numeric_limits<double>::quiet_NaN());
  std::lock_guard<std::mutex> lock(mu_);
  for (size_t i = 0; i < ec_buses_.size(); ++i) {
    auto it = cache_.find(CoalitionMask{1} << i);
    if (it != cache_.end()) table.c_indiv[i] = it->second.coalition_cost;
  }
  for (CoalitionMask m : wanted) {
    auto it = cache_.find(m);
    if (it == cache_.end()) continue;
    double indiv = 0.0;
    bool ok = true;
    for (size_t i = 0; i < ec_buses_.size(); ++i)
      if (m & (CoalitionMask{1} << i)) {
        if (std::isnan(table.c_indiv[i])) {
          ok = false;
          break;
        }
        indiv += table.c_indiv[i];
      }
    if (ok) table.values[m] = indiv - it->second.coalition_cost;
  }
  table.complete_over_all =
      table.values.size() == (size_t{1} << ec_buses_.size()) &&
      std::none_of(table.c_indiv.begin(), table.c_indiv.end(), [](double v) { return std::isnan(v); });
  return table;
}

}  // namespace gridshare
