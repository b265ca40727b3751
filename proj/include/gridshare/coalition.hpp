#ifndef GRIDSHARE_COALITION_HPP
#define GRIDSHARE_COALITION_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gridshare/case.hpp"
#include "gridshare/kkt.hpp"

namespace gridshare {

// Bitmask over the ordered community list; bit i = EC i active.
using CoalitionMask = std::uint32_t;

constexpr int kMaxCommunities = 30;

std::vector<int> coalition_buses(const NetworkCase& c, CoalitionMask mask);

// One solved coalition as persisted in the ledger.
struct CoalitionRecord {
  CoalitionMask mask = 0;
  double objective = 0.0;       // single-level optimum
  double coalition_cost = 0.0;  // sum of member settlements, c_C
  std::map<int, double> settlement_by_ec;   // every community bus
  std::map<int, double> settlement_by_bus;  // every bus
  double max_comp_product = 0.0;
  double max_cea_violation = 0.0;
  double milp_gap = 0.0;
  double big_m_used = 0.0;
  int escalations = 0;
  double wall_time_s = 0.0;
  bool audit_ok = true;
  std::string provenance = "exact";  // exact | signature-representative | signature-assigned
  std::string timestamp;             // ledger metadata, never part of value tables
};

// Append-only JSONL ledger keyed by (case hash, mask). Records are flushed
// one per line; a trailing partial line from an interrupted run is ignored.
class CoalitionLedger {
 public:
  // Opens or creates the ledger; refuses files written for a different case.
  CoalitionLedger(std::string path, const NetworkCase& c);

  std::optional<CoalitionRecord> find(CoalitionMask mask) const;
  void append(const CoalitionRecord& rec);
  size_t size() const;
  const std::string& path() const { return path_; }

 private:
  void load(const NetworkCase& c);
  std::string path_;
  std::uint64_t case_hash_ = 0;
  std::map<CoalitionMask, CoalitionRecord> records_;
  mutable std::mutex mu_;
};

// Characteristic function values over coalitions (savings, Eq-8 shape).
struct ValueTable {
  int n = 0;
  std::uint64_t case_hash = 0;
  std::vector<int> ec_buses;              // EC index -> bus id
  std::vector<double> c_indiv;            // per EC
  std::map<CoalitionMask, double> values; // coalition -> v(C)
  bool complete_over_all = false;         // all 2^n masks present

  double v(CoalitionMask mask) const;
  bool has(CoalitionMask mask) const { return values.count(mask) > 0; }
  // Canonical byte serialization for determinism checks and artifacts.
  std::string serialize() const;
};

struct EvaluateOptions {
  int workers = 1;
  SingleLevelOptions solve;
  std::string provenance = "exact";
};

struct EvaluateReport {
  int solved = 0;
  int cache_hits = 0;
  double wall_time_s = 0.0;
  std::vector<CoalitionMask> failed;
  bool complete() const { return failed.empty(); }
};

// Evaluates coalitions with caching and an optional persistent ledger.
// Results failing the residual audit are quarantined, never cached.
class CoalitionEngine {
 public:
  CoalitionEngine(const NetworkCase& c, CoalitionLedger* ledger = nullptr);

  int n_communities() const { return static_cast<int>(ec_buses_.size()); }
  const std::vector<int>& ec_buses() const { return ec_buses_; }
  CoalitionMask grand_mask() const {
    return static_cast<CoalitionMask>((1ull << ec_buses_.size()) - 1ull);
  }

  // Solves (or recalls) one coalition.
  CoalitionRecord evaluate(CoalitionMask mask, const EvaluateOptions& opts = {});

  // Settlement of EC m when only m participates.
  double individual_cost(int ec_index, const EvaluateOptions& opts = {});

  // Savings of a coalition against individual operation (Eq-8 shape);
  // evaluates whatever singleton solves it still needs.
  double coalition_value(CoalitionMask mask, const EvaluateOptions& opts = {});

  // Solves every coalition in `masks` (each exactly once; the cache
  // short-circuits) plus all singletons, in a worker pool, and assembles the
  // table. The table content does not depend on the worker count.
  ValueTable evaluate_all(const std::vector<CoalitionMask>& masks, const EvaluateOptions& opts,
                          EvaluateReport* report = nullptr);

  // All 2^n masks, ascending.
  std::vector<CoalitionMask> all_masks() const;

 private:
  CoalitionRecord solve_mask(CoalitionMask mask, const EvaluateOptions& opts);

  const NetworkCase& case_;
  std::vector<int> ec_buses_;
  CoalitionLedger* ledger_;
  std::map<CoalitionMask, CoalitionRecord> cache_;
  std::mutex mu_;
};

std::string iso8601_utc_now();

}  // namespace gridshare

#endif
