#ifndef GRIDSHARE_ALLOCATION_HPP
#define GRIDSHARE_ALLOCATION_HPP

#include <map>
#include <string>
#include <vector>

#include "gridshare/coalition.hpp"

namespace gridshare {

// Permutation-averaged marginal contributions over a complete table.
// Throws IncompleteTableError unless every coalition value is present.
std::vector<double> shapley_exact(const ValueTable& table);

// c_final[m] = c_indiv[m] - phi[m].
std::vector<double> final_costs(const ValueTable& table, const std::vector<double>& phi);

// DLMP-based allocation: each community pays its own settlement from the
// grand-coalition solve, with no marginal-contribution correction.
std::vector<double> base_allocation(const NetworkCase& c, const CoalitionRecord& grand);

// Partition of ECs into interchangeability classes. Members of a group are
// electrically close and carry proportional DER portfolios.
struct SignatureScheme {
  std::vector<std::vector<int>> groups;  // EC indices, each ascending
  std::vector<double> capacity_factor;   // per EC, relative to its group's first member

  int n_ecs() const { return static_cast<int>(capacity_factor.size()); }
  int group_of(int ec_index) const;
  // Per-group member counts identifying interchangeable coalitions.
  std::vector<int> signature(CoalitionMask mask) const;
  // Lexicographically smallest coalition with the same signature.
  CoalitionMask representative(CoalitionMask mask) const;
  // prod_i (|group_i| + 1)
  size_t signature_count() const;
  std::vector<CoalitionMask> representative_masks() const;  // ascending
};

SignatureScheme singleton_scheme(int n_ecs);

// Groups ECs whose pairwise tree-path impedance stays within
// tol_frac * (maximum path impedance of the network) and whose DER portfolios
// match up to a positive scalar. Falls back to singletons.
SignatureScheme propose_groups(const NetworkCase& c, double tol_frac = 0.05);

struct SignatureResult {
  std::vector<double> phi;  // per EC, group-averaged
  int representatives_solved = 0;
  ValueTable filled;  // table after assigning representative values
  EvaluateReport report;
};

// Solves one representative per signature, assigns its value to every
// coalition with the same signature, and runs the exact formula on the
// filled table. The empty and grand coalitions are their own representatives
// by construction, anchoring the efficiency identity to the true v(M).
SignatureResult shapley_signature(const NetworkCase& c, CoalitionEngine& engine,
                                  const SignatureScheme& scheme, const EvaluateOptions& opts = {});

// Redistributes each group's combined final cost in proportion to member
// capacity factors; group and global totals are preserved exactly.
std::vector<double> capacity_post_scale(const SignatureScheme& scheme,
                                        const std::vector<double>& final);

struct AllocationReport {
  std::string method;  // exact | signature | base
  std::vector<int> ec_buses;
  std::vector<double> c_indiv;
  std::vector<double> phi;      // savings per EC (empty for base)
  std::vector<double> c_final;  // per EC
  double v_grand = 0.0;
  double total_indiv = 0.0;
  double total_final = 0.0;
  int coalitions_solved = 0;
  // present when an exact reference is available
  std::vector<double> phi_exact;
  std::vector<double> abs_error;
  std::vector<double> rel_error;

  std::string serialize() const;  // canonical JSON bytes
};

}  // namespace gridshare

#endif
