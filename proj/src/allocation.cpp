#include "gridshare/allocation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <json.hpp>

namespace gridshare {

namespace {

double binom(int n, int k) {
  // exact in doubles for n <= 30
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace

std::vector<double> shapley_exact(const ValueTable& table) {
  const int n = table.n;
  if (!table.complete_over_all)
    throw IncompleteTableError("exact Shapley needs all " + std::to_string(1ull << n) +
                               " coalition values");
  // phi_m = sum over coalitions C containing m of w(|C|-1) * [v(C) - v(C\{m})]
  std::vector<double> weight(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s)
    weight[static_cast<size_t>(s)] = 1.0 / (static_cast<double>(n) * binom(n - 1, s));

  std::vector<double> phi(static_cast<size_t>(n), 0.0);
  const CoalitionMask total = CoalitionMask{1} << n;
  for (CoalitionMask mask = 1; mask < total; ++mask) {
    const int size = std::popcount(mask);
    const double w = weight[static_cast<size_t>(size - 1)];
    const double v_with = table.v(mask);
    for (int m = 0; m < n; ++m) {
      const CoalitionMask bit = CoalitionMask{1} << m;
      if (!(mask & bit)) continue;
      phi[static_cast<size_t>(m)] += w * (v_with - table.v(mask ^ bit));
    }
  }
  return phi;
}

std::vector<double> final_costs(const ValueTable& table, const std::vector<double>& phi) {
  if (phi.size() != table.c_indiv.size())
    throw DimensionError("phi length does not match the community count");
  std::vector<double> out(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) out[i] = table.c_indiv[i] - phi[i];
  return out;
}

std::vector<double> base_allocation(const NetworkCase& c, const CoalitionRecord& grand) {
  std::vector<double> out;
  for (const auto& ec : c.communities) out.push_back(grand.settlement_by_ec.at(ec.bus));
  return out;
}

int SignatureScheme::group_of(int ec_index) const {
  for (size_t g = 0; g < groups.size(); ++g)
    for (int m : groups[g])
      if (m == ec_index) return static_cast<int>(g);
  throw DomainError("community index not covered by the grouping");
}

std::vector<int> SignatureScheme::signature(CoalitionMask mask) const {
  std::vector<int> sig(groups.size(), 0);
  for (size_t g = 0; g < groups.size(); ++g)
    for (int m : groups[g])
      if (mask & (CoalitionMask{1} << m)) ++sig[g];
  return sig;
}

CoalitionMask SignatureScheme::representative(CoalitionMask mask) const {
  std::vector<int> sig = signature(mask);
  CoalitionMask rep = 0;
  for (size_t g = 0; g < groups.size(); ++g)
    for (int k = 0; k < sig[g]; ++k) rep |= CoalitionMask{1} << groups[g][static_cast<size_t>(k)];
  return rep;
}

size_t SignatureScheme::signature_count() const {
  size_t count = 1;
  for (const auto& g : groups) count *= g.size() + 1;
  return count;
}

std::vector<CoalitionMask> SignatureScheme::representative_masks() const {
  std::vector<CoalitionMask> reps{0};
  for (const auto& g : groups) {
    std::vector<CoalitionMask> next;
    for (CoalitionMask base : reps) {
      CoalitionMask add = 0;
      next.push_back(base);
      for (size_t k = 0; k < g.size(); ++k) {
        add |= CoalitionMask{1} << g[k];
        next.push_back(base | add);
      }
    }
    reps = std::move(next);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

SignatureScheme singleton_scheme(int n_ecs) {
  SignatureScheme s;
  for (int i = 0; i < n_ecs; ++i) {
    s.groups.push_back({i});
    s.capacity_factor.push_back(1.0);
  }
  return s;
}

namespace {

// scalable magnitudes of a portfolio, in a fixed order
std::vector<double> scalable_vector(const CommunityPortfolio& p) {
  std::vector<double> v{p.pv.s_max,      p.bess.p_ch_max, p.bess.p_dis_max, p.bess.e_min,
                        p.bess.e_max,    p.bess.e_init,   p.bess.e_final};
  v.insert(v.end(), p.pv.forecast.begin(), p.pv.forecast.end());
  v.insert(v.end(), p.flex.p_flex_max.begin(), p.flex.p_flex_max.end());
  return v;
}

bool proportional_portfolios(const CommunityPortfolio& a, const CommunityPortfolio& b,
                             double* factor) {
  // dimensionless parameters must match exactly
  if (std::abs(a.pv.zeta - b.pv.zeta) > 1e-9) return false;
  if (std::abs(a.bess.eta_ch - b.bess.eta_ch) > 1e-9) return false;
  if (std::abs(a.bess.eta_dis - b.bess.eta_dis) > 1e-9) return false;
  if (std::abs(a.flex.pi_flex - b.flex.pi_flex) > 1e-9) return false;

  std::vector<double> va = scalable_vector(a), vb = scalable_vector(b);
  double f = 0.0;
  for (size_t i = 0; i < va.size(); ++i)
    if (vb[i] > 0.0) {
      f = va[i] / vb[i];
      break;
    }
  if (f == 0.0) {
    // reference portfolio is all zeros; the candidate must be as well
    for (double x : va)
      if (x != 0.0) return false;
    *factor = 1.0;
    return true;
  }
  if (!(f > 0.0)) return false;
  for (size_t i = 0; i < va.size(); ++i)
    if (std::abs(va[i] - f * vb[i]) > 1e-6 * std::max(1.0, std::abs(f * vb[i]))) return false;
  *factor = f;
  return true;
}

}  // namespace

SignatureScheme propose_groups(const NetworkCase& c, double tol_frac) {
  const int n = static_cast<int>(c.communities.size());
  const double tol = tol_frac * c.max_path_impedance();
  SignatureScheme s;
  s.capacity_factor.assign(static_cast<size_t>(n), 1.0);
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& g : s.groups) {
      const CommunityPortfolio& ref = c.communities[static_cast<size_t>(g.front())];
      double factor = 1.0;
      if (!proportional_portfolios(c.communities[static_cast<size_t>(i)], ref, &factor)) continue;
      bool close = true;
      for (int m : g)
        if (c.path_impedance(c.communities[static_cast<size_t>(i)].bus,
                             c.communities[static_cast<size_t>(m)].bus) > tol) {
          close = false;
          break;
        }
      if (!close) continue;
      g.push_back(i);
      s.capacity_factor[static_cast<size_t>(i)] = factor;
      placed = true;
      break;
    }
    if (!placed) s.groups.push_back({i});
  }
  return s;
}

SignatureResult shapley_signature(const NetworkCase& c, CoalitionEngine& engine,
                                  const SignatureScheme& scheme, const EvaluateOptions& opts_in) {
  const int n = engine.n_communities();
  if (scheme.n_ecs() != n) throw DimensionError("scheme does not cover every community");

  EvaluateOptions opts = opts_in;
  opts.provenance = "signature-representative";
  std::vector<CoalitionMask> reps = scheme.representative_masks();

  SignatureResult out;
  engine.evaluate_all(reps, opts, &out.report);
  if (!out.report.complete())
    throw Error("signature sampling: " + std::to_string(out.report.failed.size()) +
                " representative solves failed");
  out.representatives_solved = static_cast<int>(reps.size());

  // representative coalition costs
  std::map<CoalitionMask, double> rep_cost;
  for (CoalitionMask m : reps) rep_cost[m] = engine.evaluate(m, opts).coalition_cost;

  ValueTable& table = out.filled;
  table.n = n;
  table.case_hash = case_content_hash(c);
  table.ec_buses = engine.ec_buses();
  // individual costs inherit from the group's representative singleton
  table.c_indiv.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    CoalitionMask rep = scheme.representative(CoalitionMask{1} << i);
    table.c_indiv[static_cast<size_t>(i)] = rep_cost.at(rep);
  }
  // value of a representative, from its own members' inherited individual costs
  auto rep_value = [&](CoalitionMask rep) {
    double indiv = 0.0;
    for (int i = 0; i < n; ++i)
      if (rep & (CoalitionMask{1} << i)) indiv += table.c_indiv[static_cast<size_t>(i)];
    return indiv - rep_cost.at(rep);
  };
  const CoalitionMask total = CoalitionMask{1} << n;
  for (CoalitionMask mask = 0; mask < total; ++mask) {
    CoalitionMask rep = scheme.representative(mask);
    table.values[mask] = mask == 0 ? 0.0 : rep_value(rep);
  }
  table.complete_over_all = true;

  std::vector<double> raw = shapley_exact(table);
  out.phi.assign(static_cast<size_t>(n), 0.0);
  for (const auto& g : scheme.groups) {
    double mean = 0.0;
    for (int m : g) mean += raw[static_cast<size_t>(m)];
    mean /= static_cast<double>(g.size());
    for (int m : g) out.phi[static_cast<size_t>(m)] = mean;
  }
  return out;
}

std::vector<double> capacity_post_scale(const SignatureScheme& scheme,
                                        const std::vector<double>& final) {
  if (final.size() != scheme.capacity_factor.size())
    throw DimensionError("final-cost vector does not match the scheme");
  std::vector<double> out = final;
  for (const auto& g : scheme.groups) {
    double total = 0.0, denom = 0.0;
    for (int m : g) {
      total += final[static_cast<size_t>(m)];
      denom += scheme.capacity_factor[static_cast<size_t>(m)];
    }
    if (!(denom > 0.0))
      throw ZeroCapacityError("group capacity ratios sum to zero");
    for (int m : g)
      out[static_cast<size_t>(m)] = total * scheme.capacity_factor[static_cast<size_t>(m)] / denom;
  }
  return out;
}

std::string AllocationReport::serialize() const {
  nlohmann::json j;
  j["method"] = method;
  j["ec_buses"] = ec_buses;
  j["c_indiv"] = c_indiv;
  j["phi"] = phi;
  j["c_final"] = c_final;
  j["v_grand"] = v_grand;
  j["total_indiv"] = total_indiv;
  j["total_final"] = total_final;
  j["coalitions_solved"] = coalitions_solved;
  if (!phi_exact.empty()) {
    j["phi_exact"] = phi_exact;
    j["abs_error"] = abs_error;
    j["rel_error"] = rel_error;
  }
  return j.dump(2) + "\n";
}

}  // namespace gridshare
