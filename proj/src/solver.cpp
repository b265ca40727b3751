#include "gridshare/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "Highs.h"

namespace gridshare {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double to_highs_bound(double v) {
  if (v == kInf) return kHighsInf;
  if (v == -kInf) return -kHighsInf;
  return v;
}

HighsModel to_highs(const ModelInstance& m) {
  HighsModel hm;
  HighsLp& lp = hm.lp_;
  lp.num_col_ = m.n_vars();
  lp.num_row_ = m.n_rows();
  lp.sense_ = ObjSense::kMinimize;
  lp.offset_ = m.objective_offset();

  lp.col_cost_.assign(static_cast<size_t>(m.n_vars()), 0.0);
  const LinExpr& obj = m.objective();
  for (size_t i = 0; i < obj.size(); ++i)
    lp.col_cost_[static_cast<size_t>(obj.var(i))] += obj.coef(i);

  lp.col_lower_.resize(static_cast<size_t>(m.n_vars()));
  lp.col_upper_.resize(static_cast<size_t>(m.n_vars()));
  for (int i = 0; i < m.n_vars(); ++i) {
    lp.col_lower_[static_cast<size_t>(i)] = to_highs_bound(m.var_lo(i));
    lp.col_upper_[static_cast<size_t>(i)] = to_highs_bound(m.var_hi(i));
  }
  if (m.has_binaries()) {
    lp.integrality_.resize(static_cast<size_t>(m.n_vars()));
    for (int i = 0; i < m.n_vars(); ++i)
      lp.integrality_[static_cast<size_t>(i)] =
          m.var_kind(i) == VarKind::Binary ? HighsVarType::kInteger : HighsVarType::kContinuous;
  }

  lp.row_lower_.resize(static_cast<size_t>(m.n_rows()));
  lp.row_upper_.resize(static_cast<size_t>(m.n_rows()));
  lp.a_matrix_.format_ = MatrixFormat::kRowwise;
  lp.a_matrix_.start_.clear();
  lp.a_matrix_.start_.push_back(0);
  for (int r = 0; r < m.n_rows(); ++r) {
    const LinExpr& e = m.row_expr(r);
    for (size_t i = 0; i < e.size(); ++i) {
      lp.a_matrix_.index_.push_back(e.var(i));
      lp.a_matrix_.value_.push_back(e.coef(i));
    }
    lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
    double rhs = m.row_rhs(r);
    switch (m.row_sense(r)) {
      case RowSense::Equal:
        lp.row_lower_[static_cast<size_t>(r)] = rhs;
        lp.row_upper_[static_cast<size_t>(r)] = rhs;
        break;
      case RowSense::LessEqual:
        lp.row_lower_[static_cast<size_t>(r)] = -kHighsInf;
        lp.row_upper_[static_cast<size_t>(r)] = rhs;
        break;
      case RowSense::GreaterEqual:
        lp.row_lower_[static_cast<size_t>(r)] = rhs;
        lp.row_upper_[static_cast<size_t>(r)] = kHighsInf;
        break;
    }
  }
  return hm;
}

void apply_options(Highs& highs, const SolveOptions& opts, bool milp) {
  highs.setOptionValue("output_flag", opts.log);
  highs.setOptionValue("threads", opts.threads);
  if (opts.threads <= 1) highs.setOptionValue("parallel", "off");
  highs.setOptionValue("random_seed", 0);
  highs.setOptionValue("primal_feasibility_tolerance", 1e-9);
  highs.setOptionValue("dual_feasibility_tolerance", 1e-9);
  if (milp) {
    highs.setOptionValue("mip_rel_gap", opts.gap_tol);
    highs.setOptionValue("mip_feasibility_tolerance", 1e-9);
  } else {
    highs.setOptionValue("solver", "simplex");  // basic solutions carry exact duals
  }
  if (opts.time_limit_s > 0.0) highs.setOptionValue("time_limit", opts.time_limit_s);
}

}  // namespace

double SolveOutcome::eval(const LinExpr& e) const {
  double v = e.constant();
  for (size_t i = 0; i < e.size(); ++i) v += e.coef(i) * primal.at(static_cast<size_t>(e.var(i)));
  return v;
}

SolveOutcome solve(const ModelInstance& model, const SolveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Highs highs;
  apply_options(highs, opts, model.has_binaries());
  if (highs.passModel(to_highs(model)) != HighsStatus::kOk)
    throw BackendError("HiGHS rejected the model");
  const HighsStatus rs = highs.run();
  if (rs == HighsStatus::kError) throw BackendError("HiGHS run failed");

  SolveOutcome out;
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  switch (highs.getModelStatus()) {
    case HighsModelStatus::kOptimal:
      out.status = SolveStatus::Optimal;
      break;
    case HighsModelStatus::kInfeasible:
      out.status = SolveStatus::Infeasible;
      break;
    case HighsModelStatus::kUnbounded:
    case HighsModelStatus::kUnboundedOrInfeasible:
      out.status = SolveStatus::Unbounded;
      break;
    case HighsModelStatus::kTimeLimit:
    case HighsModelStatus::kIterationLimit:
    case HighsModelStatus::kSolutionLimit:
      out.status = SolveStatus::Limit;
      break;
    default:
      throw BackendError("HiGHS returned unexpected status " +
                         highs.modelStatusToString(highs.getModelStatus()));
  }
  if (out.status == SolveStatus::Optimal || out.status == SolveStatus::Limit) {
    const HighsSolution& sol = highs.getSolution();
    out.primal = sol.col_value;
    if (!model.has_binaries() && sol.dual_valid) {
      out.row_dual = sol.row_dual;
      out.col_dual = sol.col_dual;
    }
    out.objective = highs.getObjectiveValue();
    if (model.has_binaries()) out.gap = highs.getInfo().mip_gap;
  }
  return out;
}

namespace {

std::string sanitize(const std::string& name, int fallback_idx, char prefix) {
  std::string s;
  for (char c : name)
    s += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0])))
    s = std::string(1, prefix) + std::to_string(fallback_idx) + "_" + s;
  return s;
}

void append_expr(std::ostringstream& os, const LinExpr& e, const std::vector<std::string>& names) {
  if (e.size() == 0) {
    os << " 0 " << (names.empty() ? "x0" : names[0]);
    return;
  }
  for (size_t i = 0; i < e.size(); ++i) {
    double c = e.coef(i);
    os << (c < 0 ? " - " : " + ");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(c));
    os << buf << " " << names[static_cast<size_t>(e.var(i))];
  }
}

}  // namespace

void write_lp(const ModelInstance& model, const std::string& path) {
  std::vector<std::string> vnames(static_cast<size_t>(model.n_vars()));
  std::set<std::string> used;
  for (int i = 0; i < model.n_vars(); ++i) {
    std::string s = sanitize(model.var_name(i), i, 'x');
    while (!used.insert(s).second) s += "_" + std::to_string(i);
    vnames[static_cast<size_t>(i)] = s;
  }
  std::ostringstream os;
  os << "\\ exported model\n";
  os << "Minimize\n obj:";
  append_expr(os, model.objective(), vnames);
  if (model.objective_offset() != 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", std::abs(model.objective_offset()));
    os << (model.objective_offset() < 0 ? " - " : " + ") << buf;
  }
  os << "\nSubject To\n";
  std::set<std::string> used_rows;
  for (int r = 0; r < model.n_rows(); ++r) {
    std::string rn = sanitize(model.row_name(r), r, 'c');
    while (!used_rows.insert(rn).second) rn += "_" + std::to_string(r);
    os << " " << rn << ":";
    append_expr(os, model.row_expr(r), vnames);
    const char* rel = model.row_sense(r) == RowSense::Equal
                          ? " = "
                          : (model.row_sense(r) == RowSense::LessEqual ? " <= " : " >= ");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", model.row_rhs(r));
    os << rel << buf << "\n";
  }
  os << "Bounds\n";
  for (int i = 0; i < model.n_vars(); ++i) {
    if (model.var_kind(i) == VarKind::Binary) continue;
    double lo = model.var_lo(i), hi = model.var_hi(i);
    if (lo == 0.0 && hi == kInf) continue;  // LP-format default
    const std::string& nm = vnames[static_cast<size_t>(i)];
    if (lo == -kInf && hi == kInf) {
      os << " " << nm << " free\n";
      continue;
    }
    char lb[64], ub[64];
    if (lo == -kInf)
      os << " -inf <= " << nm;
    else {
      std::snprintf(lb, sizeof lb, "%.17g", lo);
      os << " " << lb << " <= " << nm;
    }
    if (hi == kInf)
      os << "\n";
    else {
      std::snprintf(ub, sizeof ub, "%.17g", hi);
      os << " <= " << ub << "\n";
    }
  }
  bool any_bin = false;
  for (int i = 0; i < model.n_vars(); ++i)
    if (model.var_kind(i) == VarKind::Binary) {
      if (!any_bin) {
        os << "Binaries\n";
        any_bin = true;
      }
      os << " " << vnames[static_cast<size_t>(i)] << "\n";
    }
  os << "End\n";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw BackendError("cannot open '" + path + "' for writing");
  f << os.str();
}

double solve_lp_file(const std::string& path, const SolveOptions& opts) {
  Highs highs;
  apply_options(highs, opts, /*milp=*/true);  // gap options are harmless for LPs
  highs.setOptionValue("output_flag", opts.log);
  if (highs.readModel(path) != HighsStatus::kOk)
    throw BackendError("HiGHS could not read '" + path + "'");
  if (highs.run() == HighsStatus::kError) throw BackendError("HiGHS run failed on '" + path + "'");
  if (highs.getModelStatus() != HighsModelStatus::kOptimal)
    throw BackendError("model in '" + path + "' did not solve to optimality");
  return highs.getObjectiveValue();
}

}  // namespace gridshare
