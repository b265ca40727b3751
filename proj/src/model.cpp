#include "gridshare/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace gridshare {

LinExpr LinExpr::compacted() const {
  std::map<std::int32_t, double> acc;
  for (size_t i = 0; i < idx_.size(); ++i) acc[idx_[i]] += coef_[i];
  LinExpr out;
  out.constant_ = constant_;
  for (auto& [v, c] : acc)
    if (c != 0.0) {
      out.idx_.push_back(v);
      out.coef_.push_back(c);
    }
  return out;
}

VarId ModelInstance::add_var(double lo, double hi, const std::string& name) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi)
    throw DomainError("variable '" + name + "' has invalid bounds");
  var_lo_.push_back(lo);
  var_hi_.push_back(hi);
  var_kind_.push_back(VarKind::Continuous);
  var_name_.push_back(name);
  return VarId{static_cast<std::int32_t>(var_lo_.size() - 1)};
}

VarId ModelInstance::add_binary(const std::string& name) {
  var_lo_.push_back(0.0);
  var_hi_.push_back(1.0);
  var_kind_.push_back(VarKind::Binary);
  var_name_.push_back(name);
  ++n_binaries_;
  return VarId{static_cast<std::int32_t>(var_lo_.size() - 1)};
}

VarId ModelInstance::add_free(const std::string& name) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return add_var(-inf, inf, name);
}

VarId ModelInstance::add_nonneg(const std::string& name) {
  return add_var(0.0, std::numeric_limits<double>::infinity(), name);
}

void ModelInstance::check_expr(const LinExpr& e, const std::string& where) const {
  const std::int32_t n = static_cast<std::int32_t>(var_lo_.size());
  for (size_t i = 0; i < e.size(); ++i)
    if (e.var(i) < 0 || e.var(i) >= n)
      throw DomainError(where + " references an undeclared variable");
}

RowId ModelInstance::add_row(const LinExpr& expr, RowSense sense, double rhs, const std::string& name) {
  check_expr(expr, "row '" + name + "'");
  LinExpr e = expr.compacted();
  double adj_rhs = rhs - e.constant();
  LinExpr stored = e;
  stored.add_const(-e.constant());  // keep rows constant-free; constant lives in rhs
  row_expr_.push_back(std::move(stored));
  row_sense_.push_back(sense);
  row_rhs_.push_back(adj_rhs);
  row_name_.push_back(name);
  return RowId{static_cast<std::int32_t>(row_rhs_.size() - 1)};
}

void ModelInstance::set_objective(const LinExpr& expr) {
  check_expr(expr, "objective");
  objective_ = expr.compacted();
}

}  // namespace gridshare
