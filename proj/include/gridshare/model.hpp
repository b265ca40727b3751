#ifndef GRIDSHARE_MODEL_HPP
#define GRIDSHARE_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gridshare/errors.hpp"

namespace gridshare {

struct VarId {
  std::int32_t v = -1;
  bool valid() const { return v >= 0; }
};

struct RowId {
  std::int32_t v = -1;
  bool valid() const { return v >= 0; }
};

// Sparse linear expression: sum of coef*var plus a constant.
class LinExpr {
 public:
  LinExpr() = default;
  /*implicit*/ LinExpr(double constant) : constant_(constant) {}
  /*implicit*/ LinExpr(VarId v) { add(v, 1.0); }

  LinExpr& add(VarId v, double coef) {
    if (coef != 0.0) {
      idx_.push_back(v.v);
      coef_.push_back(coef);
    }
    return *this;
  }
  LinExpr& add(const LinExpr& other, double scale = 1.0) {
    for (size_t i = 0; i < other.idx_.size(); ++i) add(VarId{other.idx_[i]}, scale * other.coef_[i]);
    constant_ += scale * other.constant_;
    return *this;
  }
  LinExpr& add_const(double c) {
    constant_ += c;
    return *this;
  }

  LinExpr& operator+=(const LinExpr& o) { return add(o); }
  LinExpr& operator-=(const LinExpr& o) { return add(o, -1.0); }
  LinExpr& operator*=(double s) {
    for (double& c : coef_) c *= s;
    constant_ *= s;
    return *this;
  }
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, double s) { return a *= s; }
  friend LinExpr operator*(double s, LinExpr a) { return a *= s; }

  double constant() const { return constant_; }
  size_t size() const { return idx_.size(); }
  std::int32_t var(size_t i) const { return idx_[i]; }
  double coef(size_t i) const { return coef_[i]; }

  // Merges duplicate variables and drops zeros; term order by variable index.
  LinExpr compacted() const;

 private:
  std::vector<std::int32_t> idx_;
  std::vector<double> coef_;
  double constant_ = 0.0;
};

enum class VarKind : std::uint8_t { Continuous, Binary };
enum class RowSense : std::uint8_t { LessEqual, GreaterEqual, Equal };

// Symbolic LP/MILP container handed to a solver backend. Minimization only.
class ModelInstance {
 public:
  VarId add_var(double lo, double hi, const std::string& name);
  VarId add_binary(const std::string& name);
  VarId add_free(const std::string& name);
  VarId add_nonneg(const std::string& name);

  // The expression's constant is folded into the right-hand side.
  RowId add_row(const LinExpr& expr, RowSense sense, double rhs, const std::string& name);
  RowId add_eq(const LinExpr& expr, double rhs, const std::string& name) {
    return add_row(expr, RowSense::Equal, rhs, name);
  }
  RowId add_le(const LinExpr& expr, double rhs, const std::string& name) {
    return add_row(expr, RowSense::LessEqual, rhs, name);
  }
  RowId add_ge(const LinExpr& expr, double rhs, const std::string& name) {
    return add_row(expr, RowSense::GreaterEqual, rhs, name);
  }

  void set_objective(const LinExpr& expr);

  int n_vars() const { return static_cast<int>(var_lo_.size()); }
  int n_rows() const { return static_cast<int>(row_rhs_.size()); }
  bool has_binaries() const { return n_binaries_ > 0; }
  int n_binaries() const { return n_binaries_; }

  double var_lo(int i) const { return var_lo_[static_cast<size_t>(i)]; }
  double var_hi(int i) const { return var_hi_[static_cast<size_t>(i)]; }
  VarKind var_kind(int i) const { return var_kind_[static_cast<size_t>(i)]; }
  const std::string& var_name(int i) const { return var_name_[static_cast<size_t>(i)]; }

  RowSense row_sense(int i) const { return row_sense_[static_cast<size_t>(i)]; }
  double row_rhs(int i) const { return row_rhs_[static_cast<size_t>(i)]; }
  const std::string& row_name(int i) const { return row_name_[static_cast<size_t>(i)]; }
  const LinExpr& row_expr(int i) const { return row_expr_[static_cast<size_t>(i)]; }

  const LinExpr& objective() const { return objective_; }
  double objective_offset() const { return objective_.constant(); }

 private:
  void check_expr(const LinExpr& e, const std::string& where) const;

  std::vector<double> var_lo_, var_hi_;
  std::vector<VarKind> var_kind_;
  std::vector<std::string> var_name_;
  int n_binaries_ = 0;

  std::vector<LinExpr> row_expr_;
  std::vector<RowSense> row_sense_;
  std::vector<double> row_rhs_;
  std::vector<std::string> row_name_;

  LinExpr objective_;
};

}  // namespace gridshare

#endif
