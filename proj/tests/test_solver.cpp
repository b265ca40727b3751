#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <limits>

#include "gridshare/solver.hpp"

using namespace gridshare;

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

TEST_CASE("min x subject to x >= 3") {
  ModelInstance m;
  VarId x = m.add_free("x");
  RowId r = m.add_ge(LinExpr(x), 3.0, "lb");
  m.set_objective(LinExpr(x));
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  CHECK(out.value(x) == doctest::Approx(3.0));
  CHECK(out.objective == doctest::Approx(3.0));
  // dual = d(objective)/d(rhs): hand-solved 1-D LP
  CHECK(out.dual(r) == doctest::Approx(1.0));
}

TEST_CASE("contradictory bounds are infeasible") {
  ModelInstance m;
  VarId x = m.add_nonneg("x");
  m.add_le(LinExpr(x), -1.0, "ub");
  m.set_objective(LinExpr());
  SolveOutcome out = solve(m);
  CHECK(out.status == SolveStatus::Infeasible);
}

TEST_CASE("unbounded descent is reported") {
  ModelInstance m;
  VarId x = m.add_free("x");
  m.set_objective(LinExpr(x));
  SolveOutcome out = solve(m);
  CHECK(out.status == SolveStatus::Unbounded);
}

TEST_CASE("dual sign convention is the rhs sensitivity") {
  // min 2x s.t. x >= 5  -> f* = 10, df*/d(5) = 2
  ModelInstance m;
  VarId x = m.add_free("x");
  RowId lo = m.add_ge(LinExpr(x), 5.0, "lo");
  m.set_objective(LinExpr(x) * 2.0);
  SolveOutcome a = solve(m);
  REQUIRE(a.optimal());
  CHECK(a.dual(lo) == doctest::Approx(2.0));

  // min -x s.t. x <= 3 -> f* = -3, df*/d(3) = -1
  ModelInstance m2;
  VarId y = m2.add_free("y");
  RowId hi = m2.add_le(LinExpr(y), 3.0, "hi");
  m2.set_objective(LinExpr(y) * -1.0);
  SolveOutcome b = solve(m2);
  REQUIRE(b.optimal());
  CHECK(b.dual(hi) == doctest::Approx(-1.0));
}

TEST_CASE("reduced cost reports bound sensitivity") {
  // min 3x with 1 <= x <= 9: at the lower bound, rc = 3
  ModelInstance m;
  VarId x = m.add_var(1.0, 9.0, "x");
  m.set_objective(LinExpr(x) * 3.0);
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  CHECK(out.value(x) == doctest::Approx(1.0));
  CHECK(out.reduced_cost(x) == doctest::Approx(3.0));
}

TEST_CASE("equality row with expression constant folds into rhs") {
  ModelInstance m;
  VarId x = m.add_free("x");
  LinExpr e = LinExpr(x) + LinExpr(2.5);  // x + 2.5 == 4.0  ->  x = 1.5
  m.add_eq(e, 4.0, "eq");
  m.set_objective(LinExpr(x));
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  CHECK(out.value(x) == doctest::Approx(1.5));
}

TEST_CASE("small MILP solves and returns no duals") {
  // max x1 + 2 x2 s.t. x1 + x2 <= 1, binaries  ->  pick x2
  ModelInstance m;
  VarId x1 = m.add_binary("x1");
  VarId x2 = m.add_binary("x2");
  m.add_le(LinExpr(x1) + LinExpr(x2), 1.0, "pick_one");
  m.set_objective(LinExpr(x1) * -1.0 + LinExpr(x2) * -2.0);
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  CHECK(out.objective == doctest::Approx(-2.0));
  CHECK(out.value(x2) == doctest::Approx(1.0));
  CHECK(out.row_dual.empty());
}

TEST_CASE("objective offset is reported") {
  ModelInstance m;
  VarId x = m.add_var(0.0, 10.0, "x");
  LinExpr obj = LinExpr(x);
  obj.add_const(7.0);
  m.set_objective(obj);
  SolveOutcome out = solve(m);
  REQUIRE(out.optimal());
  CHECK(out.objective == doctest::Approx(7.0));
  CHECK(out.eval(obj) == doctest::Approx(7.0));
}

TEST_CASE("deterministic re-solve") {
  ModelInstance m;
  VarId x = m.add_var(0.0, inf, "x");
  VarId y = m.add_var(0.0, inf, "y");
  m.add_ge(LinExpr(x) + LinExpr(y) * 2.0, 7.0, "c1");
  m.add_ge(LinExpr(x) * 3.0 + LinExpr(y), 9.0, "c2");
  m.set_objective(LinExpr(x) * 1.3 + LinExpr(y) * 0.9);
  SolveOutcome a = solve(m);
  SolveOutcome b = solve(m);
  REQUIRE(a.optimal());
  REQUIRE(b.optimal());
  CHECK(std::abs(a.objective - b.objective) <= 1e-9 * std::abs(a.objective));
}

TEST_CASE("LP interchange round-trip reproduces the objective") {
  ModelInstance m;
  VarId x = m.add_var(-2.0, 8.0, "x_scaled");
  VarId y = m.add_free("y free?name");  // exercised name sanitization
  VarId b = m.add_binary("pick");
  m.add_ge(LinExpr(x) + LinExpr(y), 1.0, "lo");
  m.add_le(LinExpr(y) - LinExpr(b) * 5.0, 2.0, "cap");
  m.add_eq(LinExpr(x) * 2.0 + LinExpr(b), 3.0, "tie");
  m.set_objective(LinExpr(x) * 1.5 + LinExpr(y) * 0.25 + LinExpr(b) * 2.0);
  SolveOutcome direct = solve(m);
  REQUIRE(direct.optimal());

  auto path = std::filesystem::temp_directory_path() / "gridshare_roundtrip.lp";
  write_lp(m, path.string());
  double obj = solve_lp_file(path.string());
  CHECK(obj == doctest::Approx(direct.objective).epsilon(1e-6));
  std::filesystem::remove(path);
}

TEST_CASE("rows referencing undeclared variables are rejected") {
  ModelInstance m;
  m.add_var(0.0, 1.0, "x");
  LinExpr bogus;
  bogus.add(VarId{42}, 1.0);
  CHECK_THROWS_AS(m.add_eq(bogus, 0.0, "bad"), DomainError);
}
