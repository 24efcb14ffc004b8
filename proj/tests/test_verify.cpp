#include <doctest.h>

#include "lasgap/sampling.hpp"
#include "lasgap/verify.hpp"

using namespace lasgap;

TEST_CASE("a feasible integral point passes every level") {
  const int n = 5;
  LinearConstraint cover;
  cover.rhs = Rational(1);
  for (int i = 0; i < n; ++i) cover.coefficients[i] = Rational(1);
  LinearConstraint budget;  // 3 - sum x >= 0
  budget.rhs = Rational(-3);
  for (int i = 0; i < n; ++i) budget.coefficients[i] = Rational(-1);

  const auto p = PseudoDistribution::point_mass(n, Subset::of({1, 4}));
  for (int level = 0; level <= (n - 1) / 2; ++level) {
    const auto report = verify_conditions(p, {cover, budget}, level, {});
    CHECK(report.condition1.pass);
    CHECK(report.condition2.status == PsdStatus::kPsd);
    for (const auto& verdict : report.condition3) {
      CHECK(verdict.status == PsdStatus::kPsd);
      CHECK(verdict.fast_path);
    }
    CHECK(report.overall == Feasibility::kFeasible);
  }
}

TEST_CASE("an infeasible point mass fails the constraint condition") {
  LinearConstraint cover;
  cover.rhs = Rational(1);
  cover.coefficients[0] = Rational(1);
  cover.coefficients[1] = Rational(1);
  const auto p = PseudoDistribution::point_mass(3, Subset::of({2}));
  const auto report = verify_conditions(p, {cover}, 1, {});
  CHECK(report.condition1.pass);
  CHECK(report.condition2.status == PsdStatus::kPsd);
  REQUIRE(report.condition3.size() == 1);
  CHECK(report.condition3[0].status == PsdStatus::kNotPsd);
  REQUIRE(report.condition3[0].witness.has_value());
  CHECK(*report.condition3[0].witness_value < 0);
  CHECK(report.overall == Feasibility::kInfeasible);
}

TEST_CASE("mass failures are infeasible regardless of the matrices") {
  PseudoDistribution p(3);
  p.set_weight(Subset::of({0}), Rational(1, 2));
  const auto report = verify_conditions(p, {}, 0, {});
  CHECK_FALSE(report.condition1.pass);
  CHECK(report.condition1.residual == Rational(-1, 2));
  CHECK(report.overall == Feasibility::kInfeasible);
}

TEST_CASE("moment-table and support drivers agree") {
  Rng rng(43);
  VerifyOptions exact;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int level = static_cast<int>(rng() % 2);
    auto p = random_sparse_distribution(rng, n, 12);
    const auto c = random_constraint(rng, n);
    const auto from_support = verify_conditions(p, {c}, level, exact);
    const auto from_moments =
        verify_conditions(zeta_transform(p, level + 1), std::vector<LinearConstraint>{c}, level,
                          exact);
    CHECK((from_support.condition2.status == PsdStatus::kPsd) ==
          (from_moments.condition2.status == PsdStatus::kPsd));
    CHECK((from_support.condition3[0].status == PsdStatus::kPsd) ==
          (from_moments.condition3[0].status == PsdStatus::kPsd));
    CHECK(from_support.condition1.pass == from_moments.condition1.pass);
  }
}

TEST_CASE("float mode stays sound under exact confirmation") {
  Rng rng(47);
  VerifyOptions floating;
  floating.mode = ArithmeticMode::kFloat;
  VerifyOptions exact;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    auto p = random_sparse_distribution(rng, n, 12);
    const auto c = random_constraint(rng, n);
    const auto numeric = verify_conditions(p, {c}, 1, floating);
    const auto reference = verify_conditions(p, {c}, 1, exact);
    // A confirmed numeric rejection must be a true rejection.
    if (numeric.condition3[0].status == PsdStatus::kNotPsd &&
        !numeric.condition3[0].fast_path) {
      CHECK(reference.condition3[0].status == PsdStatus::kNotPsd);
    }
    if (numeric.overall == Feasibility::kInfeasible) {
      CHECK(reference.overall == Feasibility::kInfeasible);
    }
  }
}
