#include <doctest.h>

#include "lasgap/polyopt.hpp"

using namespace lasgap;

TEST_CASE("objective coefficients") {
  const auto f = hitting_objective(3, 2);
  CHECK(f.degree() == 2);
  CHECK(f.coefficients().count(Subset()) == 0);
  for (int i = 0; i < 3; ++i) {
    CHECK(f.coefficients().at(Subset::single(i)) == 2);
  }
  CHECK(f.coefficients().at(Subset::of({0, 1})) == -1);
  CHECK(f.coefficients().at(Subset::of({0, 2})) == -1);
  CHECK(f.coefficients().at(Subset::of({1, 2})) == -1);

  // Full-degree objective keeps a single top monomial with alternating sign.
  for (int n = 1; n <= 6; ++n) {
    const auto top = hitting_objective(n, n);
    CHECK(top.coefficients().at(Subset::full(n)) == (n % 2 == 1 ? 1 : -1));
  }
  CHECK_THROWS_AS(hitting_objective(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(hitting_objective(3, 4), std::invalid_argument);
}

TEST_CASE("objective evaluation counts the hit k-subsets") {
  for (int n = 1; n <= 10; n += 3) {
    for (int k = 1; k <= n; ++k) {
      const auto f = hitting_objective(n, k);
      const auto values = f.values_on_hypercube();
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        const Subset point = Subset::of_bits(mask);
        const Rational hit_count =
            Rational(binomial(n, k)) - Rational(binomial(n - point.size(), k));
        CHECK(values[mask] == hit_count);
        if (n <= 5) CHECK(f.value_at(point) == hit_count);
      }
    }
  }
}

TEST_CASE("integral optima by exhaustion") {
  CHECK(integral_optimum(hitting_objective(4, 2)) == 6);
  CHECK(integral_optimum(hitting_objective(3, 3)) == 1);
  CHECK(integral_optimum(hitting_objective(5, 1)) == 5);
  CHECK(integral_optimum(hitting_objective(5, 3)) == 10);
  for (int n = 1; n <= 8; n += 2) {
    for (int k = 1; k <= n; ++k) {
      CHECK(integral_optimum(hitting_objective(n, k)) == Rational(binomial(n, k)));
    }
  }
}

TEST_CASE("top-heavy certificate structure") {
  const Rational epsilon(1, 64);
  const auto p = polyopt_certificate(4, 2, epsilon);
  const Rational alpha = (Rational(1) + epsilon) / 5;
  int heavy = 0;
  for (const auto& [set, weight] : p.weights()) {
    if (set.empty()) {
      CHECK(weight == -epsilon);
    } else {
      CHECK(set.size() >= 3);
      CHECK(weight == alpha);
      ++heavy;
    }
  }
  CHECK(heavy == 5);
  CHECK(p.total_mass() == 1);

  for (int n : {3, 5, 7}) {
    for (int k = 1; k <= n; ++k) {
      CHECK(polyopt_certificate(n, k, Rational(3, 17)).total_mass() == 1);
    }
  }

  // The zero-epsilon limit is a genuine distribution.
  const auto genuine = polyopt_certificate(5, 2, Rational(0));
  CHECK(genuine.all_weights_nonnegative());
  CHECK(genuine.total_mass() == 1);
}

TEST_CASE("pseudo objective values") {
  const auto f = hitting_objective(4, 2);
  CHECK(pseudo_objective(polyopt_certificate(4, 2, Rational(1, 64)), f) ==
        Rational(6) * Rational(65, 64));
  CHECK(pseudo_objective(PseudoDistribution::point_mass(4, Subset::full(4)), f) == 6);

  // Convex combinations of integral points stay at or below the optimum.
  PseudoDistribution mix(4);
  mix.set_weight(Subset::of({0}), Rational(1, 2));
  mix.set_weight(Subset::of({1, 2}), Rational(1, 4));
  mix.set_weight(Subset::full(4), Rational(1, 4));
  CHECK(pseudo_objective(mix, f) <= integral_optimum(f));
}

TEST_CASE("ladder verification finds the frozen thresholds") {
  // Four variables, degree two: PSD exactly when epsilon <= 1/64, so the
  // descending ladder stops there.
  const auto four = verify_polyopt(4, 2, default_epsilon_ladder(), ArithmeticMode::kExact);
  CHECK(four.overall == Feasibility::kFeasible);
  REQUIRE(four.passing_epsilon.has_value());
  CHECK(*four.passing_epsilon == Rational(1, 64));
  CHECK(four.optimum == 6);
  CHECK(four.pseudo_value == Rational(6) * Rational(65, 64));
  CHECK(four.pseudo_value > four.optimum);
  CHECK(four.margin == Rational(3, 32));
  REQUIRE(four.rungs.size() == 2);
  CHECK(four.rungs[0].condition2.status == PsdStatus::kNotPsd);
  CHECK(four.rungs[0].weyl_bound < 0);
  CHECK(four.rungs[1].weyl_bound == 0);

  // Five variables, degree three: the threshold 1/1455 admits 2^-12 first.
  const auto five = verify_polyopt(5, 3, default_epsilon_ladder(), ArithmeticMode::kExact);
  REQUIRE(five.passing_epsilon.has_value());
  CHECK(*five.passing_epsilon == Rational(1, 4096));
  CHECK(five.optimum == 10);
  CHECK(five.pseudo_value == Rational(10) * (Rational(1) + Rational(1, 4096)));
  CHECK(five.pseudo_value > five.optimum);

  // Every rejected rung shows a negative bound as well.
  for (const auto& rung : five.rungs) {
    if (rung.condition2.status == PsdStatus::kNotPsd) CHECK(rung.weyl_bound < 0);
  }
}

TEST_CASE("epsilon zero verifies with no gap") {
  const auto report = verify_polyopt(4, 2, {Rational(0)}, ArithmeticMode::kExact);
  CHECK(report.overall == Feasibility::kFeasible);
  REQUIRE(report.passing_epsilon.has_value());
  CHECK(*report.passing_epsilon == 0);
  CHECK(report.pseudo_value == report.optimum);
  CHECK(report.margin == 0);
}
