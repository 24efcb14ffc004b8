#include <doctest.h>

#include "lasgap/sampling.hpp"
#include "lasgap/tardy.hpp"

using namespace lasgap;

TEST_CASE("instance formulas") {
  const GapInstance two(2, Integer(2));
  CHECK(two.job_count() == 4);
  CHECK(two.processing_time(1) == 2);
  CHECK(two.processing_time(2) == 4);
  CHECK(two.deadline(1) == 3);
  CHECK(two.deadline(2) == 9);
  CHECK(two.demand(1) == 1);
  CHECK(two.demand(2) == 3);
  const auto jobs = two.jobs();
  REQUIRE(jobs.size() == 4);
  CHECK(jobs[0].processing == 2);
  CHECK(jobs[3].processing == 4);
  CHECK(jobs[1].deadline == 3);
  CHECK(jobs[2].deadline == 9);

  const GapInstance one(1, Integer(2));
  CHECK(one.deadline(1) == 1);
  CHECK(one.demand(1) == 1);

  CHECK(two.job_index(1, 1) == 0);
  CHECK(two.job_index(2, 1) == 2);
  CHECK(two.block_of(3) == 2);
  CHECK_THROWS_AS(GapInstance(1, Integer(1)), std::invalid_argument);
  CHECK_THROWS_AS(GapInstance(9, Integer(2)), std::length_error);
}

TEST_CASE("demand identity and increasing deadlines") {
  for (int m : {1, 2, 3}) {
    for (long base : {2, 5, 10}) {
      const GapInstance instance(m, Integer(base));
      const auto jobs = instance.jobs();
      Integer previous(0);
      for (int block = 1; block <= m; ++block) {
        const Integer deadline = instance.deadline(block);
        CHECK(deadline > previous);
        previous = deadline;
        Integer volume(0);
        for (const Job& job : jobs) {
          if (job.deadline <= deadline) volume += job.processing;
        }
        CHECK(instance.demand(block) == volume - deadline);
      }
    }
  }
}

TEST_CASE("relaxation constraints") {
  const GapInstance instance(2, Integer(2));
  const auto constraints = lp_constraints(instance, Rational(2));
  REQUIRE(constraints.size() == 3);

  // Cardinality row: 2 - sum x >= 0.
  CHECK(constraints[0].value_at(Subset()) == 2);
  CHECK(constraints[0].value_at(Subset::full(4)) == -2);

  // First demand row picks up only first-block jobs with coefficient 2.
  CHECK(constraints[1].coefficients.at(0) == 2);
  CHECK(constraints[1].coefficients.at(1) == 2);
  CHECK(constraints[1].coefficients.count(2) == 0);
  CHECK(constraints[1].rhs == 1);
  CHECK(constraints[1].value_at(Subset::of({0})) == 1);

  // All-ones is feasible at bound n.
  const auto loose = lp_constraints(instance, Rational(4));
  for (const auto& c : loose) {
    CHECK(c.value_at(Subset::full(4)) >= 0);
  }
}

TEST_CASE("the fractional point is tight for every constraint") {
  for (int m = 1; m <= 5; ++m) {
    for (long base : {2, 10}) {
      const GapInstance instance(m, Integer(base));
      const int n = instance.job_count();
      const Rational bound = Rational(m) / Rational(base);
      const auto constraints = lp_constraints(instance, bound);
      RationalVector x(n);
      for (int i = 0; i < n; ++i) x(i) = Rational(1) / (Rational(m) * Rational(base));
      for (const auto& c : constraints) {
        CHECK(c.value_at_point(x) == 0);
      }
    }
  }
}

TEST_CASE("greedy scheduling fixtures") {
  // A single job that meets its deadline.
  CHECK(moore_hodgson({{Integer(3), Integer(5)}}).tardy_count == 0);

  CHECK(moore_hodgson(GapInstance(2, Integer(2)).jobs()).tardy_count == 2);
  CHECK(moore_hodgson(GapInstance(3, Integer(3)).jobs()).tardy_count == 3);

  CHECK(min_tardy_brute_force(GapInstance(2, Integer(2)).jobs()) == 2);
  CHECK(min_tardy_brute_force(GapInstance(3, Integer(3)).jobs()) == 3);

  CHECK_THROWS_AS(moore_hodgson({{Integer(0), Integer(1)}}), std::invalid_argument);
}

TEST_CASE("greedy equals exhaustive search on random instances") {
  Rng rng(53);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> processing(1, 20);
  std::uniform_int_distribution<int> deadline(1, 60);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Job> jobs;
    const int count = size(rng);
    jobs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      jobs.push_back({Integer(processing(rng)), Integer(deadline(rng))});
    }
    CHECK(moore_hodgson(jobs).tardy_count == min_tardy_brute_force(jobs));
  }
}

TEST_CASE("the integral optimum of the family is the block count") {
  for (int m = 1; m <= 6; ++m) {
    for (long base : {2, 10}) {
      const GapInstance instance(m, Integer(base));
      CHECK(moore_hodgson(instance.jobs()).tardy_count == m);
      if (m <= 3) {
        CHECK(min_tardy_brute_force(instance.jobs()) == m);
      }
    }
  }
}

TEST_CASE("certificate parameters") {
  const GapInstance sixteen(4, Integer(1000));
  const auto tight = make_certificate(sixteen, 2, 2);
  CHECK(tight.spec.level == 1);
  CHECK(tight.spec.support_threshold == 2);
  CHECK(tight.spec.alpha == Rational(1, 137));
  CHECK(tight.distribution.total_mass() == 1);
  CHECK(tight.distribution.weights().size() == 137);

  const GapInstance thirty_six(6, Integer(1000));
  const auto wide = make_certificate(thirty_six, 1, 2);
  CHECK(wide.spec.level == 1);
  CHECK(wide.spec.support_threshold == 3);
  CHECK(wide.spec.alpha == Rational(1, 7807));
  CHECK(wide.distribution.total_mass() == 1);

  const auto sane = make_certificate(GapInstance(3, Integer(7)), 1, 1);
  CHECK(sane.spec.level == 1);
  CHECK(sane.spec.support_threshold == 3);

  CHECK_THROWS_WITH_AS(make_certificate(sixteen, 2, 3) /* 4/3 not integral */,
                       doctest::Contains("sqrt(n)/k"), std::invalid_argument);
  CHECK_THROWS_AS(make_certificate(sixteen, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_certificate(sixteen, 3, 2), std::invalid_argument);
}

TEST_CASE("gap verification on the sanity family (gap 1)") {
  // n = 9, k = 1: the relaxation bound equals the true optimum.
  const auto verification =
      verify_gap(3, 1, 1, -1, {Integer(1000)}, ArithmeticMode::kExact);
  CHECK(verification.spec.level == 1);
  CHECK(verification.relaxation_bound == 3);
  CHECK(verification.integral_optimum == 3);
  CHECK(verification.gap == 1);
  CHECK(verification.overall == Feasibility::kFeasible);
}

TEST_CASE("threshold tightness: one level higher rejects with a diagonal witness") {
  const auto verification =
      verify_gap(4, 2, 2, 2, default_base_ladder(), ArithmeticMode::kFloat);
  CHECK(verification.overall == Feasibility::kInfeasible);
  for (const LadderRung& rung : verification.rungs) {
    bool rejected = false;
    for (const auto& verdict : rung.report.condition3) {
      if (verdict.status == PsdStatus::kNotPsd) {
        rejected = true;
        CHECK(verdict.fast_path);
        CHECK(verdict.method == "diagonal-congruence");
        REQUIRE(verdict.witness_value.has_value());
        CHECK(*verdict.witness_value < 0);
      }
    }
    CHECK(rejected);
  }
}
