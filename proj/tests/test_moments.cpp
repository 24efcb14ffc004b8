#include <doctest.h>

#include "lasgap/moments.hpp"
#include "lasgap/psd.hpp"
#include "lasgap/sampling.hpp"
#include "lasgap/zeta.hpp"

using namespace lasgap;

TEST_CASE("constraint evaluation at 0/1 points") {
  // Cardinality form T - sum x with T = 2 at a three-element set.
  LinearConstraint cardinality;
  cardinality.rhs = Rational(-2);
  for (int i = 0; i < 4; ++i) cardinality.coefficients[i] = Rational(-1);
  CHECK(cardinality.value_at(Subset::of({0, 1, 2})) == -1);
  CHECK(cardinality.value_at(Subset()) == 2);  // -b

  LinearConstraint generic;
  generic.rhs = Rational(5, 3);
  generic.coefficients[1] = Rational(7);
  CHECK(generic.value_at(Subset()) == Rational(-5, 3));

  // First demand row of the two-block instance with base 2: coefficient 2 on
  // each first-block job, right-hand side 1.
  LinearConstraint demand;
  demand.rhs = Rational(1);
  demand.coefficients[0] = Rational(2);
  demand.coefficients[1] = Rational(2);
  CHECK(demand.value_at(Subset::of({0})) == 1);
}

TEST_CASE("constraint evaluation at fractional points") {
  LinearConstraint c;
  c.rhs = Rational(1);
  c.coefficients[0] = Rational(2);
  c.coefficients[2] = Rational(4);
  RationalVector x(3);
  x << Rational(1, 4), Rational(0), Rational(1, 8);
  CHECK(c.value_at_point(x) == 0);
  RationalVector short_point(2);
  CHECK_THROWS_AS(c.value_at_point(short_point), std::domain_error);
}

TEST_CASE("variable moment matrix of a point mass is the rank-one zeta outer product") {
  const Subset support = Subset::of({0, 2});
  const auto p = PseudoDistribution::point_mass(4, support);
  const SubsetBasis basis(4, 2);
  const RationalMatrix direct = variable_moment_matrix(zeta_transform(p, 2), basis);
  const RationalVector z = zeta_vector(support, basis);
  CHECK(direct == RationalMatrix(z * z.transpose()));

  const auto factorization = exact_inertia(direct);
  CHECK(factorization.inertia == Inertia{1, 0, basis.size() - 1});
}

TEST_CASE("variable moment matrix fixture at n=2, t=0") {
  std::map<int, Rational> profile{{0, Rational(1, 4)}, {1, Rational(1, 4)}, {2, Rational(1, 4)}};
  const auto p = PseudoDistribution::from_size_profile(2, profile);
  const SubsetBasis basis(2, 1);
  const RationalMatrix m = variable_moment_matrix(zeta_transform(p, 1), basis);
  RationalMatrix expected(3, 3);
  expected << Rational(1), Rational(1, 2), Rational(1, 2),
              Rational(1, 2), Rational(1, 2), Rational(1, 4),
              Rational(1, 2), Rational(1, 4), Rational(1, 2);
  CHECK(m == expected);
  CHECK(m(0, 0) == 1);  // normalized input pins the corner
}

TEST_CASE("constraint moment matrix at a point mass") {
  LinearConstraint c;
  c.rhs = Rational(1);
  c.coefficients[0] = Rational(1);
  c.coefficients[1] = Rational(1);

  const SubsetBasis basis(3, 1);
  // Tight constraint: g vanishes on the support, so the matrix vanishes.
  const auto tight = PseudoDistribution::point_mass(3, Subset::of({0}));
  CHECK(constraint_moment_matrix(zeta_transform(tight, 2), c, basis) ==
        RationalMatrix::Zero(basis.size(), basis.size()));

  // Strictly feasible point: g scales the rank-one outer product.
  const Subset support = Subset::of({0, 1});
  const auto feasible = PseudoDistribution::point_mass(3, support);
  const RationalVector z = zeta_vector(support, basis);
  CHECK(constraint_moment_matrix(zeta_transform(feasible, 2), c, basis) ==
        RationalMatrix(z * z.transpose()));
  CHECK(c.value_at(support) == 1);
}

TEST_CASE("constraint moment matrix fixture at n=2, t=0") {
  std::map<int, Rational> profile{{0, Rational(1, 4)}, {1, Rational(1, 4)}, {2, Rational(1, 4)}};
  const auto p = PseudoDistribution::from_size_profile(2, profile);
  LinearConstraint c;
  c.rhs = Rational(1);
  c.coefficients[0] = Rational(1);
  c.coefficients[1] = Rational(1);
  const SubsetBasis basis(2, 0);
  const RationalMatrix m = constraint_moment_matrix(zeta_transform(p, 1), c, basis);
  REQUIRE(m.rows() == 1);
  CHECK(m(0, 0) == 0);
}

TEST_CASE("rank-one assembly equals the moment form") {
  const SubsetBasis trivial(2, 1);
  const auto unit = PseudoDistribution::point_mass(2, Subset());
  RationalMatrix m = zeta_sum_matrix(unit, nullptr, trivial);
  CHECK(m(0, 0) == 1);
  CHECK(m.sum() == 1);

  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int t = static_cast<int>(rng() % 3);
    const auto p = random_sparse_distribution(rng, n, 24);
    const auto c = random_constraint(rng, n);
    const auto moments = zeta_transform(p, t + 1);

    const SubsetBasis variable_basis(n, std::min(t + 1, n));
    CHECK(zeta_sum_matrix(p, nullptr, variable_basis) ==
          variable_moment_matrix(moments, variable_basis));

    const SubsetBasis constraint_basis(n, std::min(t, n));
    CHECK(zeta_sum_matrix(p, &c, constraint_basis) ==
          constraint_moment_matrix(moments, c, constraint_basis));
  }
}

TEST_CASE("weighted assembly over a feasible support is PSD") {
  LinearConstraint c;
  c.rhs = Rational(1);
  for (int i = 0; i < 5; ++i) c.coefficients[i] = Rational(1);
  PseudoDistribution p(5);
  p.set_weight(Subset::of({0, 1}), Rational(1, 3));
  p.set_weight(Subset::of({2}), Rational(1, 3));
  p.set_weight(Subset::of({0, 3, 4}), Rational(1, 3));
  const SubsetBasis basis(5, 1);
  const auto factorization = exact_inertia(zeta_sum_matrix(p, &c, basis));
  CHECK(factorization.inertia.negative == 0);
}

TEST_CASE("constraint pushforward reproduces the shifted moment combination") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int t = static_cast<int>(rng() % 3);
    const auto p = random_sparse_distribution(rng, n, 24);
    const auto c = random_constraint(rng, n);
    const auto moments = zeta_transform(p, t + 1);
    const auto pushed = zeta_transform(constraint_pushforward(p, c), t);
    for (Subset set : enumerate_subsets(n, std::min(2 * t, n))) {
      Rational expected = -c.rhs * moments.value(set);
      for (const auto& [variable, coefficient] : c.coefficients) {
        expected += coefficient * moments.value(set | Subset::single(variable));
      }
      CHECK(pushed.value(set) == expected);
    }
  }
}

TEST_CASE("closed-form symmetric moments") {
  const auto powers = symmetric_moments(4, 4, Rational(1, 16));
  for (int s = 0; s <= 4; ++s) {
    CHECK(powers.value(enumerate_subsets(4, s).back()) == Rational(1, 1 << s));
  }

  const auto trivial = symmetric_moments(6, 0, Rational(1));
  CHECK(trivial.value(Subset()) == 1);
  CHECK(trivial.value(Subset::of({3})) == 0);

  const auto normalized = symmetric_moments(16, 2, Rational(1, 137));
  CHECK(normalized.value(Subset()) == 1);

  // Against enumeration wherever both paths run.
  for (int n = 1; n <= 10; n += 3) {
    for (int smax = 0; smax <= std::min(n, 3); ++smax) {
      const Rational alpha(1, 5);
      std::map<int, Rational> profile;
      for (int s = 0; s <= smax; ++s) profile[s] = alpha;
      const auto closed = symmetric_moments(n, smax, alpha);
      const auto expanded =
          zeta_transform(PseudoDistribution::from_size_profile(n, profile), (n + 1) / 2);
      for (Subset s : enumerate_subsets(n, n)) {
        CHECK(closed.value(s) == expanded.value(s));
      }
    }
  }
}

TEST_CASE("moments_of prefers the closed form and matches the sparse path") {
  std::map<int, Rational> profile{{0, Rational(-1, 8)}, {3, Rational(3, 8)}};
  const auto p = PseudoDistribution::from_size_profile(5, profile);
  const auto closed = moments_of(p, 3);
  CHECK(closed.size_symmetric_form());
  const auto sparse = zeta_transform(p, 3);
  for (Subset s : enumerate_subsets(5, 5)) {
    CHECK(closed.value(s) == sparse.value(s));
  }
}
