#include "lasgap/sampling.hpp"

namespace lasgap {

Rational random_rational(Rng& rng, bool allow_zero) {
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 4);
  while (true) {
    const int p = numerator(rng);
    if (p == 0 && !allow_zero) continue;
    Rational q(p, denominator(rng));
    q.canonicalize();
    return q;
  }
}

PseudoDistribution random_sparse_distribution(Rng& rng, int n, int max_support) {
  PseudoDistribution p(n);
  const std::uint64_t universe = Subset::full(n).bits();
  std::uniform_int_distribution<std::uint64_t> masks(0, universe);
  std::uniform_int_distribution<int> count(1, std::max(1, max_support));
  const int support = count(rng);
  for (int i = 0; i < support; ++i) {
    p.set_weight(Subset::of_bits(masks(rng)), random_rational(rng));
  }
  return p;
}

LinearConstraint random_constraint(Rng& rng, int n) {
  LinearConstraint c;
  std::uniform_int_distribution<int> keep(0, 2);
  for (int variable = 0; variable < n; ++variable) {
    if (keep(rng) != 0) c.coefficients[variable] = random_rational(rng);
  }
  c.rhs = random_rational(rng, /*allow_zero=*/true);
  return c;
}

RationalMatrix random_symmetric_matrix(Rng& rng, Eigen::Index dim) {
  RationalMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const Rational value = random_rational(rng, /*allow_zero=*/true);
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return m;
}

RationalMatrix random_invertible_matrix(Rng& rng, Eigen::Index dim) {
  std::uniform_int_distribution<int> entry(-3, 3);
  RationalMatrix lower = RationalMatrix::Identity(dim, dim);
  RationalMatrix upper = RationalMatrix::Identity(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      lower(i, j) = entry(rng);
      upper(j, i) = entry(rng);
    }
  }
  return lower * upper;
}

}  // namespace lasgap
