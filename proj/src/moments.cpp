#include "lasgap/moments.hpp"

#include <stdexcept>

#include "lasgap/zeta.hpp"

namespace lasgap {

namespace {

constexpr std::size_t kSupportEnumerationCap = std::size_t(1) << 21;

}  // namespace

Rational LinearConstraint::value_at(Subset set) const {
  Rational g = -rhs;
  for (const auto& [variable, coefficient] : coefficients) {
    if (set.contains(variable)) g += coefficient;
  }
  return g;
}

Rational LinearConstraint::value_at_point(const RationalVector& x) const {
  Rational g = -rhs;
  for (const auto& [variable, coefficient] : coefficients) {
    if (variable < 0 || variable >= x.size()) {
      throw std::domain_error("constraint variable outside the point's dimension");
    }
    g += coefficient * x(variable);
  }
  return g;
}

MomentVector symmetric_moments(int n, int smax, const Rational& alpha) {
  if (smax < 0 || smax > n) throw std::invalid_argument("smax must lie in 0..n");
  std::map<int, Rational> profile;
  profile[smax] = alpha;
  // Uniform up to smax == alpha on each size class 0..smax.
  for (int s = 0; s < smax; ++s) profile[s] = alpha;
  return moments_from_size_profile(n, profile);
}

MomentVector moments_from_size_profile(int n, const std::map<int, Rational>& weight_by_size) {
  std::vector<Rational> by_size(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int u = 0; u <= n; ++u) {
    Rational total(0);
    for (const auto& [s, weight] : weight_by_size) {
      if (s < 0 || s > n) throw std::invalid_argument("size profile cardinality outside 0..n");
      if (s >= u) total += weight * Rational(binomial(n - u, s - u));
    }
    by_size[static_cast<std::size_t>(u)] = total;
  }
  return MomentVector::size_symmetric(n, std::move(by_size));
}

MomentVector moments_of(const PseudoDistribution& p, int d) {
  if (p.size_profile()) {
    return moments_from_size_profile(p.ground_set_size(), *p.size_profile());
  }
  return zeta_transform(p, d);
}

RationalMatrix variable_moment_matrix(const MomentVector& moments, const SubsetBasis& basis) {
  const Eigen::Index dim = basis.size();
  RationalMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      const Rational& value = moments.value(basis[i] | basis[j]);
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return m;
}

RationalMatrix constraint_moment_matrix(const MomentVector& moments, const LinearConstraint& c,
                                        const SubsetBasis& basis) {
  const Eigen::Index dim = basis.size();
  RationalMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) {
      const Subset joint = basis[i] | basis[j];
      Rational entry = -c.rhs * moments.value(joint);
      for (const auto& [variable, coefficient] : c.coefficients) {
        entry += coefficient * moments.value(joint | Subset::single(variable));
      }
      m(i, j) = entry;
      m(j, i) = entry;
    }
  }
  return m;
}

PseudoDistribution constraint_pushforward(const PseudoDistribution& p, const LinearConstraint& c) {
  PseudoDistribution z(p.ground_set_size());
  for (const auto& [set, weight] : p.weights()) {
    z.set_weight(set, c.value_at(set) * weight);
  }
  return z;
}

RationalMatrix zeta_sum_matrix(const PseudoDistribution& p, const LinearConstraint* weight,
                               const SubsetBasis& basis) {
  if (p.weights().size() > kSupportEnumerationCap) {
    throw std::length_error("pseudo-distribution support too large for rank-one assembly");
  }
  const Eigen::Index dim = basis.size();
  RationalMatrix m = RationalMatrix::Zero(dim, dim);
  for (const auto& [set, mass] : p.weights()) {
    const Rational w = weight ? Rational(weight->value_at(set) * mass) : mass;
    if (w == 0) continue;
    const RationalVector z = zeta_vector(set, basis);
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (z(j) == 0) continue;
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (z(i) != 0) m(i, j) += w;
      }
    }
  }
  return m;
}

}  // namespace lasgap
