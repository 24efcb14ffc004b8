#pragma once

#include <map>

#include "lasgap/distribution.hpp"

namespace lasgap {

/// Linear covering constraint g(x) = sum_i A_i x_i - b >= 0. Constraints of
/// the opposite sense must be negated before ingestion.
struct LinearConstraint {
  std::map<int, Rational> coefficients;  // variable index -> A_i
  Rational rhs;                          // b

  /// g evaluated at the 0/1 point of a subset: sum of A_i over i in the set,
  /// minus b.
  Rational value_at(Subset set) const;

  /// g evaluated at a fractional point.
  Rational value_at_point(const RationalVector& x) const;
};

/// Closed-form moments of the uniform weight alpha on every subset of size
/// at most smax: y_I = alpha * sum_{j=|I|..smax} C(n-|I|, j-|I|), one value
/// per cardinality.
MomentVector symmetric_moments(int n, int smax, const Rational& alpha);

/// Closed-form moments of any size-symmetric weight profile:
/// y_I = sum_s profile(s) * C(n-|I|, s-|I|).
MomentVector moments_from_size_profile(int n, const std::map<int, Rational>& weight_by_size);

/// Moments of p: closed form when a size profile is available, superset
/// summation otherwise. Produces every order up to min(2d, n).
MomentVector moments_of(const PseudoDistribution& p, int d);

/// Moment matrix of the variables over the given basis: entry (I, J) is
/// y_{I union J}. Requires moments up to order 2 * basis.max_size().
RationalMatrix variable_moment_matrix(const MomentVector& moments, const SubsetBasis& basis);

/// Moment matrix of a constraint over the given basis: entry (I, J) is
/// sum_i A_i y_{I u J u {i}} - b y_{I u J}. Requires moments up to order
/// 2 * basis.max_size() + 1.
RationalMatrix constraint_moment_matrix(const MomentVector& moments, const LinearConstraint& c,
                                        const SubsetBasis& basis);

/// Pushes a constraint through a pseudo-distribution: the weight of I
/// becomes g(x_I) * y_I. Moments of the result reproduce the constraint
/// moment entries.
PseudoDistribution constraint_pushforward(const PseudoDistribution& p, const LinearConstraint& c);

/// Brute-force assembly as a weighted sum of rank-one zeta outer products:
/// sum_I w_I Z_I Z_I^T with w_I = y_I, or g(x_I) y_I when a weight
/// constraint is supplied. Enumerates the support; equals the moment-form
/// matrices exactly. This is the oracle path, not the scaling one.
RationalMatrix zeta_sum_matrix(const PseudoDistribution& p, const LinearConstraint* weight,
                               const SubsetBasis& basis);

}  // namespace lasgap
