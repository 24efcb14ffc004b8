#pragma once

#include <random>

#include "lasgap/moments.hpp"

namespace lasgap {

using Rng = std::mt19937_64;

/// Small random rational with numerator in [-9, 9] and denominator in
/// [1, 4]; never zero unless allow_zero.
Rational random_rational(Rng& rng, bool allow_zero = false);

/// Sparse signed pseudo-distribution on a ground set of size n with at most
/// max_support nonzero weights.
PseudoDistribution random_sparse_distribution(Rng& rng, int n, int max_support);

/// Random linear constraint over n variables with small rational data.
LinearConstraint random_constraint(Rng& rng, int n);

/// Random symmetric matrix with small rational entries.
RationalMatrix random_symmetric_matrix(Rng& rng, Eigen::Index dim);

/// Random invertible matrix, assembled as a product of unit triangular
/// factors with small integer entries so invertibility is structural.
RationalMatrix random_invertible_matrix(Rng& rng, Eigen::Index dim);

}  // namespace lasgap
