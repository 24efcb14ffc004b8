#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lasgap/rational.hpp"

namespace lasgap {

/// Signature of a symmetric matrix: counts of positive, negative and zero
/// eigenvalues. Invariant under congruence transforms.
struct Inertia {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class PsdStatus { kPsd, kNotPsd, kInconclusive };

std::string_view to_string(PsdStatus status);

/// One elimination step of the exact factorization. A paired step is a 2x2
/// zero-diagonal block (taken only when every remaining diagonal entry is
/// zero); its value is the off-diagonal coupling and it contributes one
/// positive and one negative eigenvalue.
struct PivotStep {
  Eigen::Index step = 0;
  Rational value;
  bool paired = false;
};

/// Result of the exact symmetric elimination P A P^T = L D L^T.
struct SymmetricFactorization {
  Inertia inertia;
  std::vector<PivotStep> pivots;
  /// Present iff the matrix is not PSD: a direction x with x^T A x < 0,
  /// in the original coordinates, together with that exact value.
  std::optional<RationalVector> negative_direction;
  Rational negative_value;
};

/// Exact inertia via symmetric elimination with diagonal pivoting; 2x2
/// blocks handle the all-zero-diagonal case. PSD iff inertia.negative == 0.
/// Throws std::domain_error on asymmetric input. Leading principal minors
/// are not used anywhere: they are unsound for singular PSD matrices.
SymmetricFactorization exact_inertia(const RationalMatrix& m);

struct EigenBound {
  double lambda_min = 0;
  double residual = 0;  // |M v - lambda v|_2 for the returned direction
  double margin = 0;    // max(1e-8 * |M|_inf, residual)
  Eigen::VectorXd direction;
};

/// Smallest eigenvalue with an explicit error margin. Throws
/// std::domain_error on non-finite or asymmetric input.
EigenBound numeric_min_eigenvalue(const Eigen::MatrixXd& m);

struct PsdVerdict {
  PsdStatus status = PsdStatus::kInconclusive;
  std::string method;
  bool fast_path = false;
  std::optional<Inertia> inertia;
  std::optional<double> lambda_min;
  std::optional<double> margin;
  std::optional<RationalVector> witness;
  std::optional<Rational> witness_value;  // exact w^T M w, negative when NOT_PSD
  std::vector<std::string> notes;
};

/// Decide PSD-ness by exact factorization.
PsdVerdict certify_exact(const RationalMatrix& m);

/// Decide PSD-ness numerically with margins. A numeric NOT_PSD is reported
/// only after the eigenvector direction re-checks negative in exact
/// arithmetic against the exact matrix; otherwise the verdict degrades to
/// INCONCLUSIVE.
PsdVerdict certify_numeric(const RationalMatrix& m);

}  // namespace lasgap
