#pragma once

#include <map>
#include <optional>

#include "lasgap/diagonalize.hpp"
#include "lasgap/verify.hpp"

namespace lasgap {

/// Multilinear polynomial over 0/1 variables, one coefficient per monomial
/// prod_{i in I} x_i. Evaluation at the indicator point of a set sums the
/// coefficients of the monomials contained in it.
class MultilinearPolynomial {
 public:
  MultilinearPolynomial(int n, std::map<Subset, Rational, CanonicalLess> coefficients);

  int ground_set_size() const { return n_; }
  const std::map<Subset, Rational, CanonicalLess>& coefficients() const { return coefficients_; }
  int degree() const;

  Rational value_at(Subset point) const;

  /// Values at every 0/1 point, indexed by bit mask; subset-sum transform
  /// over the coefficient table, n <= 24.
  std::vector<Rational> values_on_hypercube() const;

 private:
  int n_ = 0;
  std::map<Subset, Rational, CanonicalLess> coefficients_;
};

/// The degree-k objective that counts the k-element subsets hit by the
/// chosen set: coefficient C(n-|I|, k-|I|) * (-1)^{|I|+1} on each monomial
/// with 1 <= |I| <= k, no constant term. Evaluates to
/// #{K : |K| = k, K intersects I} at the indicator of I, so the maximum over
/// 0/1 points is C(n, k).
MultilinearPolynomial hitting_objective(int n, int k);

/// Exhaustive maximum of f over all 0/1 points; capped at n = 20.
Rational integral_optimum(const MultilinearPolynomial& f);

/// Top-heavy solution: weight alpha = (1 + epsilon) / (number of sets of
/// size >= n-k+1) on each such set and -epsilon on the empty set. Total mass
/// is exactly one.
PseudoDistribution polyopt_certificate(int n, int k, const Rational& epsilon);

/// Expected objective value under a pseudo-distribution: the support sum of
/// f(x_I) y_I.
Rational pseudo_objective(const PseudoDistribution& p, const MultilinearPolynomial& f);

struct EpsilonRung {
  Rational epsilon;
  MassCheck condition1;
  PsdVerdict condition2;   // moment matrix over P_{k-1}(n)
  Rational weyl_bound;     // via the full-shift diagonal split
  Feasibility overall = Feasibility::kInconclusive;
};

struct PolyoptVerification {
  int n = 0;
  int degree = 0;             // k
  int level = 0;              // k - 1
  Rational optimum;           // brute-force integral maximum, C(n, k)
  std::vector<EpsilonRung> rungs;
  std::optional<Rational> passing_epsilon;  // largest epsilon that verified
  Rational pseudo_value;      // (1 + epsilon) * C(n, k) at the passing rung
  Rational margin;            // epsilon * C(n, k): strict super-optimality
  Feasibility overall = Feasibility::kInconclusive;
  std::string note;
};

/// Walks the epsilon ladder downward (largest first) until the top-heavy
/// solution passes the level-(k-1) conditions: unit mass and a PSD moment
/// matrix, decided by exact factorization and cross-checked against the
/// diagonal-plus-rank-one split's eigenvalue bound.
PolyoptVerification verify_polyopt(int n, int k, const std::vector<Rational>& epsilon_ladder,
                                   ArithmeticMode mode);

/// Default epsilon ladder 2^-4, 2^-6, ..., 2^-40.
std::vector<Rational> default_epsilon_ladder();

}  // namespace lasgap
