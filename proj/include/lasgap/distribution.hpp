#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lasgap/subset.hpp"

namespace lasgap {

/// Signed weights y_I over the subsets of {0..n-1}: a relaxed indicator of a
/// 0/1 solution. Sparse by construction; missing entries read as zero. When
/// the weights depend on |I| only, a size profile is kept alongside the
/// expansion so that moments can be computed in closed form.
class PseudoDistribution {
 public:
  explicit PseudoDistribution(int n);

  static PseudoDistribution point_mass(int n, Subset support);

  /// Expands weight_by_size into the sparse form (weight w on every subset
  /// of a listed cardinality) and remembers the profile.
  static PseudoDistribution from_size_profile(int n, const std::map<int, Rational>& weight_by_size);

  int ground_set_size() const { return n_; }

  void set_weight(Subset set, const Rational& weight);
  Rational weight(Subset set) const;
  const std::map<Subset, Rational, CanonicalLess>& weights() const { return weights_; }
  const std::optional<std::map<int, Rational>>& size_profile() const { return size_profile_; }

  Rational total_mass() const;
  bool is_normalized() const;
  int max_support_size() const;
  bool all_weights_nonnegative() const;

 private:
  int n_ = 0;
  std::map<Subset, Rational, CanonicalLess> weights_;
  std::optional<std::map<int, Rational>> size_profile_;
};

/// Standard moments y_I for |I| <= order, obtained from a pseudo-distribution
/// by superset summation. Backed either by an explicit table or, for
/// size-symmetric solutions, by one value per cardinality (in which case
/// every order up to n is available).
class MomentVector {
 public:
  MomentVector(int n, int order);

  /// value_by_size[s] is the moment of every set of cardinality s; must have
  /// n + 1 entries.
  static MomentVector size_symmetric(int n, std::vector<Rational> value_by_size);

  int ground_set_size() const { return n_; }
  int order() const { return order_; }
  bool size_symmetric_form() const { return by_size_.has_value(); }

  void set_value(Subset set, const Rational& value);

  /// Throws std::domain_error for sets beyond the truncation order or absent
  /// from an explicit table.
  const Rational& value(Subset set) const;
  bool defined(Subset set) const;

 private:
  int n_ = 0;
  int order_ = 0;
  std::map<Subset, Rational, CanonicalLess> values_;
  std::optional<std::vector<Rational>> by_size_;
};

/// Superset-sum transform: y_I = sum of p's weights over all supersets of I,
/// for every |I| <= 2d.
MomentVector zeta_transform(const PseudoDistribution& p, int d);

/// Inverse of the superset-sum transform. Requires moments on the full power
/// set (order >= n); throws std::domain_error when the table is incomplete.
PseudoDistribution mobius_transform(const MomentVector& moments);

}  // namespace lasgap
