#include "lasgap/distribution.hpp"

#include <stdexcept>

namespace lasgap {

namespace {

constexpr int kDensePowerSetCap = 24;  // 2^24 rationals is the mobius ceiling

void check_ground_set(int n) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  if (n > Subset::kMaxGroundSet) {
    throw std::length_error("ground set capacity is 64 elements");
  }
}

}  // namespace

PseudoDistribution::PseudoDistribution(int n) : n_(n) { check_ground_set(n); }

PseudoDistribution PseudoDistribution::point_mass(int n, Subset support) {
  PseudoDistribution p(n);
  p.set_weight(support, Rational(1));
  return p;
}

PseudoDistribution PseudoDistribution::from_size_profile(
    int n, const std::map<int, Rational>& weight_by_size) {
  PseudoDistribution p(n);
  int top = -1;
  for (const auto& [cardinality, weight] : weight_by_size) {
    if (cardinality < 0 || cardinality > n) {
      throw std::invalid_argument("size profile cardinality outside 0..n");
    }
    if (weight != 0) top = std::max(top, cardinality);
  }
  // Expansion capacity is bounded by the enumeration guard.
  for (Subset s : enumerate_subsets(n, std::max(top, 0))) {
    const auto it = weight_by_size.find(s.size());
    if (it != weight_by_size.end() && it->second != 0) {
      p.set_weight(s, it->second);
    }
  }
  p.size_profile_ = weight_by_size;
  return p;
}

void PseudoDistribution::set_weight(Subset set, const Rational& weight) {
  if (!set.subset_of(Subset::full(n_))) {
    throw std::domain_error("support set " + to_string(set) + " outside the ground set");
  }
  size_profile_.reset();  // manual edits invalidate the profile
  if (weight == 0) {
    weights_.erase(set);
  } else {
    weights_[set] = weight;
  }
}

Rational PseudoDistribution::weight(Subset set) const {
  const auto it = weights_.find(set);
  return it == weights_.end() ? Rational(0) : it->second;
}

Rational PseudoDistribution::total_mass() const {
  Rational mass(0);
  for (const auto& [set, weight] : weights_) mass += weight;
  return mass;
}

bool PseudoDistribution::is_normalized() const { return total_mass() == 1; }

int PseudoDistribution::max_support_size() const {
  int top = 0;
  for (const auto& [set, weight] : weights_) top = std::max(top, set.size());
  return top;
}

bool PseudoDistribution::all_weights_nonnegative() const {
  for (const auto& [set, weight] : weights_) {
    if (weight < 0) return false;
  }
  return true;
}

MomentVector::MomentVector(int n, int order) : n_(n), order_(order) {
  check_ground_set(n);
  if (order < 0) throw std::invalid_argument("moment order must be nonnegative");
}

MomentVector MomentVector::size_symmetric(int n, std::vector<Rational> value_by_size) {
  if (static_cast<int>(value_by_size.size()) != n + 1) {
    throw std::invalid_argument("size-symmetric moments need one value per cardinality 0..n");
  }
  MomentVector m(n, n);
  m.by_size_ = std::move(value_by_size);
  return m;
}

void MomentVector::set_value(Subset set, const Rational& value) {
  if (by_size_) throw std::domain_error("size-symmetric moment vector is read-only");
  if (!set.subset_of(Subset::full(n_)) || set.size() > order_) {
    throw std::domain_error("moment index " + to_string(set) + " beyond the truncation order");
  }
  values_[set] = value;
}

const Rational& MomentVector::value(Subset set) const {
  if (!set.subset_of(Subset::full(n_))) {
    throw std::domain_error("moment index " + to_string(set) + " outside the ground set");
  }
  if (by_size_) {
    return (*by_size_)[static_cast<std::size_t>(set.size())];
  }
  const auto it = values_.find(set);
  if (it == values_.end()) {
    throw std::domain_error("moment " + to_string(set) + " is not defined");
  }
  return it->second;
}

bool MomentVector::defined(Subset set) const {
  if (!set.subset_of(Subset::full(n_))) return false;
  if (by_size_) return true;
  return values_.contains(set);
}

MomentVector zeta_transform(const PseudoDistribution& p, int d) {
  if (d < 0) throw std::invalid_argument("zeta transform order must be nonnegative");
  const int n = p.ground_set_size();
  const int order = std::min(2 * d, n);
  MomentVector out(n, order);
  for (Subset set : enumerate_subsets(n, order)) {
    out.set_value(set, Rational(0));
  }
  // Distribute each support weight to all of its small subsets.
  std::vector<Rational> accum;
  for (const auto& [support, weight] : p.weights()) {
    const std::uint64_t bits = support.bits();
    std::uint64_t sub = bits;
    while (true) {
      Subset s = Subset::of_bits(sub);
      if (s.size() <= order) {
        out.set_value(s, out.value(s) + weight);
      }
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  return out;
}

PseudoDistribution mobius_transform(const MomentVector& moments) {
  const int n = moments.ground_set_size();
  if (n > kDensePowerSetCap) {
    throw std::length_error("mobius transform needs a dense power set; ground set too large");
  }
  if (moments.order() < n) {
    throw std::domain_error("mobius transform needs moments on the full power set");
  }
  const std::size_t count = std::size_t(1) << n;
  std::vector<Rational> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    table[mask] = moments.value(Subset::of_bits(mask));  // throws when incomplete
  }
  // Superset Mobius inversion, one bit direction at a time.
  for (int bit = 0; bit < n; ++bit) {
    const std::uint64_t flag = std::uint64_t(1) << bit;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (!(mask & flag)) {
        table[mask] -= table[mask | flag];
      }
    }
  }
  PseudoDistribution p(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (table[mask] != 0) {
      p.set_weight(Subset::of_bits(mask), table[mask]);
    }
  }
  return p;
}

}  // namespace lasgap
