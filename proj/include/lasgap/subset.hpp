#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "lasgap/rational.hpp"

namespace lasgap {

/// A subset of the ground set {0, ..., n-1}, n <= 64, stored as a bit mask.
/// Value type: cheap to copy, totally ordered by the canonical order below.
class Subset {
 public:
  static constexpr int kMaxGroundSet = 64;

  constexpr Subset() = default;

  static constexpr Subset of_bits(std::uint64_t bits) { return Subset(bits); }
  static Subset of(std::initializer_list<int> elements);
  static Subset full(int n);
  static Subset single(int element);

  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int element) const { return (bits_ >> element) & 1u; }
  bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  /// Elements in increasing order (0-based).
  std::vector<int> elements() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }

 private:
  explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, ties broken colexicographically. On bit
/// masks colex coincides with numeric order, so this is (popcount, bits).
inline bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

struct CanonicalLess {
  bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

/// "{1,3}" with 1-based element labels; "{}" for the empty set.
std::string to_string(Subset s);
std::ostream& operator<<(std::ostream& out, Subset s);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(int n, int k);

/// |P_d(n)| = sum of C(n, s) for s = 0..d.
Integer subset_count(int n, int max_size);

/// All subsets of {0..n-1} with at most max_size elements, in canonical
/// order. Throws std::length_error when n > 64 or the result would exceed
/// the enumeration capacity, std::invalid_argument when n or max_size is
/// negative.
std::vector<Subset> enumerate_subsets(int n, int max_size);

/// Position of s in enumerate_subsets(n, d) for any d >= |s|. Inverse of
/// enumeration: enumerate_subsets(n, d)[subset_rank(s, n)] == s.
std::size_t subset_rank(Subset s, int n);

/// Alternating partial sum of a binomial row: sum_{i=0..r} (-1)^i C(m, i).
/// Zero when r < 0; one when m == 0 and r >= 0.
Rational alt_binomial_sum(int m, int r);

/// The index set P_d(n) in canonical order, with O(|s|) rank lookup.
/// Immutable after construction; rows/columns of every matrix in this
/// library are indexed by such a basis.
class SubsetBasis {
 public:
  SubsetBasis(int n, int max_size);

  int ground_set_size() const { return n_; }
  int max_size() const { return max_size_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(sets_.size()); }
  Subset operator[](Eigen::Index idx) const { return sets_[static_cast<std::size_t>(idx)]; }
  const std::vector<Subset>& sets() const { return sets_; }

  bool contains(Subset s) const;
  /// Throws std::domain_error when s is not a member of the basis.
  Eigen::Index index_of(Subset s) const;

 private:
  int n_;
  int max_size_;
  std::vector<Subset> sets_;
};

}  // namespace lasgap
