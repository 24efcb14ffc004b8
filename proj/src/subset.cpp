#include "lasgap/subset.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lasgap {

namespace {

// Enumeration is meant for desk-scale index sets; anything bigger than this
// signals a misuse of the dense code paths.
constexpr std::size_t kEnumerationCapacity = std::size_t(1) << 24;

void check_ground_set(int n) {
  if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
  if (n > Subset::kMaxGroundSet) {
    throw std::length_error("ground set capacity is 64 elements");
  }
}

}  // namespace

Subset Subset::of(std::initializer_list<int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSet) {
      throw std::length_error("element outside the 64-element capacity");
    }
    bits |= std::uint64_t(1) << e;
  }
  return Subset(bits);
}

Subset Subset::full(int n) {
  check_ground_set(n);
  if (n == 0) return Subset();
  return Subset(~std::uint64_t(0) >> (kMaxGroundSet - n));
}

Subset Subset::single(int element) {
  if (element < 0 || element >= kMaxGroundSet) {
    throw std::length_error("element outside the 64-element capacity");
  }
  return Subset(std::uint64_t(1) << element);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t rest = bits_;
  while (rest != 0) {
    const int e = std::countr_zero(rest);
    out.push_back(e);
    rest &= rest - 1;
  }
  return out;
}

std::string to_string(Subset s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out << ',';
    out << (e + 1);  // 1-based labels in all human/JSON surfaces
    first = false;
  }
  out << '}';
  return out.str();
}

std::ostream& operator<<(std::ostream& out, Subset s) { return out << to_string(s); }

Integer binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer subset_count(int n, int max_size) {
  Integer total(0);
  for (int s = 0; s <= max_size; ++s) {
    total += binomial(n, s);
  }
  return total;
}

std::vector<Subset> enumerate_subsets(int n, int max_size) {
  check_ground_set(n);
  if (max_size < 0) throw std::invalid_argument("max subset size must be nonnegative");
  const Integer total = subset_count(n, max_size);
  if (total > kEnumerationCapacity) {
    throw std::length_error("requested subset family is too large to enumerate");
  }
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(total.get_ui()));
  out.push_back(Subset());
  const std::uint64_t limit = Subset::full(n).bits();
  for (int s = 1; s <= max_size && s <= n; ++s) {
    // Masks of popcount s in increasing numeric order = colex order.
    std::uint64_t mask = (s == Subset::kMaxGroundSet) ? ~std::uint64_t(0)
                                                      : (std::uint64_t(1) << s) - 1;
    while (true) {
      out.push_back(Subset::of_bits(mask));
      // Gosper's hack: next mask with the same popcount.
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t carry = mask + low;
      if (carry < mask || carry > limit) break;  // wrapped or left the ground set
      const std::uint64_t next = (((mask ^ carry) >> 2) / low) | carry;
      if (next > limit) break;
      mask = next;
    }
  }
  return out;
}

std::size_t subset_rank(Subset s, int n) {
  check_ground_set(n);
  if (!s.subset_of(Subset::full(n))) {
    throw std::domain_error("subset has elements outside the ground set");
  }
  Integer rank = subset_count(n, s.size() - 1);
  int position = 1;
  for (int e : s.elements()) {
    rank += binomial(e, position);
    ++position;
  }
  if (rank > kEnumerationCapacity) {
    throw std::length_error("subset rank exceeds enumeration capacity");
  }
  return static_cast<std::size_t>(rank.get_ui());
}

Rational alt_binomial_sum(int m, int r) {
  if (r < 0) return Rational(0);
  Integer total(0);
  const int top = std::min(m, r);
  for (int i = 0; i <= top; ++i) {
    if (i % 2 == 0) {
      total += binomial(m, i);
    } else {
      total -= binomial(m, i);
    }
  }
  return Rational(total);
}

SubsetBasis::SubsetBasis(int n, int max_size)
    : n_(n), max_size_(max_size), sets_(enumerate_subsets(n, max_size)) {}

bool SubsetBasis::contains(Subset s) const {
  return s.size() <= max_size_ && s.subset_of(Subset::full(n_));
}

Eigen::Index SubsetBasis::index_of(Subset s) const {
  if (!contains(s)) {
    throw std::domain_error("subset " + to_string(s) + " is not in the basis");
  }
  return static_cast<Eigen::Index>(subset_rank(s, n_));
}

}  // namespace lasgap
