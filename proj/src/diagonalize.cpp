#include "lasgap/diagonalize.hpp"

#include <stdexcept>

#include "lasgap/zeta.hpp"

namespace lasgap {

std::vector<Subset> shifted_collection(const SubsetBasis& basis, Subset shift) {
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(basis.size()));
  for (Subset s : basis.sets()) out.push_back(s ^ shift);
  return out;
}

Diagonalization partial_diagonalize(const PseudoDistribution& p, const LinearConstraint* weight,
                                    const SubsetBasis& basis, Subset shift) {
  const int d = basis.max_size();
  Diagonalization out{shift, basis, shifted_collection(basis, shift),
                      RationalVector::Zero(basis.size()), {}, Rational(0)};

  const auto term_weight = [&](Subset set, const Rational& mass) {
    return weight ? Rational(weight->value_at(set) * mass) : mass;
  };

  // Collection members carry their weight on the diagonal; everything else
  // in the support becomes a transformed rank-one term.
  std::vector<std::pair<Subset, Rational>> outside;
  for (const auto& [set, mass] : p.weights()) {
    const Rational w = term_weight(set, mass);
    if ((set ^ shift).size() <= d) {
      out.diagonal(basis.index_of(set ^ shift)) = w;
    } else if (w != 0) {
      outside.emplace_back(set, w);
    }
  }

  if (!outside.empty()) {
    // Lemma-2 factorization of the inverse; never generic elimination.
    const RationalMatrix inverse = shifted_zeta_inverse(basis, shift);
    Rational max_entry(0);
    for (Eigen::Index j = 0; j < inverse.cols(); ++j) {
      for (Eigen::Index i = 0; i < inverse.rows(); ++i) {
        const Rational magnitude = abs(inverse(i, j));
        if (magnitude > max_entry) max_entry = magnitude;
      }
    }
    out.norm_envelope = Rational(basis.size()) * Rational(basis.size()) *
                        Rational(basis.size()) * max_entry * max_entry;
    for (auto& [set, w] : outside) {
      out.remainder.push_back({set, w, inverse * zeta_vector(set, basis)});
    }
  }
  return out;
}

RationalMatrix reconstruct(const Diagonalization& d) {
  const Eigen::Index dim = d.basis.size();
  RationalMatrix m = RationalMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) m(i, i) = d.diagonal(i);
  for (const RemainderTerm& term : d.remainder) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (term.vector(j) == 0) continue;
      for (Eigen::Index i = 0; i < dim; ++i) {
        if (term.vector(i) != 0) {
          m(i, j) += term.weight * term.vector(i) * term.vector(j);
        }
      }
    }
  }
  return m;
}

Rational weyl_lower_bound(const Diagonalization& d) {
  Rational bound = d.diagonal.size() == 0 ? Rational(0) : d.diagonal(0);
  for (Eigen::Index i = 1; i < d.diagonal.size(); ++i) {
    if (d.diagonal(i) < bound) bound = d.diagonal(i);
  }
  for (const RemainderTerm& term : d.remainder) {
    if (term.weight < 0) {
      bound += term.weight * term.vector.squaredNorm();
    }
  }
  return bound;
}

Rational rayleigh_form(const RationalVector& v, const PseudoDistribution& p,
                       const LinearConstraint& c, int t) {
  const int n = p.ground_set_size();
  const SubsetBasis basis(n, t);
  if (v.size() != basis.size()) {
    throw std::domain_error("vector dimension does not match |P_t(n)|");
  }
  if (p.max_support_size() > t + 1) {
    throw std::domain_error("support must vanish above size t + 1");
  }
  Rational total(0);
  for (const auto& [set, mass] : p.weights()) {
    const Rational w = c.value_at(set) * mass;
    if (w == 0) continue;
    if (set.size() <= t) {
      const Rational& coordinate = v(basis.index_of(set));
      total += w * coordinate * coordinate;
    } else {
      // |set| = t + 1: the transformed column has entry (-1)^{t - |I|} at
      // each subset I of the set, so the squared coefficient is the
      // alternating subset sum of v.
      Rational alternating(0);
      const std::uint64_t bits = set.bits();
      std::uint64_t sub = bits;
      while (true) {
        Subset inner = Subset::of_bits(sub);
        if (inner.size() <= t) {
          const Rational& coordinate = v(basis.index_of(inner));
          if (inner.size() % 2 == 0) {
            alternating += coordinate;
          } else {
            alternating -= coordinate;
          }
        }
        if (sub == 0) break;
        sub = (sub - 1) & bits;
      }
      total += w * alternating * alternating;
    }
  }
  return total;
}

}  // namespace lasgap
