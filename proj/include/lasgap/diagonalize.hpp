#pragma once

#include <vector>

#include "lasgap/moments.hpp"

namespace lasgap {

/// A rank-one leftover of the partial diagonalization: the support set lying
/// outside the chosen collection, its signed weight, and the transformed
/// column (shifted zeta inverse times the set's zeta vector).
struct RemainderTerm {
  Subset set;
  Rational weight;
  RationalVector vector;
};

/// Congruence split of sum_I w_I Z_I Z_I^T over the collection
/// C = { I xor shift : I in P_d(n) }: a diagonal part carrying the weights of
/// the collection members, plus transformed rank-one terms for the support
/// outside C. Same inertia as the original matrix.
struct Diagonalization {
  Subset shift;
  SubsetBasis basis;               // P_d(n); row space of the transformed terms
  std::vector<Subset> collection;  // basis[i] xor shift, in basis order
  RationalVector diagonal;         // weight of collection[i]
  std::vector<RemainderTerm> remainder;
  /// Worst-case bound |P_d(n)|^3 * (max inverse entry)^2 on a remainder
  /// term's squared norm, reported for comparison with the exact norms.
  Rational norm_envelope;
};

/// The collection { I xor shift : I in P_d(n) } in basis order. Always of
/// size |P_d(n)| since xor with a fixed set is a bijection.
std::vector<Subset> shifted_collection(const SubsetBasis& basis, Subset shift);

/// Partially diagonalizes the weighted rank-one sum for p (weights y_I, or
/// g(x_I) y_I when a constraint is supplied) over the shifted collection.
Diagonalization partial_diagonalize(const PseudoDistribution& p, const LinearConstraint* weight,
                                    const SubsetBasis& basis, Subset shift);

/// Reassembles diagonal + sum of weighted rank-one remainder terms; congruent
/// to the original matrix (oracle/testing path).
RationalMatrix reconstruct(const Diagonalization& d);

/// Eigenvalue lower bound for the split: min diagonal entry plus the sum,
/// over remainder terms of negative weight, of weight times the exact
/// squared norm of the transformed vector. Nonnegative bound certifies PSD
/// without any factorization.
Rational weyl_lower_bound(const Diagonalization& d);

/// Quadratic form of the diagonal-plus-rank-one split with the untransformed
/// collection P_t(n):
///   sum_{|I| <= t} g(x_I) y_I v_I^2
///     + sum_{|J| = t+1} g(x_J) y_J (sum_{I subset J, |I| <= t} (-1)^{|I|} v_I)^2.
/// Requires the support of p to vanish above size t + 1; equals
/// v^T reconstruct(...) v for shift = {} exactly.
Rational rayleigh_form(const RationalVector& v, const PseudoDistribution& p,
                       const LinearConstraint& c, int t);

}  // namespace lasgap
