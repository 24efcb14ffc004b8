#pragma once

#include <iosfwd>

#include "lasgap/subset.hpp"

namespace lasgap {

/// 0/1 column over the basis: entry J is 1 iff J is contained in I.
RationalVector zeta_vector(Subset set, const SubsetBasis& basis);

/// Columns are zeta_vector(J) for J in the basis. Upper triangular with unit
/// diagonal in the canonical order.
RationalMatrix zeta_matrix(const SubsetBasis& basis);

/// Inverse of zeta_matrix, built entrywise: (-1)^{|J \ I|} when I is a
/// subset of J, zero otherwise.
RationalMatrix zeta_inverse(const SubsetBasis& basis);

/// Shifted zeta matrix: entry (I, J) is 1 iff I is contained in the
/// symmetric difference of J and the shift. The shift recenters the columns:
/// column J equals zeta_vector(J xor shift). Shift = {} recovers
/// zeta_matrix.
RationalMatrix shifted_zeta_matrix(const SubsetBasis& basis, Subset shift);

/// Companion of the shifted zeta matrix: entry (I, K) is (-1)^{|K & shift|}
/// when I \ shift is contained in K and K in I, zero otherwise. Satisfies
/// companion * shifted_zeta == zeta_matrix, which is how the inverse below
/// is assembled. Shift = {} gives the identity.
RationalMatrix companion_matrix(const SubsetBasis& basis, Subset shift);

/// Inverse of the shifted zeta matrix via the factorization
/// zeta_inverse * companion. No generic elimination is involved.
RationalMatrix shifted_zeta_inverse(const SubsetBasis& basis, Subset shift);

/// Closed form for one entry of the shifted zeta inverse:
///   (-1)^{|col & shift| + |col \ row|}
///     * alt_binomial_sum(|shift \ (row | col)|, max_size - |row | col|)
/// when row \ shift is contained in col, zero otherwise. Must agree with
/// shifted_zeta_inverse entrywise.
Rational shifted_zeta_inverse_entry(Subset row, Subset col, Subset shift, int max_size);

/// Debugging dump: one line per entry as "row,col,value" with 1-based set
/// labels and exact rational values.
void write_matrix_csv(std::ostream& out, const RationalMatrix& m, const SubsetBasis& rows,
                      const SubsetBasis& cols);

}  // namespace lasgap
