#include "lasgap/zeta.hpp"

#include <ostream>

namespace lasgap {

RationalVector zeta_vector(Subset set, const SubsetBasis& basis) {
  RationalVector v(basis.size());
  for (Eigen::Index j = 0; j < basis.size(); ++j) {
    v(j) = basis[j].subset_of(set) ? 1 : 0;
  }
  return v;
}

RationalMatrix zeta_matrix(const SubsetBasis& basis) {
  return shifted_zeta_matrix(basis, Subset());
}

RationalMatrix zeta_inverse(const SubsetBasis& basis) {
  const Eigen::Index dim = basis.size();
  RationalMatrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (basis[i].subset_of(basis[j])) {
        m(i, j) = ((basis[j] - basis[i]).size() % 2 == 0) ? 1 : -1;
      } else {
        m(i, j) = 0;
      }
    }
  }
  return m;
}

RationalMatrix shifted_zeta_matrix(const SubsetBasis& basis, Subset shift) {
  const Eigen::Index dim = basis.size();
  RationalMatrix m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Subset recentered = basis[j] ^ shift;
    for (Eigen::Index i = 0; i < dim; ++i) {
      m(i, j) = basis[i].subset_of(recentered) ? 1 : 0;
    }
  }
  return m;
}

RationalMatrix companion_matrix(const SubsetBasis& basis, Subset shift) {
  const Eigen::Index dim = basis.size();
  RationalMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Subset row = basis[i];
    const Subset mandatory = row - shift;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const Subset col = basis[k];
      if (mandatory.subset_of(col) && col.subset_of(row)) {
        m(i, k) = ((col & shift).size() % 2 == 0) ? 1 : -1;
      } else {
        m(i, k) = 0;
      }
    }
  }
  return m;
}

RationalMatrix shifted_zeta_inverse(const SubsetBasis& basis, Subset shift) {
  return zeta_inverse(basis) * companion_matrix(basis, shift);
}

Rational shifted_zeta_inverse_entry(Subset row, Subset col, Subset shift, int max_size) {
  if (!(row - shift).subset_of(col)) return Rational(0);
  const Subset joint = row | col;
  const int sign_exponent = (col & shift).size() + (col - row).size();
  const Rational tail = alt_binomial_sum((shift - joint).size(), max_size - joint.size());
  return (sign_exponent % 2 == 0) ? tail : -tail;
}

void write_matrix_csv(std::ostream& out, const RationalMatrix& m, const SubsetBasis& rows,
                      const SubsetBasis& cols) {
  out << "row,col,value\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << '"' << to_string(rows[i]) << "\",\"" << to_string(cols[j]) << "\","
          << to_string(m(i, j)) << '\n';
    }
  }
}

}  // namespace lasgap
