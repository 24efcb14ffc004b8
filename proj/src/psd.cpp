#include "lasgap/psd.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <utility>

namespace lasgap {

namespace {

void check_symmetric(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("matrix is not square");
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) {
      if (m(i, j) != m(j, i)) throw std::domain_error("matrix is not symmetric");
    }
  }
}

// Swap rows and columns a <-> b of the full working matrix. The factored
// part stores L in the strict lower triangle, so a full symmetric swap
// relabels both the active block and the already-computed factors.
void symmetric_swap(RationalMatrix& w, std::vector<Eigen::Index>& perm, Eigen::Index a,
                    Eigen::Index b) {
  if (a == b) return;
  w.row(a).swap(w.row(b));
  w.col(a).swap(w.col(b));
  std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
}

// Solve L^T y = e for unit lower triangular L stored in the strict lower
// triangle of w, then undo the permutation.
RationalVector backsolve_direction(const RationalMatrix& w, const std::vector<Eigen::Index>& perm,
                                   RationalVector e) {
  const Eigen::Index dim = w.rows();
  for (Eigen::Index i = dim - 1; i >= 0; --i) {
    Rational y = e(i);
    for (Eigen::Index r = i + 1; r < dim; ++r) {
      if (w(r, i) != 0 && e(r) != 0) y -= w(r, i) * e(r);
    }
    e(i) = y;
  }
  RationalVector x = RationalVector::Zero(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    x(perm[static_cast<std::size_t>(i)]) = e(i);
  }
  return x;
}

Rational quadratic_form(const RationalMatrix& m, const RationalVector& x) {
  Rational total(0);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (x(j) == 0) continue;
    Rational column(0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (x(i) != 0) column += x(i) * m(i, j);
    }
    total += column * x(j);
  }
  return total;
}

}  // namespace

std::string_view to_string(PsdStatus status) {
  switch (status) {
    case PsdStatus::kPsd:
      return "PSD";
    case PsdStatus::kNotPsd:
      return "NOT_PSD";
    case PsdStatus::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

SymmetricFactorization exact_inertia(const RationalMatrix& m) {
  check_symmetric(m);
  const Eigen::Index dim = m.rows();
  RationalMatrix w = m;
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) perm[static_cast<std::size_t>(i)] = i;

  SymmetricFactorization out;
  // First negative contribution found, kept for the witness back-solve:
  // elimination step plus, for a paired pivot, the in-block direction.
  Eigen::Index witness_step = -1;
  bool witness_paired = false;
  Rational witness_block_value;

  Eigen::Index k = 0;
  while (k < dim) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index p = k; p < dim; ++p) {
      if (w(p, p) != 0) {
        pivot_row = p;
        break;
      }
    }

    if (pivot_row >= 0) {
      symmetric_swap(w, perm, k, pivot_row);
      const Rational d = w(k, k);
      if (d > 0) {
        out.inertia.positive += 1;
      } else {
        out.inertia.negative += 1;
        if (witness_step < 0) {
          witness_step = k;
          witness_paired = false;
        }
      }
      out.pivots.push_back({k, d, false});
      const RationalVector column = w.col(k);
      for (Eigen::Index r = k + 1; r < dim; ++r) {
        if (column(r) == 0) continue;
        const Rational l = column(r) / d;
        for (Eigen::Index c = k + 1; c <= r; ++c) {
          if (column(c) != 0) {
            w(r, c) -= l * column(c);
            if (c != r) w(c, r) = w(r, c);
          }
        }
        w(r, k) = l;
      }
      ++k;
      continue;
    }

    // Every remaining diagonal entry is zero. Locate an off-diagonal
    // coupling; if none, the tail is a zero block.
    Eigen::Index bi = -1;
    Eigen::Index bj = -1;
    for (Eigen::Index j = k + 1; j < dim && bi < 0; ++j) {
      for (Eigen::Index i = k; i < j; ++i) {
        if (w(i, j) != 0) {
          bi = i;
          bj = j;
          break;
        }
      }
    }
    if (bi < 0) {
      out.inertia.zero += dim - k;
      break;
    }

    symmetric_swap(w, perm, k, bi);
    symmetric_swap(w, perm, k + 1, bj);
    const Rational a = w(k + 1, k);
    // Block [[0, a], [a, 0]]: one positive and one negative eigenvalue.
    out.inertia.positive += 1;
    out.inertia.negative += 1;
    out.pivots.push_back({k, a, true});
    if (witness_step < 0) {
      witness_step = k;
      witness_paired = true;
      witness_block_value = a;
    }
    const RationalVector first = w.col(k);
    const RationalVector second = w.col(k + 1);
    for (Eigen::Index r = k + 2; r < dim; ++r) {
      if (first(r) == 0 && second(r) == 0) continue;
      for (Eigen::Index c = k + 2; c <= r; ++c) {
        const Rational update = (first(r) * second(c) + second(r) * first(c)) / a;
        if (update != 0) {
          w(r, c) -= update;
          if (c != r) w(c, r) = w(r, c);
        }
      }
      w(r, k) = second(r) / a;
      w(r, k + 1) = first(r) / a;
    }
    // No coupling inside the block: the unit L has a zero there.
    w(k + 1, k) = 0;
    k += 2;
  }

  if (witness_step >= 0) {
    RationalVector e = RationalVector::Zero(dim);
    e(witness_step) = 1;
    if (witness_paired) {
      e(witness_step + 1) = witness_block_value > 0 ? -1 : 1;
    }
    RationalVector direction = backsolve_direction(w, perm, std::move(e));
    out.negative_value = quadratic_form(m, direction);
    if (out.negative_value >= 0) {
      throw std::logic_error("internal error: witness direction is not negative");
    }
    out.negative_direction = std::move(direction);
  }
  return out;
}

EigenBound numeric_min_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::domain_error("matrix is not square");
  if (!m.allFinite()) throw std::domain_error("matrix has non-finite entries");
  if (m != m.transpose()) throw std::domain_error("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue iteration failed to converge");
  }
  EigenBound out;
  out.lambda_min = solver.eigenvalues()(0);
  out.direction = solver.eigenvectors().col(0);
  out.residual = (m * out.direction - out.lambda_min * out.direction).norm();
  const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
  out.margin = std::max(1e-8 * scale, out.residual);
  return out;
}

PsdVerdict certify_exact(const RationalMatrix& m) {
  PsdVerdict verdict;
  verdict.method = "exact-factorization";
  SymmetricFactorization fact = exact_inertia(m);
  verdict.inertia = fact.inertia;
  if (fact.inertia.negative == 0) {
    verdict.status = PsdStatus::kPsd;
  } else {
    verdict.status = PsdStatus::kNotPsd;
    verdict.witness = std::move(fact.negative_direction);
    verdict.witness_value = std::move(fact.negative_value);
  }
  return verdict;
}

PsdVerdict certify_numeric(const RationalMatrix& m) {
  PsdVerdict verdict;
  verdict.method = "numeric-eigenvalue";
  const EigenBound bound = numeric_min_eigenvalue(to_double_matrix(m));
  verdict.lambda_min = bound.lambda_min;
  verdict.margin = bound.margin;
  if (bound.lambda_min >= bound.margin) {
    verdict.status = PsdStatus::kPsd;
    return verdict;
  }
  if (bound.lambda_min <= -bound.margin) {
    // A float-path rejection is only reported after the direction re-checks
    // negative exactly.
    RationalVector direction = to_rational_vector(bound.direction);
    Rational value = quadratic_form(m, direction);
    if (value < 0) {
      verdict.status = PsdStatus::kNotPsd;
      verdict.witness = std::move(direction);
      verdict.witness_value = std::move(value);
      return verdict;
    }
    verdict.status = PsdStatus::kInconclusive;
    verdict.notes.push_back("numeric rejection failed exact re-confirmation");
    return verdict;
  }
  verdict.status = PsdStatus::kInconclusive;
  return verdict;
}

}  // namespace lasgap
