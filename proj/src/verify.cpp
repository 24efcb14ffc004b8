#include "lasgap/verify.hpp"

#include <stdexcept>
#include <utility>

#include "lasgap/zeta.hpp"

namespace lasgap {

namespace {

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

PsdVerdict mode_check(const RationalMatrix& m, ArithmeticMode mode) {
  return mode == ArithmeticMode::kExact ? certify_exact(m) : certify_numeric(m);
}

// Attach the informational factorization or eigenvalue data to a verdict
// that is already decided by a sound fast path. A numeric rejection that
// survives exact confirmation would contradict the fast path and indicates
// a bug, not a verdict change.
void attach_informational_check(PsdVerdict& verdict, const RationalMatrix& m,
                                const VerifyOptions& options) {
  if (options.mode == ArithmeticMode::kExact) {
    if (m.rows() > options.exact_report_cap) return;
    const PsdVerdict checked = certify_exact(m);
    verdict.inertia = checked.inertia;
    if (checked.status != verdict.status) {
      throw std::logic_error("fast path contradicts exact factorization");
    }
  } else {
    const PsdVerdict checked = certify_numeric(m);
    verdict.lambda_min = checked.lambda_min;
    verdict.margin = checked.margin;
    if (checked.status == PsdStatus::kNotPsd && verdict.status == PsdStatus::kPsd) {
      throw std::logic_error("fast path contradicts confirmed numeric rejection");
    }
    if (checked.status == PsdStatus::kInconclusive && !checked.notes.empty()) {
      verdict.notes.insert(verdict.notes.end(), checked.notes.begin(), checked.notes.end());
    }
  }
}

// Weighted support of a (possibly constraint-pushed) pseudo-distribution.
std::vector<std::pair<Subset, Rational>> weighted_support(const PseudoDistribution& p,
                                                          const LinearConstraint* weight) {
  std::vector<std::pair<Subset, Rational>> out;
  out.reserve(p.weights().size());
  for (const auto& [set, mass] : p.weights()) {
    out.emplace_back(set, weight ? Rational(weight->value_at(set) * mass) : mass);
  }
  return out;
}

// Verdict for sum w_I Z_I Z_I^T over the basis P_d(n), exploiting the
// support structure before any factorization is attempted:
//  - all weights nonnegative: a sum of PSD rank-one terms, hence PSD;
//  - support inside P_d(n): congruent to diag(w), so a negative weight is a
//    certified rejection with witness row of the inverse zeta matrix.
std::optional<PsdVerdict> support_fast_path(
    const std::vector<std::pair<Subset, Rational>>& support, const SubsetBasis& basis,
    const RationalMatrix* matrix_for_witness) {
  bool nonnegative = true;
  int max_support = 0;
  for (const auto& [set, w] : support) {
    if (w < 0) nonnegative = false;
    if (w != 0) max_support = std::max(max_support, set.size());
  }
  if (nonnegative) {
    PsdVerdict verdict;
    verdict.status = PsdStatus::kPsd;
    verdict.fast_path = true;
    verdict.method = "termwise-nonnegative";
    return verdict;
  }
  if (max_support > basis.max_size()) return std::nullopt;

  // Support contained in the index set: the matrix equals Z diag(w) Z^T.
  PsdVerdict verdict;
  verdict.fast_path = true;
  verdict.method = "diagonal-congruence";
  Subset worst;
  Rational worst_weight(0);
  for (const auto& [set, w] : support) {
    if (w < worst_weight) {
      worst_weight = w;
      worst = set;
    }
  }
  if (worst_weight >= 0) {
    verdict.status = PsdStatus::kPsd;
    return verdict;
  }
  verdict.status = PsdStatus::kNotPsd;
  // Witness: row of the inverse zeta matrix at the offending set; its
  // quadratic form picks out exactly that diagonal entry.
  RationalVector witness(basis.size());
  for (Eigen::Index j = 0; j < basis.size(); ++j) {
    if (worst.subset_of(basis[j])) {
      witness(j) = ((basis[j] - worst).size() % 2 == 0) ? 1 : -1;
    } else {
      witness(j) = 0;
    }
  }
  if (matrix_for_witness != nullptr) {
    verdict.witness_value = quadratic_form(*matrix_for_witness, witness);
    if (*verdict.witness_value >= 0) {
      throw std::logic_error("diagonal-congruence witness failed exact re-check");
    }
  } else {
    verdict.witness_value = worst_weight;
  }
  verdict.witness = std::move(witness);
  verdict.notes.push_back("negative diagonal entry at " + to_string(worst));
  return verdict;
}

Feasibility combine(const VerificationReport& report) {
  bool inconclusive = false;
  if (!report.condition1.pass) return Feasibility::kInfeasible;
  const auto fold = [&](const PsdVerdict& v) {
    if (v.status == PsdStatus::kNotPsd) return true;
    if (v.status == PsdStatus::kInconclusive) inconclusive = true;
    return false;
  };
  if (fold(report.condition2)) return Feasibility::kInfeasible;
  for (const PsdVerdict& v : report.condition3) {
    if (fold(v)) return Feasibility::kInfeasible;
  }
  return inconclusive ? Feasibility::kInconclusive : Feasibility::kFeasible;
}

}  // namespace

std::string_view to_string(ArithmeticMode mode) {
  return mode == ArithmeticMode::kExact ? "exact" : "float";
}

std::string_view to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return "FEASIBLE";
    case Feasibility::kInfeasible:
      return "INFEASIBLE";
    case Feasibility::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

VerificationReport verify_conditions(const PseudoDistribution& p,
                                     const std::vector<LinearConstraint>& constraints, int level,
                                     const VerifyOptions& options) {
  if (level < 0) throw std::invalid_argument("hierarchy level must be nonnegative");
  const int n = p.ground_set_size();
  const MomentVector moments = moments_of(p, level + 1);

  VerificationReport report;
  report.condition1.mass = p.total_mass();
  report.condition1.residual = report.condition1.mass - 1;
  report.condition1.pass = report.condition1.residual == 0;

  const SubsetBasis variable_basis(n, level + 1);
  const auto plain_support = weighted_support(p, nullptr);
  if (auto fast = support_fast_path(plain_support, variable_basis, nullptr)) {
    report.condition2 = std::move(*fast);
    if (report.condition2.status == PsdStatus::kNotPsd ||
        options.mode == ArithmeticMode::kFloat ||
        variable_basis.size() <= options.exact_report_cap) {
      const RationalMatrix m = variable_moment_matrix(moments, variable_basis);
      if (report.condition2.status == PsdStatus::kNotPsd) {
        report.condition2.witness_value = quadratic_form(m, *report.condition2.witness);
        if (*report.condition2.witness_value >= 0) {
          throw std::logic_error("diagonal-congruence witness failed exact re-check");
        }
      } else {
        attach_informational_check(report.condition2, m, options);
      }
    }
  } else {
    report.condition2 = mode_check(variable_moment_matrix(moments, variable_basis), options.mode);
  }

  const SubsetBasis constraint_basis(n, level);
  report.condition3.reserve(constraints.size());
  for (const LinearConstraint& c : constraints) {
    const auto support = weighted_support(p, &c);
    std::optional<RationalMatrix> matrix;
    const auto materialize = [&]() -> const RationalMatrix& {
      if (!matrix) matrix = constraint_moment_matrix(moments, c, constraint_basis);
      return *matrix;
    };
    if (auto fast = support_fast_path(support, constraint_basis, nullptr)) {
      if (fast->status == PsdStatus::kNotPsd) {
        // Re-anchor the witness value on the assembled matrix.
        fast->witness_value = quadratic_form(materialize(), *fast->witness);
        if (*fast->witness_value >= 0) {
          throw std::logic_error("diagonal-congruence witness failed exact re-check");
        }
      }
      report.condition3.push_back(std::move(*fast));
    } else {
      report.condition3.push_back(mode_check(materialize(), options.mode));
    }
  }

  report.overall = combine(report);
  return report;
}

VerificationReport verify_conditions(const MomentVector& moments,
                                     const std::vector<LinearConstraint>& constraints, int level,
                                     const VerifyOptions& options) {
  if (level < 0) throw std::invalid_argument("hierarchy level must be nonnegative");
  const int n = moments.ground_set_size();

  VerificationReport report;
  report.condition1.mass = moments.value(Subset());
  report.condition1.residual = report.condition1.mass - 1;
  report.condition1.pass = report.condition1.residual == 0;

  const SubsetBasis variable_basis(n, level + 1);
  report.condition2 = mode_check(variable_moment_matrix(moments, variable_basis), options.mode);

  const SubsetBasis constraint_basis(n, level);
  report.condition3.reserve(constraints.size());
  for (const LinearConstraint& c : constraints) {
    report.condition3.push_back(
        mode_check(constraint_moment_matrix(moments, c, constraint_basis), options.mode));
  }
  report.overall = combine(report);
  return report;
}

}  // namespace lasgap
