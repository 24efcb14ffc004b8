#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lasgap/moments.hpp"
#include "lasgap/psd.hpp"

namespace lasgap {

enum class ArithmeticMode { kExact, kFloat };

enum class Feasibility { kFeasible, kInfeasible, kInconclusive };

std::string_view to_string(ArithmeticMode mode);
std::string_view to_string(Feasibility f);

/// Normalization check: total mass of the solution against one.
struct MassCheck {
  Rational mass;
  Rational residual;  // mass - 1
  bool pass = false;
};

struct VerificationReport {
  MassCheck condition1;
  PsdVerdict condition2;               // moment matrix of the variables
  std::vector<PsdVerdict> condition3;  // one per constraint, input order
  Feasibility overall = Feasibility::kInconclusive;
};

struct VerifyOptions {
  ArithmeticMode mode = ArithmeticMode::kExact;
  /// Exact factorizations that are merely informational (the verdict already
  /// follows from a sound fast path) are skipped above this dimension.
  Eigen::Index exact_report_cap = 200;
};

/// Checks the level-t feasibility conditions for a pseudo-distribution:
/// unit mass, PSD moment matrix over P_{t+1}(n), and a PSD constraint
/// moment matrix over P_t(n) for every constraint. Support-based fast paths
/// (termwise nonnegativity; diagonal congruence when the support fits in
/// the index set) decide exactly where they apply and are recorded in the
/// verdicts. Float-path rejections are confirmed in exact arithmetic before
/// they can make the report INFEASIBLE.
VerificationReport verify_conditions(const PseudoDistribution& p,
                                     const std::vector<LinearConstraint>& constraints, int level,
                                     const VerifyOptions& options = {});

/// Same checks driven from an explicit moment table (no support
/// information, hence no fast paths). Condition one reduces to y_{} == 1.
VerificationReport verify_conditions(const MomentVector& moments,
                                     const std::vector<LinearConstraint>& constraints, int level,
                                     const VerifyOptions& options = {});

}  // namespace lasgap
