#include "lasgap/polyopt.hpp"

#include <stdexcept>

namespace lasgap {

MultilinearPolynomial::MultilinearPolynomial(int n,
                                             std::map<Subset, Rational, CanonicalLess> coefficients)
    : n_(n), coefficients_(std::move(coefficients)) {
  if (n < 0 || n > Subset::kMaxGroundSet) {
    throw std::length_error("ground set capacity is 64 elements");
  }
  for (const auto& [monomial, coefficient] : coefficients_) {
    if (!monomial.subset_of(Subset::full(n))) {
      throw std::domain_error("monomial " + to_string(monomial) + " outside the ground set");
    }
  }
}

int MultilinearPolynomial::degree() const {
  int top = 0;
  for (const auto& [monomial, coefficient] : coefficients_) {
    if (coefficient != 0) top = std::max(top, monomial.size());
  }
  return top;
}

Rational MultilinearPolynomial::value_at(Subset point) const {
  Rational total(0);
  for (const auto& [monomial, coefficient] : coefficients_) {
    if (monomial.subset_of(point)) total += coefficient;
  }
  return total;
}

std::vector<Rational> MultilinearPolynomial::values_on_hypercube() const {
  if (n_ > 24) throw std::length_error("hypercube evaluation is capped at 24 variables");
  const std::size_t count = std::size_t(1) << n_;
  std::vector<Rational> table(count, Rational(0));
  for (const auto& [monomial, coefficient] : coefficients_) {
    table[monomial.bits()] = coefficient;
  }
  // Subset-sum (zeta) transform: accumulate each coefficient into every
  // superset mask.
  for (int bit = 0; bit < n_; ++bit) {
    const std::uint64_t flag = std::uint64_t(1) << bit;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (mask & flag) {
        table[mask] += table[mask ^ flag];
      }
    }
  }
  return table;
}

MultilinearPolynomial hitting_objective(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("degree k must lie in 1..n");
  std::map<Subset, Rational, CanonicalLess> coefficients;
  for (Subset monomial : enumerate_subsets(n, k)) {
    if (monomial.empty()) continue;  // no constant term: the empty point scores zero
    const Rational magnitude(binomial(n - monomial.size(), k - monomial.size()));
    coefficients[monomial] = (monomial.size() % 2 == 1) ? magnitude : -magnitude;
  }
  return MultilinearPolynomial(n, std::move(coefficients));
}

Rational integral_optimum(const MultilinearPolynomial& f) {
  if (f.ground_set_size() > 20) {
    throw std::length_error("exhaustive optimum is capped at 20 variables");
  }
  const std::vector<Rational> values = f.values_on_hypercube();
  Rational best = values.front();
  for (const Rational& value : values) {
    if (value > best) best = value;
  }
  return best;
}

PseudoDistribution polyopt_certificate(int n, int k, const Rational& epsilon) {
  if (k < 1 || k > n) throw std::invalid_argument("degree k must lie in 1..n");
  if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  const Rational top_count(subset_count(n, n) - subset_count(n, n - k));
  const Rational alpha = (Rational(1) + epsilon) / top_count;
  std::map<int, Rational> profile;
  for (int s = n - k + 1; s <= n; ++s) profile[s] = alpha;
  profile[0] = -epsilon;
  return PseudoDistribution::from_size_profile(n, profile);
}

Rational pseudo_objective(const PseudoDistribution& p, const MultilinearPolynomial& f) {
  Rational total(0);
  for (const auto& [set, weight] : p.weights()) {
    total += f.value_at(set) * weight;
  }
  return total;
}

PolyoptVerification verify_polyopt(int n, int k, const std::vector<Rational>& epsilon_ladder,
                                   ArithmeticMode mode) {
  if (epsilon_ladder.empty()) throw std::invalid_argument("epsilon ladder must not be empty");

  PolyoptVerification out;
  out.n = n;
  out.degree = k;
  out.level = k - 1;
  const MultilinearPolynomial objective = hitting_objective(n, k);
  out.optimum = integral_optimum(objective);

  const SubsetBasis basis(n, k - 1);
  VerifyOptions options;
  options.mode = mode;

  for (const Rational& epsilon : epsilon_ladder) {
    const PseudoDistribution certificate = polyopt_certificate(n, k, epsilon);

    EpsilonRung rung;
    rung.epsilon = epsilon;
    rung.condition1.mass = certificate.total_mass();
    rung.condition1.residual = rung.condition1.mass - 1;
    rung.condition1.pass = rung.condition1.residual == 0;

    const RationalMatrix matrix =
        variable_moment_matrix(moments_of(certificate, k - 1), basis);
    rung.condition2 =
        mode == ArithmeticMode::kExact ? certify_exact(matrix) : certify_numeric(matrix);

    // Cross-check through the congruence split with the full-set shift: the
    // positive support collapses onto the diagonal and the empty set is the
    // single rank-one leftover.
    const Diagonalization split =
        partial_diagonalize(certificate, nullptr, basis, Subset::full(n));
    rung.weyl_bound = weyl_lower_bound(split);
    if (rung.weyl_bound >= 0 && rung.condition2.status == PsdStatus::kNotPsd) {
      throw std::logic_error("eigenvalue bound contradicts the factorization");
    }

    rung.overall = !rung.condition1.pass ? Feasibility::kInfeasible
                   : rung.condition2.status == PsdStatus::kPsd   ? Feasibility::kFeasible
                   : rung.condition2.status == PsdStatus::kNotPsd ? Feasibility::kInfeasible
                                                                  : Feasibility::kInconclusive;
    const Feasibility verdict = rung.overall;
    out.rungs.push_back(std::move(rung));
    if (verdict == Feasibility::kFeasible) {
      out.passing_epsilon = epsilon;
      break;
    }
  }

  if (out.passing_epsilon) {
    out.overall = Feasibility::kFeasible;
    out.pseudo_value =
        pseudo_objective(polyopt_certificate(n, k, *out.passing_epsilon), objective);
    out.margin = out.pseudo_value - out.optimum;
  } else {
    out.overall = Feasibility::kInconclusive;
    out.note = "INCONCLUSIVE-FOR-LADDER: no epsilon in the ladder verified";
  }
  return out;
}

std::vector<Rational> default_epsilon_ladder() {
  std::vector<Rational> out;
  Rational value = Rational(1) / 16;
  for (int exponent = 4; exponent <= 40; exponent += 2) {
    out.push_back(value);
    value /= 4;
  }
  return out;
}

}  // namespace lasgap
