// lasgap: batch driver for the certificate verification pipelines. Every
// subcommand prints a short human summary on stdout and writes a JSON report
// (exit codes 0..2); diagnostics go to stderr with exit code 3.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lasgap/diagonalize.hpp"
#include "lasgap/json_io.hpp"
#include "lasgap/polyopt.hpp"
#include "lasgap/sampling.hpp"
#include "lasgap/tardy.hpp"
#include "lasgap/zeta.hpp"

namespace {

using nlohmann::json;
using namespace lasgap;

struct RunConfig {
  std::string command;
  std::string mode = "auto";  // exact | float | auto (exact up to dimension 200)
  std::string out;
  std::uint64_t seed = 0;
};

int feasibility_exit(Feasibility f) {
  switch (f) {
    case Feasibility::kFeasible:
      return 0;
    case Feasibility::kInfeasible:
      return 1;
    case Feasibility::kInconclusive:
      return 2;
  }
  return 2;
}

void write_report(const RunConfig& config, json report) {
  report["command"] = config.command;
  const std::string path = config.out.empty() ? config.command + "-report.json" : config.out;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  out << report.dump(2) << '\n';
  std::cout << "report written to " << path << "\n";
}

ArithmeticMode resolve_mode(const std::string& mode, Eigen::Index dimension) {
  if (mode == "exact") return ArithmeticMode::kExact;
  if (mode == "float") return ArithmeticMode::kFloat;
  return dimension <= 200 ? ArithmeticMode::kExact : ArithmeticMode::kFloat;
}

std::vector<Integer> parse_base_ladder(const std::string& csv) {
  if (csv.empty()) return default_base_ladder();
  std::vector<Integer> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.emplace_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty base ladder");
  return out;
}

std::vector<Rational> parse_epsilon_ladder(const std::string& csv) {
  if (csv.empty()) return default_epsilon_ladder();
  std::vector<Rational> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("empty epsilon ladder");
  return out;
}

Subset parse_shift(const std::string& csv, int n) {
  Subset shift;
  if (csv.empty()) return shift;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const int label = std::stoi(item);
    if (label < 1 || label > n) throw std::invalid_argument("shift element outside 1..n");
    shift = shift | Subset::single(label - 1);
  }
  return shift;
}

int block_count_from(int n, int m) {
  if (m > 0) return m;
  if (n <= 0) throw std::invalid_argument("either --n or --m is required");
  int root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  if (root * root != n) throw std::invalid_argument("--n must be a perfect square (n = m^2)");
  return root;
}

int run_verify_zeta(const RunConfig& config, int n, int d, bool all_shifts,
                    const std::string& shift_csv, const std::string& csv_path) {
  const SubsetBasis basis(n, d);
  std::vector<Subset> shifts;
  if (all_shifts) {
    for (Subset s : enumerate_subsets(n, n)) shifts.push_back(s);
  } else {
    shifts.push_back(parse_shift(shift_csv, n));
  }

  const RationalMatrix plain = zeta_matrix(basis);
  const RationalMatrix identity = RationalMatrix::Identity(basis.size(), basis.size());
  int checked = 0;
  int failures = 0;
  json failing = json::array();
  for (Subset shift : shifts) {
    const RationalMatrix shifted = shifted_zeta_matrix(basis, shift);
    const RationalMatrix inverse = shifted_zeta_inverse(basis, shift);
    const RationalMatrix companion = companion_matrix(basis, shift);
    bool ok = (shifted * inverse) == identity && (inverse * shifted) == identity &&
              (companion * shifted) == plain;
    for (Eigen::Index i = 0; ok && i < basis.size(); ++i) {
      for (Eigen::Index j = 0; j < basis.size(); ++j) {
        if (shifted_zeta_inverse_entry(basis[i], basis[j], shift, d) != inverse(i, j)) {
          ok = false;
          break;
        }
      }
    }
    ++checked;
    if (!ok) {
      ++failures;
      failing.push_back(to_string(shift));
    }
    if (!csv_path.empty() && checked == 1) {
      std::ofstream csv(csv_path);
      if (!csv) throw std::runtime_error("cannot open CSV file " + csv_path);
      write_matrix_csv(csv, shifted, basis, basis);
      write_matrix_csv(csv, inverse, basis, basis);
    }
  }

  json report{{"n", n},           {"d", d},
              {"shifts", checked}, {"failures", failures},
              {"failing", failing}, {"overall", failures == 0 ? "PASS" : "FAIL"}};
  write_report(config, std::move(report));
  std::cout << "checked " << checked << " shifts at n=" << n << " d=" << d << ": "
            << (failures == 0 ? "all identities exact" : "FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

int run_gen_instance(const RunConfig& config, int m, long base) {
  const GapInstance instance(m, Integer(base));
  json report = to_json(instance);
  json deadlines = json::array();
  json demands = json::array();
  for (int block = 1; block <= m; ++block) {
    deadlines.push_back(instance.deadline(block).get_str());
    demands.push_back(instance.demand(block).get_str());
  }
  std::cout << "n=" << instance.job_count() << " jobs in " << m << " blocks, base " << base
            << "\n  deadlines: " << deadlines.dump() << "\n  demands:   " << demands.dump()
            << "\n";
  write_report(config, std::move(report));
  return 0;
}

int run_tardy_verify(const RunConfig& config, int n, int m, int k, int theorem, int level,
                     const std::string& ladder_csv, long base_override) {
  const int blocks = block_count_from(n, m);
  std::vector<Integer> ladder = base_override > 0 ? std::vector<Integer>{Integer(base_override)}
                                                  : parse_base_ladder(ladder_csv);
  // Dimension of the largest matrix (the variable moment matrix) drives the
  // default arithmetic mode.
  const TardyCertificate probe =
      make_certificate(GapInstance(blocks, ladder.front()), theorem, k);
  const int effective_level = level < 0 ? probe.spec.level : level;
  const Integer dimension = subset_count(blocks * blocks, effective_level + 1);
  const ArithmeticMode mode =
      resolve_mode(config.mode, dimension.fits_slong_p() ? dimension.get_si() : 1 << 30);

  const GapVerification verification = verify_gap(blocks, k, theorem, level, ladder, mode);
  json report = to_json(verification);
  report["mode"] = std::string(to_string(mode));
  report["n"] = blocks * blocks;
  report["m"] = blocks;
  write_report(config, std::move(report));

  std::cout << "level " << verification.level << " relaxation of LP(T), T="
            << to_string(verification.relaxation_bound) << ": "
            << to_string(verification.overall);
  if (verification.passing_base) {
    std::cout << " (P=" << verification.passing_base->get_str()
              << ", gap " << to_string(verification.gap) << ")";
  }
  std::cout << "\n";
  return feasibility_exit(verification.overall);
}

int run_tardy_opt(const RunConfig& config, int m, long base, bool brute_force) {
  const GapInstance instance(m, Integer(base));
  const TardyResult greedy = moore_hodgson(instance.jobs());
  json report{{"m", m},
              {"P", base},
              {"n", instance.job_count()},
              {"integral_optimum", greedy.tardy_count},
              {"tardy_jobs", greedy.tardy_jobs}};
  bool consistent = true;
  if (brute_force) {
    const int exhaustive = min_tardy_brute_force(instance.jobs());
    report["brute_force"] = exhaustive;
    consistent = exhaustive == greedy.tardy_count;
    report["consistent"] = consistent;
  }
  write_report(config, std::move(report));
  std::cout << "minimum tardy count: " << greedy.tardy_count << "\n";
  return consistent ? 0 : 1;
}

int run_min_p_search(const RunConfig& config, int n, int m, int k, int theorem, int level,
                     const std::string& ladder_csv) {
  const int blocks = block_count_from(n, m);
  const std::vector<Integer> ladder = parse_base_ladder(ladder_csv);
  const TardyCertificate probe =
      make_certificate(GapInstance(blocks, ladder.front()), theorem, k);
  const int effective_level = level < 0 ? probe.spec.level : level;
  const Integer dimension = subset_count(blocks * blocks, effective_level + 1);
  const ArithmeticMode mode =
      resolve_mode(config.mode, dimension.fits_slong_p() ? dimension.get_si() : 1 << 30);
  const GapVerification verification = verify_gap(blocks, k, theorem, level, ladder, mode);
  json report = to_json(verification);
  report["mode"] = std::string(to_string(mode));
  write_report(config, std::move(report));
  if (verification.passing_base) {
    std::cout << "smallest passing P: " << verification.passing_base->get_str() << "\n";
  } else {
    std::cout << "no P in the ladder verified\n";
  }
  return feasibility_exit(verification.overall);
}

int run_polyopt_verify(const RunConfig& config, int n, int k, const std::string& ladder_csv) {
  const std::vector<Rational> ladder = parse_epsilon_ladder(ladder_csv);
  const ArithmeticMode mode = resolve_mode(config.mode, subset_count(n, k - 1).get_si());
  const PolyoptVerification verification = verify_polyopt(n, k, ladder, mode);
  json report = to_json(verification);
  report["mode"] = std::string(to_string(mode));
  write_report(config, std::move(report));
  if (verification.passing_epsilon) {
    std::cout << "passing epsilon " << to_string(*verification.passing_epsilon)
              << ": pseudo-value " << to_string(verification.pseudo_value)
              << " > optimum " << to_string(verification.optimum) << "\n";
  } else {
    std::cout << to_string(verification.overall) << ": " << verification.note << "\n";
  }
  return feasibility_exit(verification.overall);
}

int run_oracle_compare(const RunConfig& config, int max_n, int trials) {
  Rng rng(config.seed);
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_level(0, 2);

  int equivalence_failures = 0;
  int pushforward_failures = 0;
  int roundtrip_failures = 0;
  int inertia_failures = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const int n = pick_n(rng);
    const int t = pick_level(rng);
    const PseudoDistribution p = random_sparse_distribution(rng, n, 24);
    const LinearConstraint c = random_constraint(rng, n);
    const MomentVector moments = zeta_transform(p, t + 1);

    // Rank-one assembly against the moment form, plain and weighted.
    const SubsetBasis variable_basis(n, std::min(t + 1, n));
    const SubsetBasis constraint_basis(n, std::min(t, n));
    if (zeta_sum_matrix(p, nullptr, variable_basis) !=
        variable_moment_matrix(moments, variable_basis)) {
      ++equivalence_failures;
    }
    if (zeta_sum_matrix(p, &c, constraint_basis) !=
        constraint_moment_matrix(moments, c, constraint_basis)) {
      ++equivalence_failures;
    }

    // Constraint pushforward reproduces the shifted moment combination.
    const MomentVector pushed = zeta_transform(constraint_pushforward(p, c), t);
    bool pushforward_ok = true;
    for (Subset set : enumerate_subsets(n, std::min(2 * t, n))) {
      Rational expected = -c.rhs * moments.value(set);
      for (const auto& [variable, coefficient] : c.coefficients) {
        expected += coefficient * moments.value(set | Subset::single(variable));
      }
      if (pushed.value(set) != expected) {
        pushforward_ok = false;
        break;
      }
    }
    if (!pushforward_ok) ++pushforward_failures;

    // Inverse transform round-trip through the full power set.
    const PseudoDistribution back = mobius_transform(zeta_transform(p, (n + 1) / 2));
    if (back.weights() != p.weights()) ++roundtrip_failures;

    // Congruence split preserves the inertia of the direct assembly.
    if (n <= 8) {
      std::uniform_int_distribution<std::uint64_t> masks(0, Subset::full(n).bits());
      const Subset shift = Subset::of_bits(masks(rng));
      const Diagonalization split = partial_diagonalize(p, &c, constraint_basis, shift);
      const SymmetricFactorization direct =
          exact_inertia(zeta_sum_matrix(p, &c, constraint_basis));
      if (!(exact_inertia(reconstruct(split)).inertia == direct.inertia)) ++inertia_failures;
    }
  }

  const int failures =
      equivalence_failures + pushforward_failures + roundtrip_failures + inertia_failures;
  json report{{"seed", config.seed},
              {"trials", trials},
              {"max_n", max_n},
              {"equivalence_failures", equivalence_failures},
              {"pushforward_failures", pushforward_failures},
              {"roundtrip_failures", roundtrip_failures},
              {"inertia_failures", inertia_failures},
              {"overall", failures == 0 ? "PASS" : "FAIL"}};
  write_report(config, std::move(report));
  std::cout << trials << " randomized trials, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sum-of-squares relaxation certificates for covering programs"};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--mode", config.mode, "arithmetic mode: exact | float (default: exact up to dimension 200)")
      ->check(CLI::IsMember({"exact", "float", "auto"}));
  app.add_option("--out", config.out, "report file path");
  app.add_option("--seed", config.seed, "seed for randomized property checks");

  int n = 0;
  int m = 0;
  int d = 2;
  int k = 1;
  int theorem = 2;
  int level = -1;
  long base = 0;
  int trials = 100;
  bool all_shifts = false;
  bool brute_force = false;
  std::string shift_csv;
  std::string csv_path;
  std::string base_ladder_csv;
  std::string eps_ladder_csv;

  CLI::App* verify_zeta = app.add_subcommand("verify-zeta", "exhaustive shifted zeta identities");
  verify_zeta->add_option("--n", n, "ground set size")->required();
  verify_zeta->add_option("--d", d, "maximum subset size");
  verify_zeta->add_flag("--all-shifts", all_shifts, "check every shift S of [n]");
  verify_zeta->add_option("--shift", shift_csv, "single shift as 1-based labels, e.g. 1,3");
  verify_zeta->add_option("--dump-csv", csv_path, "dump the first shifted matrix and inverse");

  CLI::App* gen_instance = app.add_subcommand("gen-instance", "write a scheduling instance file");
  gen_instance->add_option("--m", m, "number of blocks")->required();
  gen_instance->add_option("--p-base", base, "processing-time base P >= 2")->required();

  CLI::App* tardy_verify =
      app.add_subcommand("tardy-verify", "verify a scheduling gap certificate");
  tardy_verify->add_option("--n", n, "number of jobs (a perfect square)");
  tardy_verify->add_option("--m", m, "number of blocks (alternative to --n)");
  tardy_verify->add_option("--k", k, "target gap")->required();
  tardy_verify->add_option("--theorem", theorem, "certificate family: 1 wide, 2 tight")
      ->check(CLI::IsMember({1, 2}));
  tardy_verify->add_option("--level", level, "hierarchy level (default: the family's own)");
  tardy_verify->add_option("--p-base", base, "verify a single base instead of the ladder");
  tardy_verify->add_option("--p-ladder", base_ladder_csv, "comma-separated bases, ascending");

  CLI::App* tardy_opt = app.add_subcommand("tardy-opt", "integral optimum of an instance");
  tardy_opt->add_option("--m", m, "number of blocks")->required();
  tardy_opt->add_option("--p-base", base, "processing-time base P >= 2")->required();
  tardy_opt->add_flag("--brute-force", brute_force, "cross-check exhaustively (n <= 20)");

  CLI::App* min_p = app.add_subcommand("min-p-search", "smallest ladder base that verifies");
  min_p->add_option("--n", n, "number of jobs (a perfect square)");
  min_p->add_option("--m", m, "number of blocks (alternative to --n)");
  min_p->add_option("--k", k, "target gap")->required();
  min_p->add_option("--theorem", theorem, "certificate family: 1 wide, 2 tight")
      ->check(CLI::IsMember({1, 2}));
  min_p->add_option("--level", level, "hierarchy level (default: the family's own)");
  min_p->add_option("--p-ladder", base_ladder_csv, "comma-separated bases, ascending");

  CLI::App* polyopt = app.add_subcommand("polyopt-verify", "degree-k objective gap certificate");
  polyopt->add_option("--n", n, "number of variables")->required();
  polyopt->add_option("--k", k, "objective degree")->required();
  polyopt->add_option("--eps-ladder", eps_ladder_csv, "comma-separated epsilons, descending");

  CLI::App* oracle = app.add_subcommand("oracle-compare", "randomized dual-route consistency");
  oracle->add_option("--n", n, "maximum ground set size (default 8)");
  oracle->add_option("--trials", trials, "number of randomized trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n" << app.help();
    return 3;
  }

  try {
    if (verify_zeta->parsed()) {
      config.command = "verify-zeta";
      return run_verify_zeta(config, n, d, all_shifts, shift_csv, csv_path);
    }
    if (gen_instance->parsed()) {
      config.command = "gen-instance";
      return run_gen_instance(config, m, base);
    }
    if (tardy_verify->parsed()) {
      config.command = "tardy-verify";
      return run_tardy_verify(config, n, m, k, theorem, level, base_ladder_csv, base);
    }
    if (tardy_opt->parsed()) {
      config.command = "tardy-opt";
      return run_tardy_opt(config, m, base, brute_force);
    }
    if (min_p->parsed()) {
      config.command = "min-p-search";
      return run_min_p_search(config, n, m, k, theorem, level, base_ladder_csv);
    }
    if (polyopt->parsed()) {
      config.command = "polyopt-verify";
      return run_polyopt_verify(config, n, k, eps_ladder_csv);
    }
    if (oracle->parsed()) {
      config.command = "oracle-compare";
      return run_oracle_compare(config, n > 0 ? n : 8, trials);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
