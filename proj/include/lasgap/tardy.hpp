#pragma once

#include <optional>
#include <vector>

#include "lasgap/verify.hpp"

namespace lasgap {

/// One job on the single machine: positive processing time and due date.
struct Job {
  Integer processing;
  Integer deadline;
};

/// The structured covering family: n = m^2 unit-cost jobs in m blocks of m.
/// Block i (1-based) carries processing time base^i, deadline
/// m * sum_{j<=i} base^j - sum_{j<=i} base^{j-1}, and demand
/// sum_{j<=i} base^{j-1}. Only m and base are stored; every derived array is
/// recomputed on demand so the two can never drift apart.
class GapInstance {
 public:
  GapInstance(int block_count, Integer base);

  int block_count() const { return m_; }
  const Integer& base() const { return base_; }
  int job_count() const { return m_ * m_; }

  Integer processing_time(int block) const;  // block in 1..m
  Integer deadline(int block) const;
  Integer demand(int block) const;

  /// 0-based variable/bit position of job (block, slot), both 1-based:
  /// (block - 1) * m + slot - 1.
  int job_index(int block, int slot) const;
  int block_of(int job) const;  // 0-based job -> 1-based block

  std::vector<Job> jobs() const;

 private:
  int m_;
  Integer base_;
};

GapInstance build_instance(int block_count, const Integer& base);

/// The relaxation constraints at bound T: one cardinality constraint
/// T - sum x >= 0 followed by the m demand constraints
/// sum_{i<=l, j} base^i x_{ij} - D_l >= 0, in block order.
std::vector<LinearConstraint> lp_constraints(const GapInstance& instance, const Rational& bound);

struct TardyResult {
  int tardy_count = 0;
  std::vector<int> tardy_jobs;  // 0-based input positions, increasing
};

/// Minimum number of late jobs on one machine, unit weights. Greedy over
/// jobs in (deadline, input position) order; on overload the scheduled job
/// with the largest processing time is dropped, ties to the smallest input
/// position.
TardyResult moore_hodgson(const std::vector<Job>& jobs);

/// Exhaustive minimum over all on-time sets; the oracle for the greedy.
int min_tardy_brute_force(const std::vector<Job>& jobs);

/// Which uniform certificate family to build: the wide one puts mass on all
/// sets of size <= 2t+1 at level t = sqrt(n)/(2k) - 1/2; the tight one on
/// sets of size <= t+1 at level t = sqrt(n)/k - 1.
struct CertificateSpec {
  int theorem = 0;  // 1 = wide support, 2 = tight support
  int gap = 0;      // k
  int level = 0;    // t
  int support_threshold = 0;
  Rational alpha;   // 1 / |P_threshold(n)|
};

struct TardyCertificate {
  CertificateSpec spec;
  PseudoDistribution distribution;
};

/// Throws std::invalid_argument naming the divisibility condition when the
/// requested (n, k) pair does not admit the family.
TardyCertificate make_certificate(const GapInstance& instance, int theorem, int k);

struct LadderRung {
  Integer base;
  VerificationReport report;
};

struct GapVerification {
  CertificateSpec spec;
  int level = 0;             // level actually verified (may differ from spec.level)
  Rational relaxation_bound; // T = sqrt(n) / k
  int integral_optimum = 0;  // minimum tardy count, = m on this family
  Rational gap;              // integral optimum / T
  std::vector<LadderRung> rungs;
  std::optional<Integer> passing_base;  // smallest base in the ladder that verified
  Feasibility overall = Feasibility::kInconclusive;
  std::string note;
};

/// Builds the certificate for n = m^2 and verifies the level's conditions
/// against LP(sqrt(n)/k), walking the base ladder upward until a rung
/// verifies. All rungs rejected with exact witnesses make the whole
/// verification INFEASIBLE; otherwise a failed ladder stays INCONCLUSIVE
/// rather than contradicting the family's large-base guarantee.
GapVerification verify_gap(int block_count, int k, int theorem, int level,
                           const std::vector<Integer>& base_ladder, ArithmeticMode mode);

/// Default base ladder {10^3, 10^6, 10^9, 10^12}.
std::vector<Integer> default_base_ladder();

}  // namespace lasgap
