#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffva/report.hpp"

namespace ffva {

struct AcceptanceOptions {
    std::uint64_t seed = 20240611;
    int jobs = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    double target_seconds = 0;

    bool checks_pass() const;
    bool within_target() const { return seconds < target_seconds; }
    bool pass() const { return checks_pass() && within_target(); }
    /// "criterion 3 PASS  <title>  (0.41 s, target < 30 s)"
    std::string line() const;
};

inline constexpr int kCriterionCount = 9;

/// Runs one acceptance criterion (1..9); throws std::out_of_range otherwise.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Report with one check per sub-check, named "criterion-<id>/<check>".
/// Timing is attached only when `timing` is set.
Report acceptance_report(const std::vector<CriterionResult>& results, const AcceptanceOptions& options, bool timing);

// Sub-checks also exposed for the CLI.

/// |scalar of reach_charge_vector(m)| = |lead|^|m| for 0 < |m| <= bound, lead the
/// top coefficient of chi^- (m > 0) or chi^+ (m < 0).
Check reach_check(const std::string& name, const WhittakerChar& chi, std::int64_t bound);

/// Scaling chi^- by t and chi^+ by u scales the charge-m reach state by t^m (m > 0)
/// or u^|m| (m < 0).
Check homogeneity_check(const std::string& name, const WhittakerChar& chi, std::int64_t bound);

/// A(-1)|0> = A and A(n)|0> = 0 for 0 <= n <= n_max, A over every basis vector of weight <= max_weight.
Check vacuum_axioms_check(HalfInt max_weight, std::int64_t n_max = 3);

/// (TA)(n) v = -n A(n-1) v on `samples` random pairs of weight <= 2, -2 <= n <= 3.
Check translation_check(int samples, std::uint64_t seed);

/// [a(m), b(k)] v = sum_{j>=0} C(m, j) (a(j) b)(m+k-j) v for a, b among the four
/// gl(1|1) generators, v in V up to max_weight, m, k in [-bound, bound].
Check borcherds_check(HalfInt max_weight, std::int64_t bound, int jobs = 1);

}  // namespace ffva
