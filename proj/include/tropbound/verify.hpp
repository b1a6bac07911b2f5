#pragma once

// Bound-versus-exact comparisons.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tropbound/bounds.hpp"
#include "tropbound/numerical_data.hpp"
#include "tropbound/tropical.hpp"

namespace tropbound {

struct VerificationReport {
  std::string case_name;
  NumericalData data;
  InsertionSpec insertions;
  std::uint64_t seed = 0;

  mpq_class bound;
  std::optional<mpz_class> exact;
  std::string exact_source; // "tropical", "recursion", or empty
  std::optional<bool> ok;   // exact <= bound, when exact is known
  std::optional<mpq_class> ratio; // bound / exact, when exact > 0
  std::vector<std::string> notes;

  /// ok as implied by bound and exact alone.
  std::optional<bool> recomputed_ok() const;
};

class VerificationFailure : public std::runtime_error {
public:
  explicit VerificationFailure(VerificationReport report);
  const VerificationReport &report() const noexcept { return report_; }

private:
  VerificationReport report_;
};

/// Exact side is attempted when k = 2, free markings carry points and
/// tangent markings carry codimension 0; otherwise the report is bound-only
/// with a note saying why.
VerificationReport verify_case(const std::string &name,
                               const NumericalData &data,
                               const InsertionSpec &ins, std::uint64_t seed,
                               const CountOptions &options = {});

/// Maximal contact, split tangency and corner tangency for d = 2, 3, 4 and
/// characteristic numbers for d = 1, 2, 3, sorted by case name. Throws
/// VerificationFailure on the first case that is not ok.
std::vector<VerificationReport> paper_example_suite(std::uint64_t seed);

/// Balanced plane data with three tangent rows, one zero per row, entries
/// at most `max_entry`, and two free rows.
NumericalData random_three_leg_data(std::mt19937_64 &rng,
                                    Entry max_entry = 20);

struct Counterexample {
  NumericalData data;
  std::string reason;
};

struct RandomSuiteReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;          // random instances checked
  std::size_t fixed_cases = 0;     // (d,0,0),(0,d,0),(0,0,d) for d = 1..5
  std::size_t exact_checked = 0;   // instances also counted tropically
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

/// Checks, per instance: the three determinant forms agree, |mean| <= the
/// squared max-sum, and the (4/3) intermediate inequality. The first
/// `exact_trials` instances are also verified bound >= tropical count.
RandomSuiteReport random_three_leg_suite(std::uint64_t seed,
                                         std::size_t trials,
                                         std::size_t exact_trials = 0);

} // namespace tropbound
