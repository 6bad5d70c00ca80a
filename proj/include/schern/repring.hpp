#pragma once

#include "schern/chern.hpp"
#include "schern/numeric.hpp"
#include "schern/partition.hpp"
#include "schern/weights.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schern {

// ---------------------------------------------------------------------------
// Published generator tables, stored verbatim for diffing.

struct PaperRow {
  std::vector<int> coeffs;
  Partition partition;
  BigInt n_lambda;
};

struct PaperTable {
  std::string case_id;
  GroupSpec spec;
  std::string citation;
  std::vector<PaperRow> rows;  // in printed order
};

/// The stored table for spec, or nullptr. Available for (8,2) and (9,3).
const PaperTable* paper_table(GroupSpec spec);
const std::vector<PaperTable>& paper_tables();

// ---------------------------------------------------------------------------

struct GeneratorRow {
  Weight weight;
  Partition partition;
  std::optional<ChernResult> result;  // empty when the computation failed
  std::string failure;                // diagnostic when result is empty
  std::optional<BigInt> paper_value;  // printed value, when the case has one
  bool flagged = false;               // computed value differs from printed

  bool ok() const { return result.has_value(); }
};

struct GeneratorTable {
  GroupSpec spec;
  std::vector<GeneratorRow> rows;
  BigInt gcd;  // over rows that computed successfully

  bool has_failures() const;
  /// Stored rows with no counterpart in `rows`.
  std::vector<PaperRow> missing_paper_rows;
};

/// One row per Hilbert basis element, n_lambda via c2(). Rows are computed
/// in parallel; per-row failures are recorded without aborting.
GeneratorTable generator_table(GroupSpec spec, const ChernOptions& options = {});

/// gcd of n_lambda over the Hilbert basis; stops early once it reaches 1.
/// Since H^2(BG, Z) = 0 here, c2 is additive and multiplicative up to
/// dimension factors, so this gcd generates the image of all polynomial
/// representations.
BigInt image_index(GroupSpec spec, const ChernOptions& options = {});

// ---------------------------------------------------------------------------

struct CaseExpectation {
  std::string id;
  GroupSpec spec;
  BigInt expected_gcd;
  BigInt h4_multiplier;  // H^4(BG, Z) = Z * h4_multiplier * c2
  std::string source;
};

const std::vector<CaseExpectation>& stored_cases();

/// Throws PreconditionError for an unknown id.
const CaseExpectation& find_case(std::string_view id);

enum class Verdict { holds, counterexample, inconsistent };
std::string_view to_string(Verdict verdict);

struct CaseReport {
  CaseExpectation expectation;
  BigInt index;
  bool matches_expected = false;
  Verdict verdict = Verdict::inconsistent;
};

CaseReport verify_case(std::string_view id, const ChernOptions& options = {});

// ---------------------------------------------------------------------------

struct ConjectureOptions {
  int ell_ceiling = 5;
  unsigned threads = 0;
};

struct ConjectureReport {
  int ell = 0;
  GroupSpec spec;
  std::size_t basis_size = 0;
  BigInt index;
  bool equals_ell = false;
  bool divisible_by_ell = false;
  std::size_t duality_failures = 0;  // rows with n_lambda != n_dual
};

/// Image index of SL_{ell^2}/mu_ell by the closed form, with a duality
/// check on every basis row. Reports evidence; never asserts the outcome.
ConjectureReport explore_conjecture(int ell, const ConjectureOptions& options = {});

bool is_prime(int value);

}  // namespace schern
