#include "schern/repring.hpp"

#include "schern/errors.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

namespace schern {

namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned threads = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(threads, jobs)));
}

// Runs body(i) for i in [0, count) over a small pool. Exceptions escape
// from the first failing job.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  unsigned workers = worker_count(threads, count);
  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < workers; ++t) jobs.push_back(std::async(std::launch::async, worker));
  for (auto& job : jobs) job.get();
}

BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace

bool GeneratorTable::has_failures() const {
  return std::any_of(rows.begin(), rows.end(), [](const GeneratorRow& r) { return !r.ok(); });
}

GeneratorTable generator_table(GroupSpec spec, const ChernOptions& options) {
  spec = GroupSpec::make(spec.n, spec.d);
  GeneratorTable table{spec, {}, 0, {}};
  for (auto& weight : hilbert_basis(spec)) {
    GeneratorRow row;
    row.partition = partition_of(weight);
    row.weight = std::move(weight);
    table.rows.push_back(std::move(row));
  }

  // Rows run in parallel; enumeration inside a row stays single-threaded.
  ChernOptions row_options = options;
  row_options.threads = 1;
  parallel_for(table.rows.size(), options.threads, [&](std::size_t i) {
    auto& row = table.rows[i];
    try {
      row.result = c2(spec.n, row.partition, row_options);
    } catch (const Error& e) {
      row.failure = e.what();
    }
  });

  if (const PaperTable* paper = paper_table(spec)) {
    for (const auto& printed : paper->rows) {
      auto it = std::find_if(table.rows.begin(), table.rows.end(), [&](const GeneratorRow& r) {
        return std::equal(r.weight.coeffs().begin(), r.weight.coeffs().end(),
                          printed.coeffs.begin(), printed.coeffs.end());
      });
      if (it == table.rows.end()) {
        table.missing_paper_rows.push_back(printed);
        continue;
      }
      it->paper_value = printed.n_lambda;
      it->flagged = it->ok() && it->result->n_lambda != printed.n_lambda;
    }
  }

  for (const auto& row : table.rows)
    if (row.ok()) table.gcd = gcd_of(table.gcd, row.result->n_lambda);
  return table;
}

BigInt image_index(GroupSpec spec, const ChernOptions& options) {
  spec = GroupSpec::make(spec.n, spec.d);
  BigInt g = 0;
  for (const auto& weight : hilbert_basis(spec)) {
    g = gcd_of(g, c2(spec.n, partition_of(weight), options).n_lambda);
    if (g == 1) break;
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<CaseExpectation> build_cases() {
  std::vector<CaseExpectation> cases = {
      {"sl4-mu2", GroupSpec{4, 2}, 2, 2,
       "H^4(BSL4/mu2) = Z*2c2; c2(wedge^2 gamma_4) = 2c2"},
      {"sl6-mu2", GroupSpec{6, 2}, 4, 4,
       "H^4(BSL6/mu2) = Z*4c2; c2(wedge^2 gamma_6) = 4c2"},
      {"sl6-mu3", GroupSpec{6, 3}, 3, 3,
       "H^4(BSL6/mu3) = Z*3c2; c2(wedge^3 gamma_6) = 6c2, c2(gamma_6^(2,1)) = 33c2"},
      {"sl8-mu2", GroupSpec{8, 2}, 2, 1,
       "H^4(BSL8/mu2) = Z*c2; image of cl^2 is Z*2c2 (integral Hodge fails)"},
      {"sl9-mu3", GroupSpec{9, 3}, 3, 1,
       "H^4(BSL9/mu3) = Z*c2; image of cl^2 is Z*3c2 (integral Hodge fails)"},
  };
  for (int n = 2; n <= 7; ++n) {
    int multiplier = n % 2 == 0 ? 2 * n : n;
    cases.push_back({"pgl" + std::to_string(n), GroupSpec{n, n}, multiplier, multiplier,
                     "H^4(BPGL_n) generated by 2n c2 (n even) / n c2 (n odd); "
                     "c2(Ad) = 2n c2"});
  }
  return cases;
}

}  // namespace

const std::vector<CaseExpectation>& stored_cases() {
  static const std::vector<CaseExpectation> cases = build_cases();
  return cases;
}

const CaseExpectation& find_case(std::string_view id) {
  for (const auto& c : stored_cases())
    if (c.id == id) return c;
  std::string known;
  for (const auto& c : stored_cases()) known += (known.empty() ? "" : ", ") + c.id;
  throw PreconditionError("unknown case '" + std::string(id) + "' (known: " + known + ")");
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "integral Hodge holds in codim 2";
    case Verdict::counterexample: return "counterexample";
    case Verdict::inconsistent: return "inconsistent";
  }
  return "?";
}

CaseReport verify_case(std::string_view id, const ChernOptions& options) {
  CaseReport report{find_case(id), 0, false, Verdict::inconsistent};
  report.index = image_index(report.expectation.spec, options);
  report.matches_expected = report.index == report.expectation.expected_gcd;
  const BigInt& multiplier = report.expectation.h4_multiplier;
  if (report.index == multiplier)
    report.verdict = Verdict::holds;
  else if (report.index > multiplier && report.index % multiplier == 0)
    report.verdict = Verdict::counterexample;
  return report;
}

// ---------------------------------------------------------------------------

bool is_prime(int value) {
  if (value < 2) return false;
  for (int p = 2; p * p <= value; ++p)
    if (value % p == 0) return false;
  return true;
}

ConjectureReport explore_conjecture(int ell, const ConjectureOptions& options) {
  if (ell % 2 == 0 || !is_prime(ell))
    throw PreconditionError("ell must be an odd prime (got " + std::to_string(ell) + ")");
  if (ell > options.ell_ceiling)
    throw CeilingExceeded("ell = " + std::to_string(ell) + " exceeds the ceiling " +
                          std::to_string(options.ell_ceiling));

  ConjectureReport report;
  report.ell = ell;
  report.spec = GroupSpec::make(ell * ell, ell);
  const int n = report.spec.n;
  auto basis = hilbert_basis(report.spec);
  report.basis_size = basis.size();

  std::vector<BigInt> values(basis.size());
  std::vector<char> dual_ok(basis.size(), 0);
  parallel_for(basis.size(), options.threads, [&](std::size_t i) {
    Partition shape = partition_of(basis[i]);
    values[i] = c2_closed_form(n, shape).n_lambda;
    dual_ok[i] = c2_closed_form(n, dual_partition(n, shape)).n_lambda == values[i];
  });

  report.index = 0;
  for (const auto& v : values) report.index = gcd_of(report.index, v);
  report.duality_failures = static_cast<std::size_t>(std::count(dual_ok.begin(), dual_ok.end(), 0));
  report.equals_ell = report.index == ell;
  report.divisible_by_ell = report.index % ell == 0;
  return report;
}

}  // namespace schern
