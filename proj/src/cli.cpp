#include "schern/cli.hpp"

#include "schern/cache.hpp"
#include "schern/config.hpp"
#include "schern/errors.hpp"
#include "schern/format.hpp"
#include "schern/repring.hpp"
#include "schern/weights.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>

#ifndef SCHERN_VERSION
#define SCHERN_VERSION "0.0.0"
#endif

namespace schern::cli {

const char* version() { return SCHERN_VERSION; }

namespace {

MethodPolicy parse_method(const std::string& name) {
  if (name == "enum") return MethodPolicy::enumeration;
  if (name == "weyl") return MethodPolicy::closed_form;
  if (name == "both") return MethodPolicy::both;
  return MethodPolicy::automatic;
}

struct GlobalFlags {
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> enumeration_ceiling;
  std::optional<std::uint64_t> crosscheck_ceiling;
  std::optional<int> ell_ceiling;
  std::optional<std::string> cache;
  bool no_cache = false;

  Config resolve() const {
    Config config = config_from_environment();
    if (threads) config.threads = *threads;
    if (enumeration_ceiling) config.enumeration_ceiling = *enumeration_ceiling;
    if (crosscheck_ceiling) config.crosscheck_ceiling = *crosscheck_ceiling;
    if (ell_ceiling) config.ell_ceiling = *ell_ceiling;
    if (cache) config.cache_path = *cache;
    if (no_cache) config.cache_path.reset();
    return config;
  }
};

// Cache access never changes primary output. I/O trouble is a warning;
// a disagreeing value is a cross-check failure and propagates.
class CacheSession {
 public:
  CacheSession(const Config& config, std::ostream& err) : err_(err) {
    if (!config.cache_path) return;
    try {
      cache_ = std::make_unique<ResultCache>(*config.cache_path);
      if (cache_->malformed_lines() > 0)
        err_ << "warning: skipped " << cache_->malformed_lines() << " malformed cache lines in "
             << cache_->path().string() << '\n';
    } catch (const CrossCheckFailure&) {
      throw;
    } catch (const std::exception& e) {
      err_ << "warning: cache disabled: " << e.what() << '\n';
    }
  }

  std::optional<CacheRecord> lookup(const CacheKey& key) const {
    return cache_ ? cache_->lookup(key) : std::nullopt;
  }

  void record(const CacheKey& key, const ChernResult& result) {
    if (!cache_) return;
    CacheRecord rec{key, result.n_lambda, result.dim, std::string(to_string(result.method)),
                    version()};
    try {
      cache_->record(rec);
    } catch (const CrossCheckFailure&) {
      throw;
    } catch (const std::exception& e) {
      err_ << "warning: cache write failed: " << e.what() << '\n';
      cache_.reset();
    }
  }

 private:
  std::ostream& err_;
  std::unique_ptr<ResultCache> cache_;
};

ChernResult cached_c2(int n, const Partition& shape, MethodPolicy policy, const Config& config,
                      CacheSession& cache) {
  CacheKey key{n, std::nullopt, shape};
  ChernResult result;
  auto hit = cache.lookup(key);
  if (policy == MethodPolicy::automatic && hit && hit->method == "both") {
    // Enumeration already agreed once; the closed form re-verifies the claim.
    result = c2_closed_form(n, shape);
  } else {
    result = c2(n, shape, config.chern_options(policy));
  }
  cache.record(key, result);
  return result;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second Chern classes of irreducible SL_n representations, generator tables of "
               "R[SL_n/mu_d], and the image index of the cycle class map in degree 4.",
               "schern"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(version()));

  GlobalFlags flags;
  app.add_option("--threads", flags.threads, "Worker threads (0 = hardware)");
  app.add_option("--enum-ceiling", flags.enumeration_ceiling,
                 "Largest dimension enumerated tableau by tableau");
  app.add_option("--crosscheck-ceiling", flags.crosscheck_ceiling,
                 "Largest dimension cross-checked automatically");
  app.add_option("--ell-ceiling", flags.ell_ceiling, "Largest ell accepted by `conjecture`");
  app.add_option("--cache", flags.cache, "Result cache file (JSON lines)");
  app.add_flag("--no-cache", flags.no_cache, "Disable the result cache");

  const auto method_names = CLI::IsMember({"enum", "weyl", "both", "auto"});
  const auto format_names = CLI::IsMember({"text", "csv", "json"});

  int n = 0;
  int d = 0;
  int ell = 0;
  std::string partition_text;
  std::string method = "auto";
  std::string format = "text";
  std::string case_id;

  auto* c2_cmd = app.add_subcommand("c2", "n_lambda with c2(gamma_n^lambda) = n_lambda c2(gamma_n)");
  c2_cmd->add_option("n", n, "Rank parameter of SL_n")->required();
  c2_cmd->add_option("partition", partition_text, "Comma-separated parts, e.g. 2,2,2")->required();
  c2_cmd->add_option("--method", method, "enum | weyl | both | auto")->check(method_names);

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of gamma_n^lambda");
  dim_cmd->add_option("n", n)->required();
  dim_cmd->add_option("partition", partition_text)->required();

  auto* gen_cmd = app.add_subcommand("generators", "Hilbert basis of dominant weights of SL_n/mu_d");
  gen_cmd->add_option("n", n)->required();
  gen_cmd->add_option("d", d)->required();
  gen_cmd->add_option("--format", format)->check(format_names);

  auto* index_cmd = app.add_subcommand("image-index", "gcd of n_lambda over generators");
  index_cmd->add_option("n", n)->required();
  index_cmd->add_option("d", d)->required();
  index_cmd->add_option("--method", method)->check(method_names);

  auto* verify_cmd = app.add_subcommand("verify", "Check a stored case");
  verify_cmd->add_option("case-id", case_id)->required();
  verify_cmd->add_option("--method", method)->check(method_names);
  verify_cmd->add_option("--format", format)->check(format_names);

  auto* table_cmd = app.add_subcommand("table", "Generator table with printed-value audit");
  table_cmd->add_option("--case", case_id, "sl8-mu2 | sl9-mu3 | any stored case")->required();
  table_cmd->add_option("--format", format)->check(format_names);
  table_cmd->add_option("--method", method)->check(method_names);

  auto* conj_cmd = app.add_subcommand("conjecture", "Image index of SL_{ell^2}/mu_ell");
  conj_cmd->add_option("ell", ell)->required();
  conj_cmd->add_option("--format", format)->check(format_names);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kSuccess : kUsageError;
  }

  try {
    Config config = flags.resolve();
    MethodPolicy policy = parse_method(method);

    if (c2_cmd->parsed()) {
      Partition shape = Partition::parse(partition_text);
      CacheSession cache(config, err);
      out << cached_c2(n, shape, policy, config, cache).n_lambda.str() << '\n';
      return kSuccess;
    }
    if (dim_cmd->parsed()) {
      if (n < 1) throw PreconditionError("n must be positive");
      out << schur_dimension(n, Partition::parse(partition_text)).str() << '\n';
      return kSuccess;
    }
    if (gen_cmd->parsed()) {
      GroupSpec spec = GroupSpec::make(n, d);
      write_generators(out, spec, hilbert_basis(spec), parse_format(format));
      return kSuccess;
    }
    if (index_cmd->parsed()) {
      out << image_index(GroupSpec::make(n, d), config.chern_options(policy)).str() << '\n';
      return kSuccess;
    }
    if (verify_cmd->parsed()) {
      CaseReport report = verify_case(case_id, config.chern_options(policy));
      write_case_report(out, report, parse_format(format));
      if (!report.matches_expected) {
        err << "error: image index " << report.index.str() << " differs from expected "
            << report.expectation.expected_gcd.str() << '\n';
        return kCrossCheckFailure;
      }
      return kSuccess;
    }
    if (table_cmd->parsed()) {
      const CaseExpectation& expectation = find_case(case_id);
      CacheSession cache(config, err);
      GeneratorTable table = generator_table(expectation.spec, config.chern_options(policy));
      for (const auto& row : table.rows)
        if (row.ok())
          cache.record(CacheKey{table.spec.n, table.spec.d, row.partition}, *row.result);
      write_table(out, table, expectation.id, parse_format(format));
      if (table.has_failures()) {
        for (const auto& row : table.rows)
          if (!row.ok()) err << "error: " << row.failure << '\n';
        return kCrossCheckFailure;
      }
      return kSuccess;
    }
    if (conj_cmd->parsed()) {
      ConjectureReport report = explore_conjecture(ell, config.conjecture_options());
      write_conjecture_report(out, report, parse_format(format));
      if (report.duality_failures > 0) {
        err << "error: " << report.duality_failures << " generators fail duality invariance\n";
        return kCrossCheckFailure;
      }
      return kSuccess;
    }
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failure: " << e.what() << '\n';
    return kCrossCheckFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(std::span<const std::string>(args), out, err);
}

}  // namespace schern::cli
