#pragma once

#include "schern/chern.hpp"
#include "schern/repring.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace schern {

// Runtime settings. Precedence: command-line flags > SCHERN_* environment
// variables > these defaults.
//
//   SCHERN_ENUM_CEILING        max dim for tableau enumeration
//   SCHERN_CROSSCHECK_CEILING  max dim for the automatic enumeration cross-check
//   SCHERN_ELL_CEILING         largest ell accepted by `conjecture`
//   SCHERN_THREADS             worker threads (0 = hardware)
//   SCHERN_CACHE               cache file path, or "off"
struct Config {
  std::uint64_t enumeration_ceiling = 10'000'000;
  std::uint64_t crosscheck_ceiling = 100'000;
  int ell_ceiling = 5;
  unsigned threads = 0;
  std::optional<std::filesystem::path> cache_path;  // empty = caching off

  ChernOptions chern_options(MethodPolicy policy = MethodPolicy::automatic) const;
  ConjectureOptions conjecture_options() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_environment();

/// Defaults overridden by SCHERN_* variables. Throws PreconditionError on
/// malformed values.
Config config_from_environment(const EnvLookup& lookup = process_environment());

/// $XDG_CACHE_HOME/schern/c2.jsonl, else $HOME/.cache/schern/c2.jsonl.
std::optional<std::filesystem::path> default_cache_path(const EnvLookup& lookup);

}  // namespace schern
