#include "schern/config.hpp"

#include "schern/errors.hpp"

#include <charconv>
#include <cstdlib>

namespace schern {

namespace {

template <class T>
T parse_number(const std::string& name, const std::string& text) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw PreconditionError(name + ": expected a nonnegative integer, got '" + text + "'");
  return value;
}

}  // namespace

ChernOptions Config::chern_options(MethodPolicy policy) const {
  ChernOptions options;
  options.policy = policy;
  options.enumeration_ceiling = enumeration_ceiling;
  options.crosscheck_ceiling = crosscheck_ceiling;
  options.threads = threads;
  return options;
}

ConjectureOptions Config::conjecture_options() const {
  return ConjectureOptions{ell_ceiling, threads};
}

EnvLookup process_environment() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* value = std::getenv(name.c_str())) return std::string(value);
    return std::nullopt;
  };
}

std::optional<std::filesystem::path> default_cache_path(const EnvLookup& lookup) {
  if (auto xdg = lookup("XDG_CACHE_HOME"); xdg && !xdg->empty())
    return std::filesystem::path(*xdg) / "schern" / "c2.jsonl";
  if (auto home = lookup("HOME"); home && !home->empty())
    return std::filesystem::path(*home) / ".cache" / "schern" / "c2.jsonl";
  return std::nullopt;
}

Config config_from_environment(const EnvLookup& lookup) {
  Config config;
  if (auto v = lookup("SCHERN_ENUM_CEILING"))
    config.enumeration_ceiling = parse_number<std::uint64_t>("SCHERN_ENUM_CEILING", *v);
  if (auto v = lookup("SCHERN_CROSSCHECK_CEILING"))
    config.crosscheck_ceiling = parse_number<std::uint64_t>("SCHERN_CROSSCHECK_CEILING", *v);
  if (auto v = lookup("SCHERN_ELL_CEILING"))
    config.ell_ceiling = parse_number<int>("SCHERN_ELL_CEILING", *v);
  if (auto v = lookup("SCHERN_THREADS"))
    config.threads = parse_number<unsigned>("SCHERN_THREADS", *v);

  auto cache = lookup("SCHERN_CACHE");
  if (cache && (*cache == "off" || cache->empty()))
    config.cache_path.reset();
  else if (cache)
    config.cache_path = *cache;
  else
    config.cache_path = default_cache_path(lookup);
  return config;
}

}  // namespace schern
