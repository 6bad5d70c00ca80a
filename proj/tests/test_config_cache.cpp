#include "temp_dir.hpp"

#include "schern/cache.hpp"
#include "schern/config.hpp"
#include "schern/errors.hpp"

#include <doctest.h>

#include <fstream>
#include <map>

using schern::CacheKey;
using schern::CacheRecord;
using schern::Partition;

namespace {

schern::EnvLookup env(std::map<std::string, std::string> vars) {
  return [vars](const std::string& name) -> std::optional<std::string> {
    if (auto it = vars.find(name); it != vars.end()) return it->second;
    return std::nullopt;
  };
}

CacheRecord record(int n, std::optional<int> d, Partition p, int value, int dim) {
  return CacheRecord{CacheKey{n, d, std::move(p)}, value, dim, "both", "test"};
}

std::size_t line_count(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) ++count;
  return count;
}

}  // namespace

TEST_CASE("defaults") {
  auto config = schern::config_from_environment(env({}));
  CHECK(config.enumeration_ceiling == 10'000'000);
  CHECK(config.crosscheck_ceiling == 100'000);
  CHECK(config.ell_ceiling == 5);
  CHECK(config.threads == 0);
  CHECK_FALSE(config.cache_path);
}

TEST_CASE("environment overrides") {
  auto config = schern::config_from_environment(env({{"SCHERN_ENUM_CEILING", "500"},
                                                     {"SCHERN_CROSSCHECK_CEILING", "50"},
                                                     {"SCHERN_ELL_CEILING", "7"},
                                                     {"SCHERN_THREADS", "3"},
                                                     {"SCHERN_CACHE", "/tmp/x.jsonl"}}));
  CHECK(config.enumeration_ceiling == 500);
  CHECK(config.crosscheck_ceiling == 50);
  CHECK(config.ell_ceiling == 7);
  CHECK(config.threads == 3);
  CHECK(config.cache_path == std::filesystem::path("/tmp/x.jsonl"));
  auto options = config.chern_options(schern::MethodPolicy::both);
  CHECK(options.enumeration_ceiling == 500);
  CHECK(options.policy == schern::MethodPolicy::both);
  CHECK(config.conjecture_options().ell_ceiling == 7);

  CHECK_FALSE(schern::config_from_environment(env({{"SCHERN_CACHE", "off"}, {"HOME", "/h"}})).cache_path);
  CHECK(schern::config_from_environment(env({{"HOME", "/h"}})).cache_path ==
        std::filesystem::path("/h/.cache/schern/c2.jsonl"));
  CHECK(schern::config_from_environment(env({{"HOME", "/h"}, {"XDG_CACHE_HOME", "/x"}})).cache_path ==
        std::filesystem::path("/x/schern/c2.jsonl"));
  CHECK_THROWS_AS(schern::config_from_environment(env({{"SCHERN_THREADS", "many"}})),
                  schern::PreconditionError);
  CHECK_THROWS_AS(schern::config_from_environment(env({{"SCHERN_ENUM_CEILING", "-4"}})),
                  schern::PreconditionError);
}

TEST_CASE("json line round trip") {
  for (const auto& rec : {record(8, 2, Partition{2, 1, 1}, 156, 378), record(5, std::nullopt, Partition{}, 0, 1)}) {
    auto line = schern::to_json_line(rec);
    auto parsed = schern::parse_json_line(line);
    REQUIRE(parsed);
    CHECK(parsed->key == rec.key);
    CHECK(parsed->n_lambda == rec.n_lambda);
    CHECK(parsed->dim == rec.dim);
    CHECK(parsed->method == rec.method);
    CHECK(schern::to_json_line(*parsed) == line);
  }
  CHECK(schern::to_json_line(record(8, std::nullopt, Partition{1, 1}, 6, 28)) ==
        R"({"n":8,"d":null,"partition":[1,1],"n_lambda":"6","dim":"28","method":"both","version":"test"})");
  CHECK_FALSE(schern::parse_json_line("not json"));
  CHECK_FALSE(schern::parse_json_line(R"({"n":8})"));
  CHECK_FALSE(schern::parse_json_line(
      R"({"n":8,"d":null,"partition":[1,2],"n_lambda":"6","dim":"28","method":"both"})"));
}

TEST_CASE("cache records, verifies and reloads") {
  TempDir dir;
  auto path = dir.path() / "nested" / "c2.jsonl";
  {
    schern::ResultCache cache(path);
    CHECK(cache.size() == 0);
    CHECK(cache.record(record(8, std::nullopt, Partition{1, 1}, 6, 28)));
    CHECK_FALSE(cache.record(record(8, std::nullopt, Partition{1, 1}, 6, 28)));
    CHECK(cache.record(record(8, 2, Partition{1, 1}, 6, 28)));
    CHECK_THROWS_AS(cache.record(record(8, 2, Partition{1, 1}, 7, 28)), schern::CrossCheckFailure);
    CHECK(cache.lookup(CacheKey{8, 2, Partition{1, 1}})->n_lambda == 6);
    CHECK_FALSE(cache.lookup(CacheKey{8, 3, Partition{1, 1}}));
  }
  CHECK(line_count(path) == 2);
  {
    std::ofstream append(path, std::ios::app);
    append << "garbage\n";
  }
  schern::ResultCache reloaded(path);
  CHECK(reloaded.size() == 2);
  CHECK(reloaded.malformed_lines() == 1);
  CHECK_THROWS_AS(reloaded.record(record(8, std::nullopt, Partition{1, 1}, 5, 28)),
                  schern::CrossCheckFailure);

  {
    std::ofstream append(path, std::ios::app);
    append << schern::to_json_line(record(8, std::nullopt, Partition{1, 1}, 9, 28)) << '\n';
  }
  CHECK_THROWS_AS(schern::ResultCache{path}, schern::CrossCheckFailure);
}
