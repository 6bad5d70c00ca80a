#pragma once

#include "schern/numeric.hpp"
#include "schern/partition.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace schern {

struct CacheKey {
  int n = 0;
  std::optional<int> d;
  Partition partition;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheRecord {
  CacheKey key;
  BigInt n_lambda;
  BigInt dim;
  std::string method;
  std::string version;
};

/// One JSON object per line:
///   {"n":8,"d":2,"partition":[2,1,1],"n_lambda":"156","dim":"378",
///    "method":"both","version":"0.1.0"}
/// "d" is null for keys without a group quotient.
std::string to_json_line(const CacheRecord& record);
std::optional<CacheRecord> parse_json_line(const std::string& line);

/// Append-only JSON-lines result cache. Appends take an exclusive advisory
/// lock on the file. A stored value is a claim: recording a different value
/// for an existing key throws CrossCheckFailure.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  std::optional<CacheRecord> lookup(const CacheKey& key) const;

  /// Verifies against an existing record, else appends. Returns true if the
  /// record was new.
  bool record(const CacheRecord& rec);

  std::size_t size() const { return records_.size(); }
  std::size_t malformed_lines() const { return malformed_; }

 private:
  void append_line(const std::string& line);

  std::filesystem::path path_;
  std::map<CacheKey, CacheRecord> records_;
  std::size_t malformed_ = 0;
};

}  // namespace schern
