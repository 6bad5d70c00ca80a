#include "schern/cache.hpp"

#include "schern/errors.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

namespace schern {

std::string to_json_line(const CacheRecord& record) {
  nlohmann::ordered_json j;
  j["n"] = record.key.n;
  j["d"] = record.key.d ? nlohmann::ordered_json(*record.key.d) : nlohmann::ordered_json(nullptr);
  j["partition"] = std::vector<int>(record.key.partition.parts().begin(),
                                    record.key.partition.parts().end());
  j["n_lambda"] = record.n_lambda.str();
  j["dim"] = record.dim.str();
  j["method"] = record.method;
  j["version"] = record.version;
  return j.dump();
}

std::optional<CacheRecord> parse_json_line(const std::string& line) {
  try {
    auto j = nlohmann::json::parse(line);
    CacheRecord record;
    record.key.n = j.at("n").get<int>();
    if (!j.at("d").is_null()) record.key.d = j.at("d").get<int>();
    record.key.partition = Partition(j.at("partition").get<std::vector<int>>());
    record.n_lambda = BigInt(j.at("n_lambda").get<std::string>());
    record.dim = BigInt(j.at("dim").get<std::string>());
    record.method = j.at("method").get<std::string>();
    record.version = j.value("version", "");
    return record;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto record = parse_json_line(line);
    if (!record) {
      ++malformed_;
      continue;
    }
    auto [it, inserted] = records_.emplace(record->key, *record);
    // Conflicting duplicates inside the file are a broken claim.
    if (!inserted && it->second.n_lambda != record->n_lambda)
      throw CrossCheckFailure("cache " + path_.string() + " holds conflicting values for " +
                                  record->key.partition.to_string(),
                              it->second.n_lambda, record->n_lambda);
  }
}

std::optional<CacheRecord> ResultCache::lookup(const CacheKey& key) const {
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

bool ResultCache::record(const CacheRecord& rec) {
  if (auto it = records_.find(rec.key); it != records_.end()) {
    const auto& stored = it->second;
    if (stored.n_lambda != rec.n_lambda || stored.dim != rec.dim)
      throw CrossCheckFailure("recomputed n_lambda " + rec.n_lambda.str() + " for n=" +
                                  std::to_string(rec.key.n) + " " + rec.key.partition.to_string() +
                                  " disagrees with cached " + stored.n_lambda.str() + " in " +
                                  path_.string(),
                              rec.n_lambda, stored.n_lambda);
    return false;
  }
  append_line(to_json_line(rec) + "\n");
  records_.emplace(rec.key, rec);
  return true;
}

void ResultCache::append_line(const std::string& line) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw Error("cannot open cache " + path_.string() + ": " + std::strerror(errno));
  if (::flock(fd, LOCK_EX) != 0) {
    ::close(fd);
    throw Error("cannot lock cache " + path_.string() + ": " + std::strerror(errno));
  }
  const char* data = line.data();
  std::size_t left = line.size();
  bool failed = false;
  while (left > 0) {
    ssize_t written = ::write(fd, data, left);
    if (written < 0) {
      if (errno == EINTR) continue;
      failed = true;
      break;
    }
    data += written;
    left -= static_cast<std::size_t>(written);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
  if (failed) throw Error("write to cache " + path_.string() + " failed");
}

}  // namespace schern
