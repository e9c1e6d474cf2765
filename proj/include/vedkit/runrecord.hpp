#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace vedkit {

using Json = nlohmann::json;

/// One self-describing record per CLI run.
struct RunRecord {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  Json seeds = Json::object();
  Json conventionFlags = Json::object();
  std::string timestamp;
  bool cacheHit = false;

  Json toJson() const;
  static RunRecord fromJson(const Json& j);

  /// Everything except the timestamp and the cache marker: the part that must
  /// be identical across reruns with the same seeds and flags.
  Json payload() const;
};

std::string iso8601_now();

/// Integers that may exceed 64 bits are emitted as JSON numbers when they
/// fit and as decimal strings otherwise.
Json mpz_to_json(const mpz_class& z);
mpz_class mpz_from_json(const Json& j);

/// Append-only line-delimited record store keyed by (command, canonicalized
/// parameters). Concurrent readers are safe; there is a single writer.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  const std::string& path() const { return path_; }

  std::optional<RunRecord> lookup(const std::string& command, const Json& parameters) const;
  void append(const RunRecord& record);

  static std::string keyOf(const std::string& command, const Json& parameters);

 private:
  std::string path_;
};

}  // namespace vedkit
