#include "vedkit/runrecord.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

namespace vedkit {

Json RunRecord::toJson() const {
  Json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["results"] = results;
  j["seeds"] = seeds;
  j["conventionFlags"] = conventionFlags;
  j["timestamp"] = timestamp;
  if (cacheHit) j["cacheHit"] = true;
  return j;
}

RunRecord RunRecord::fromJson(const Json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  r.results = j.at("results");
  r.seeds = j.value("seeds", Json::object());
  r.conventionFlags = j.value("conventionFlags", Json::object());
  r.timestamp = j.value("timestamp", "");
  r.cacheHit = j.value("cacheHit", false);
  return r;
}

Json RunRecord::payload() const {
  Json j = toJson();
  j.erase("timestamp");
  j.erase("cacheHit");
  return j;
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {}

std::string ResultCache::keyOf(const std::string& command, const Json& parameters) {
  // nlohmann objects keep keys sorted, so dump() is canonical
  return command + "\x1f" + parameters.dump();
}

std::optional<RunRecord> ResultCache::lookup(const std::string& command, const Json& parameters) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  const std::string key = keyOf(command, parameters);
  std::optional<RunRecord> found;  // last matching record wins
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (!j.contains("command") || !j.contains("parameters")) continue;
    if (keyOf(j["command"].get<std::string>(), j["parameters"]) == key) found = RunRecord::fromJson(j);
  }
  return found;
}

void ResultCache::append(const RunRecord& record) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file for append: " + path_);
  out << record.toJson().dump() << "\n";
}

}  // namespace vedkit
