#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "reinhardt/enumerate.hpp"

namespace reinhardt {

namespace {

constexpr int kCacheVersion = 1;

std::string cache_file_name(int n) {
  return "reinhardt-" + std::to_string(n) + ".v" + std::to_string(kCacheVersion) + ".jsonl";
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

nlohmann::json polygon_record(const Composition& c, const Classification& cls) {
  nlohmann::json j;
  j["composition"] = c.parts();
  j["kind"] = cls.is_periodic() ? "periodic" : "sporadic";
  j["periods"] = cls.periods;
  return j;
}

}  // namespace

void store_cache(const EnumerationResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string body;
  for (const auto& [c, cls] : result.polygons) {
    body += polygon_record(c, cls).dump();
    body += '\n';
  }

  nlohmann::json trailer;
  trailer["trailer"]["version"] = kCacheVersion;
  trailer["trailer"]["n"] = result.n;
  trailer["trailer"]["E"] = result.counts.total;
  trailer["trailer"]["E0"] = result.counts.periodic;
  trailer["trailer"]["E1"] = result.counts.sporadic;
  auto strata = nlohmann::json::array();
  for (const auto& [m, s] : result.by_largest_part)
    strata.push_back({m, s.total, s.sporadic});
  trailer["trailer"]["by_largest_part"] = strata;
  trailer["trailer"]["checksum"] = to_hex(fnv1a64(body));

  const std::filesystem::path path = dir / cache_file_name(result.n);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw cache_error("cannot write cache file " + path.string());
  out << body << trailer.dump() << '\n';
  if (!out) throw cache_error("short write to cache file " + path.string());
}

std::optional<EnumerationResult> load_cache(int n, const std::filesystem::path& dir) {
  const std::filesystem::path path = dir / cache_file_name(n);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  if (lines.empty()) throw cache_error("cache file " + path.string() + " is empty");

  nlohmann::json trailer;
  try {
    trailer = nlohmann::json::parse(lines.back());
  } catch (const nlohmann::json::exception& e) {
    throw cache_error("cache file " + path.string() + ": unparseable trailer: " + e.what());
  }
  if (!trailer.contains("trailer"))
    throw cache_error("cache file " + path.string() + " has no trailer record (truncated?)");
  const nlohmann::json& meta = trailer["trailer"];

  try {
    if (meta.at("version").get<int>() != kCacheVersion)
      throw cache_error("cache file " + path.string() + ": version mismatch");
    if (meta.at("n").get<int>() != n)
      throw cache_error("cache file " + path.string() + ": n mismatch");

    std::string body;
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
      body += lines[i];
      body += '\n';
    }
    if (meta.at("checksum").get<std::string>() != to_hex(fnv1a64(body)))
      throw cache_error("cache file " + path.string() + ": checksum mismatch");

    EnumerationResult result;
    result.n = n;
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
      nlohmann::json rec = nlohmann::json::parse(lines[i]);
      Composition c(rec.at("composition").get<std::vector<int>>());
      Classification cls;
      cls.periods = rec.at("periods").get<std::vector<int>>();
      cls.kind = rec.at("kind").get<std::string>() == "periodic" ? Periodicity::periodic
                                                                 : Periodicity::sporadic;
      if (cls.is_periodic() == cls.periods.empty())
        throw cache_error("cache file " + path.string() + ": inconsistent record");
      auto& stratum = result.by_largest_part[c.largest_part()];
      stratum.total += 1;
      result.counts.total += 1;
      if (cls.is_periodic()) {
        result.counts.periodic += 1;
      } else {
        result.counts.sporadic += 1;
        stratum.sporadic += 1;
      }
      result.polygons.emplace_back(std::move(c), std::move(cls));
    }
    if (result.counts.total != meta.at("E").get<std::int64_t>() ||
        result.counts.periodic != meta.at("E0").get<std::int64_t>() ||
        result.counts.sporadic != meta.at("E1").get<std::int64_t>())
      throw cache_error("cache file " + path.string() + ": counts disagree with records");
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw cache_error("cache file " + path.string() + ": malformed record: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw cache_error("cache file " + path.string() + ": invalid record: " + e.what());
  }
}

}  // namespace reinhardt
