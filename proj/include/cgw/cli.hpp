#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgw/character.hpp"
#include "cgw/classes.hpp"
#include "cgw/group.hpp"

namespace cgw::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kConvention = "left-to-right: (ab)(i) = b(a(i)); [x,y] = x^-1 y^-1 x y";

enum class ExitCode : int { ok = 0, failure = 1, unsupported = 2, cap_exceeded = 3, mismatch = 4 };

struct RunConfig {
  std::string command;  // info, fibers, prop51, zeta, tsystems, components, walk, census, bound-check
  std::string group;
  std::string word = "[x1,x2]";
  std::string mode;  // fibers: formula|brute|both; components: plain|extended
  std::uint32_t k = 2;
  double s = 2;
  std::optional<double> epsilon;  // override for eps(G)
  std::uint64_t seed = 0;
  std::uint64_t steps = 1;
  std::uint64_t burn_in = 1000;
  std::uint64_t samples = 10000;
  std::string format = "json";  // json|csv|text
  std::string cache_dir;        // empty: CGW_CACHE_DIR or no cache

  // "key=value" pairs joined by ';' in a fixed order; excludes the cache directory.
  std::string canonical() const;
  static RunConfig from_canonical(const std::string& text);
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

struct Report {
  nlohmann::ordered_json header = nlohmann::ordered_json::object();
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::vector<Table> tables;
  std::vector<std::string> warnings;
  ExitCode exit = ExitCode::ok;
};

void render(const Report& report, const std::string& format, std::ostream& out);

// Character-table cache: one tab-separated record per group digest.
inline constexpr int kCacheVersion = 1;

enum class CacheStatus { disabled, hit, miss, recomputed };
std::string to_string(CacheStatus status);

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir, int version = kCacheVersion);

  // Loads the record for `group` or computes and stores it. A record with a
  // different version, digest, class ordering or checksum is recomputed and a
  // warning is appended.
  CharacterTable get(const Group& group, const ClassData& classes, CacheStatus& status,
                     std::vector<std::string>& warnings) const;

  std::filesystem::path record_path(const Group& group) const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  int version_;
};

std::string serialize_table(const Group& group, const ClassData& classes, const CharacterTable& table,
                            int version = kCacheVersion);
// Throws VerificationError on any inconsistency with `group` and `classes`.
CharacterTable deserialize_table(const std::string& text, const Group& group, const ClassData& classes,
                                 int version = kCacheVersion);

struct RoundtripCheck {
  bool exact_data = false;   // serialized bytes and exact fields identical
  bool downstream = false;   // zeta, delta, epsilon and fibers identical
  bool verdict() const { return exact_data && downstream; }
};
RoundtripCheck cache_roundtrip(const Group& group, const std::filesystem::path& dir);

// Builds the report for `config`; exceptions propagate.
Report build_report(const RunConfig& config);

// Runs one command, writes the report (or an error line to `err`), returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cgw::cli
