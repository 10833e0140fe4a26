#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "klr/closed_forms.hpp"

namespace klr::cli {

enum class Command { kCompute, kInterval, kSubwords, kVerify, kTable, kConjecture };
enum class Format { kText, kJson, kCsv };
enum class ComputeKind { kRtilde, kR, kBridge, kFactor };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;
}  // namespace exit_code

// Rank ceilings lifted by --force.
inline constexpr int kSweepCeiling = 8;
inline constexpr int kSingleCeiling = 9;

inline constexpr const char* kCacheEnvVar = "KLR_CACHE";
inline constexpr int kFormatVersion = 1;

struct RunConfig {
  Command command = Command::kCompute;
  int n = 0;  // 0 when not given
  std::vector<std::string> perms;
  Format format = Format::kText;
  std::optional<std::filesystem::path> cache;
  int jobs = 1;
  bool force = false;
  ComputeKind compute = ComputeKind::kRtilde;
  Theorem theorem = Theorem::kMain;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> certs;
};

// Either a validated config or the exit code to return immediately (help
// text and usage errors are written to `out` / `err`).
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out,
                                        std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + KLR_CACHE fallback + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace klr::cli
