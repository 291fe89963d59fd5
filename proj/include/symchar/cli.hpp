#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symchar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// Environment variable that redirects relative --out paths.
inline constexpr const char* kOutputDirEnv = "SYMCHAR_OUTPUT_DIR";

enum class Command { table, density, reduce, verify, bounds, sample };

struct RunConfig {
  Command command = Command::table;
  std::string n_spec;        // "10" or "10..22"
  std::optional<int> p;
  std::string mode = "exact";  // exact | mod
  int r = 1;
  std::string k_spec;        // comma-separated k values
  std::string mu;            // comma-separated parts
  std::string suite;         // verify suite name
  std::string kind = "restricted";  // bounds kind
  double x = 1.0;            // bounds --kind fp
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string out;           // empty: stdout
  std::string cache_dir;     // table cache, empty: off
  int threads = 1;
  bool trace = false;
  int exact_cap = 20;
  int mod_cap = 26;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive range parsed from "a" or "a..b".
std::pair<int, int> parse_n_range(const std::string& spec);

/// Checks every parameter the command needs; throws UsageError.
void validate(const RunConfig& config);

/// Executes the command. CSV goes to config.out (or `out` when empty),
/// diagnostics to `err`. Returns kExitOk, kExitViolations or kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace symchar::cli
