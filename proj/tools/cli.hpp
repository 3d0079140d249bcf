#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wojcik/walk.hpp"

namespace wojcik::cli {

enum class Command {
  kSimulate,
  kTimeAverage,
  kLimit,
  kCompare,
  kSpectrum,
  kSeries,
  kStationary,
  kVerify,
};

enum class Format { kCsv, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

struct RunConfig {
  Command command = Command::kVerify;
  double phi = 0.0;
  WalkParams params;  // phi copied in, state already normalized
  std::int64_t steps = 0;
  std::int64_t T = 1;
  std::optional<std::int64_t> xmax;
  std::int64_t order = 0;
  std::string what;    // series: rstar | sqrt1z4 | first-return
  std::string branch;  // stationary: plus | minus
  Format format = Format::kCsv;
  std::string out;     // empty means the provided stream
};

// Parses "p/q" exactly or a decimal literal.
double parse_phi(const std::string& token);

// Parses "re,im" (or a bare real) into a complex number.
Complex parse_complex(const std::string& token);

// Runs a parsed configuration, writing the artifact to `out` (or to
// config.out) and diagnostics to `err`. Returns a process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command-line entry point; args excludes the program name.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

// Invariant suite behind `verify`; writes one line per check.
bool run_verify(std::ostream& report);

}  // namespace wojcik::cli
