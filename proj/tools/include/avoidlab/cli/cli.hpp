#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace avoidlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
  std::uint64_t prime = 1000003;
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  std::string output = "auto";  // auto: csv for sweep, json otherwise
  std::string out_path;         // empty: standard output
  unsigned jobs = 0;            // 0: hardware concurrency
};

/// args excludes the program name. Reports go to `out` (or --out), errors
/// and usage text to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int dispatch(int argc, const char* const* argv);

}  // namespace avoidlab::cli
