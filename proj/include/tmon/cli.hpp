// Command-line driver: loads an automaton pair and prints one verdict line per event.

#ifndef TMON_CLI_HPP
#define TMON_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace tmon {

struct RunConfig {
  std::filesystem::path property;
  std::filesystem::path negation;
  std::int64_t scale = 1000;
  bool divergence = true;
  bool predict = false;
  /// Path of the trace, or `-` for the provided input stream.
  std::string input = "-";
  bool stop_on_conclusive = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 2;
inline constexpr int inconsistent_pair = 3;
} // namespace exit_code

/// Prints `<index> <verdict>` per event, or with prediction
/// `<index> <verdict> d_top=<v> d_bot=<v>`, flushing after every line.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tmon

#endif // TMON_CLI_HPP
