// Trace text format. One event per line:
//
//   a 10.25        symbol and absolute timestamp
//   a [5,6]        symbol and an interval of natural-number bounds
//
// Blank lines and `#` comments are skipped. A stream must use one form only.

#ifndef TMON_TRACE_HPP
#define TMON_TRACE_HPP

#include "tmon/monitor.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace tmon {

using TraceEvent = std::variant<TimedEvent, SymbolicTimedEvent>;

class TraceError : public std::runtime_error {
public:
  TraceError(std::size_t line, const std::string& message)
      : std::runtime_error("trace line " + std::to_string(line) + ": " + message), line_(line)
  {
  }
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Non-negative decimal `12.345` times `scale`. Throws std::invalid_argument
/// when the text is malformed, negative, overflows, or has more precision than
/// the scale can hold.
std::int64_t scale_decimal(std::string_view text, std::int64_t scale);

/// `units / scale` as a decimal (truncated after 9 fractional digits), or
/// `inf` for infinite_time.
std::string format_scaled(std::int64_t units, std::int64_t scale);

/// nullopt for blank and comment lines. Throws std::invalid_argument on malformed input.
std::optional<TraceEvent> parse_trace_line(std::string_view line, std::int64_t scale);

/// Reads events from a stream and rejects streams that mix the two forms.
class TraceReader {
public:
  TraceReader(std::istream& in, std::int64_t scale) : in_(&in), scale_(scale) {}

  /// Next event, or nullopt at end of input. Throws TraceError.
  std::optional<TraceEvent> next();
  std::size_t line() const noexcept { return line_; }

private:
  std::istream* in_;
  std::int64_t scale_;
  std::size_t line_ = 0;
  std::optional<std::size_t> form_;
};

} // namespace tmon

#endif // TMON_TRACE_HPP
