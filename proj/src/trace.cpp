#include "tmon/trace.hpp"

#include "tmon/tba_parser.hpp"

#include <charconv>
#include <limits>

namespace tmon {

namespace {

std::string_view trim(std::string_view s)
{
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && space(s.back()))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s)
{
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

std::int64_t parse_natural(std::string_view s)
{
  s = trim(s);
  std::int64_t v = 0;
  if (s.empty() || !all_digits(s))
    throw std::invalid_argument("expected a natural number, got '" + std::string(s) + "'");
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("number out of range: '" + std::string(s) + "'");
  return v;
}

} // namespace

std::int64_t scale_decimal(std::string_view text, std::int64_t scale)
{
  if (scale < 1)
    throw std::invalid_argument("scale must be a positive integer");
  text = trim(text);
  if (!text.empty() && text.front() == '-')
    throw std::invalid_argument("negative time '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)
      || (dot != std::string_view::npos && frac.empty()))
    throw std::invalid_argument("malformed time '" + std::string(text) + "'");

  using wide = __int128;
  const wide limit = std::numeric_limits<std::int64_t>::max();
  wide w = 0;
  for (char c : whole) {
    w = w * 10 + (c - '0');
    if (w > limit)
      throw std::invalid_argument("time out of range '" + std::string(text) + "'");
  }
  // Trailing zeros never affect representability.
  std::string_view f = frac;
  while (!f.empty() && f.back() == '0')
    f.remove_suffix(1);
  if (f.size() > 18)
    throw std::invalid_argument("time '" + std::string(text) + "' is too precise for scale "
                                + std::to_string(scale));
  wide num = 0, den = 1;
  for (char c : f) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  const wide scaled_frac = num * scale;
  if (scaled_frac % den != 0)
    throw std::invalid_argument("time '" + std::string(text) + "' is not representable at scale "
                                + std::to_string(scale));
  const wide total = w * scale + scaled_frac / den;
  if (total > limit)
    throw std::invalid_argument("time out of range '" + std::string(text) + "'");
  return static_cast<std::int64_t>(total);
}

std::string format_scaled(std::int64_t units, std::int64_t scale)
{
  if (units == infinite_time)
    return "inf";
  std::string out;
  if (units < 0) {
    out = "-";
    units = -units;
  }
  out += std::to_string(units / scale);
  std::int64_t rem = units % scale;
  if (rem == 0)
    return out;
  out += '.';
  for (int digits = 0; digits < 9 && rem != 0; ++digits) {
    const __int128 r = static_cast<__int128>(rem) * 10;
    out += static_cast<char>('0' + static_cast<int>(r / scale));
    rem = static_cast<std::int64_t>(r % scale);
  }
  return out;
}

std::optional<TraceEvent> parse_trace_line(std::string_view line, std::int64_t scale)
{
  if (const auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  line = trim(line);
  if (line.empty())
    return std::nullopt;
  std::size_t cut = 0;
  while (cut < line.size() && line[cut] != ' ' && line[cut] != '\t')
    ++cut;
  const std::string_view symbol = line.substr(0, cut);
  const std::string_view rest = trim(line.substr(cut));
  if (!is_identifier(symbol))
    throw std::invalid_argument("invalid symbol '" + std::string(symbol) + "'");
  if (rest.empty())
    throw std::invalid_argument("missing timestamp");

  if (rest.front() == '[') {
    if (rest.back() != ']')
      throw std::invalid_argument("unterminated interval '" + std::string(rest) + "'");
    const std::string_view inner = rest.substr(1, rest.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("interval needs two bounds: '" + std::string(rest) + "'");
    if (trim(inner).starts_with('-') || trim(inner.substr(comma + 1)).starts_with('-'))
      throw std::invalid_argument("negative time in '" + std::string(rest) + "'");
    SymbolicTimedEvent e{std::string(symbol), parse_natural(inner.substr(0, comma)),
                         parse_natural(inner.substr(comma + 1))};
    if (e.lower >= e.upper)
      throw std::invalid_argument("interval bounds must satisfy l < u: '" + std::string(rest) + "'");
    return e;
  }
  for (char c : rest)
    if (c == ' ' || c == '\t')
      throw std::invalid_argument("trailing text after timestamp");
  return TimedEvent{std::string(symbol), scale_decimal(rest, scale)};
}

std::optional<TraceEvent> TraceReader::next()
{
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_;
    std::optional<TraceEvent> e;
    try {
      e = parse_trace_line(text, scale_);
    } catch (const std::invalid_argument& err) {
      throw TraceError(line_, err.what());
    }
    if (!e)
      continue;
    if (form_ && *form_ != e->index())
      throw TraceError(line_, "concrete and interval timestamps mixed in one trace");
    form_ = e->index();
    return e;
  }
  return std::nullopt;
}

} // namespace tmon
