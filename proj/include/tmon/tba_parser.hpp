// Line-oriented automaton file format:
//
//   alphabet a b c
//   clock x
//   location q1 init accept
//   location q2
//   edge q1 q2 a reset x
//   edge q2 q1 b guard x<=30
//
// `#` starts a comment. Guards are `<clock><rel><nat>` atoms joined by `&`
// with rel one of < <= == >= >.

#ifndef TMON_TBA_PARSER_HPP
#define TMON_TBA_PARSER_HPP

#include "tmon/tba.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmon {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

Tba parse_tba(std::string_view text);
Tba load_tba(const std::filesystem::path& path);

bool is_identifier(std::string_view s);

} // namespace tmon

#endif // TMON_TBA_PARSER_HPP
