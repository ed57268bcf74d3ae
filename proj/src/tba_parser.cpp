#include "tmon/tba_parser.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tmon {

bool is_identifier(std::string_view s)
{
  if (s.empty())
    return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front()))
    return false;
  for (char c : s)
    if (!alpha(c) && !digit(c))
      return false;
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

class Parser {
public:
  Tba run(std::string_view text)
  {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos)
        end = text.size();
      ++line_;
      std::string_view line = text.substr(pos, end - pos);
      if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      statement(split_ws(line));
      pos = end + 1;
    }
    finish();
    return std::move(tba_);
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

  std::string identifier(std::string_view token, const char* what) const
  {
    if (!is_identifier(token))
      fail(std::string("invalid ") + what + " name '" + std::string(token) + "'");
    return std::string(token);
  }

  void statement(const std::vector<std::string_view>& tok)
  {
    if (tok.empty())
      return;
    const std::string_view kw = tok[0];
    if (kw == "alphabet")
      alphabet(tok);
    else if (kw == "clock")
      clock(tok);
    else if (kw == "location")
      location(tok);
    else if (kw == "edge")
      edge(tok);
    else
      fail("unknown statement '" + std::string(kw) + "'");
  }

  void alphabet(const std::vector<std::string_view>& tok)
  {
    if (have_alphabet_)
      fail("alphabet declared twice");
    if (tok.size() < 2)
      fail("empty alphabet");
    have_alphabet_ = true;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      std::string s = identifier(tok[k], "symbol");
      if (tba_.find_symbol(s))
        fail("duplicate symbol '" + s + "'");
      tba_.alphabet.push_back(std::move(s));
    }
  }

  void clock(const std::vector<std::string_view>& tok)
  {
    if (tok.size() != 2)
      fail("expected 'clock <name>'");
    std::string c = identifier(tok[1], "clock");
    if (tba_.find_clock(c))
      fail("duplicate clock '" + c + "'");
    tba_.clocks.push_back(std::move(c));
  }

  void location(const std::vector<std::string_view>& tok)
  {
    if (tok.size() < 2)
      fail("expected 'location <name> [init] [accept]'");
    Location l{identifier(tok[1], "location"), false, false};
    if (tba_.find_location(l.name))
      fail("duplicate location '" + l.name + "'");
    for (std::size_t k = 2; k < tok.size(); ++k) {
      if (tok[k] == "init" && !l.initial)
        l.initial = true;
      else if (tok[k] == "accept" && !l.accepting)
        l.accepting = true;
      else
        fail("unexpected location attribute '" + std::string(tok[k]) + "'");
    }
    tba_.locations.push_back(std::move(l));
  }

  LocationId location_ref(std::string_view name) const
  {
    if (auto q = tba_.find_location(name))
      return *q;
    fail("unknown location '" + std::string(name) + "'");
  }

  ClockId clock_ref(std::string_view name) const
  {
    if (auto c = tba_.find_clock(name))
      return *c;
    fail("unknown clock '" + std::string(name) + "'");
  }

  Atom atom(std::string_view text) const
  {
    std::size_t op = 0;
    while (op < text.size() && text[op] != '<' && text[op] != '>' && text[op] != '=')
      ++op;
    if (op == 0 || op == text.size())
      fail("malformed guard atom '" + std::string(text) + "'");
    Atom a;
    a.clock = clock_ref(text.substr(0, op));
    std::string_view rest = text.substr(op);
    std::size_t len = 1;
    if (rest.starts_with("<=")) {
      a.rel = Relation::le;
      len = 2;
    } else if (rest.starts_with(">=")) {
      a.rel = Relation::ge;
      len = 2;
    } else if (rest.starts_with("==")) {
      a.rel = Relation::eq;
      len = 2;
    } else if (rest.starts_with("<")) {
      a.rel = Relation::lt;
    } else if (rest.starts_with(">")) {
      a.rel = Relation::gt;
    } else {
      fail("unknown relation in '" + std::string(text) + "'");
    }
    const std::string_view num = rest.substr(len);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), a.constant);
    if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size() || a.constant < 0)
      fail("guard constant must be a natural number in '" + std::string(text) + "'");
    return a;
  }

  void edge(const std::vector<std::string_view>& tok)
  {
    if (!have_alphabet_)
      fail("edge before alphabet declaration");
    if (tok.size() < 4)
      fail("expected 'edge <src> <dst> <sym> [guard ...] [reset ...]'");
    Transition t;
    t.source = location_ref(tok[1]);
    t.target = location_ref(tok[2]);
    if (auto s = tba_.find_symbol(tok[3]))
      t.symbol = *s;
    else
      fail("unknown symbol '" + std::string(tok[3]) + "'");

    bool seen_guard = false, seen_reset = false;
    std::size_t k = 4;
    while (k < tok.size()) {
      if (tok[k] == "guard" && !seen_guard) {
        seen_guard = true;
        std::string joined;
        for (++k; k < tok.size() && tok[k] != "reset"; ++k)
          joined += tok[k];
        if (joined.empty())
          fail("empty guard");
        std::string_view rest = joined;
        while (true) {
          const auto amp = rest.find('&');
          t.guard.push_back(atom(rest.substr(0, amp)));
          if (amp == std::string_view::npos)
            break;
          rest = rest.substr(amp + 1);
        }
      } else if (tok[k] == "reset" && !seen_reset) {
        seen_reset = true;
        for (++k; k < tok.size() && tok[k] != "guard"; ++k) {
          const ClockId c = clock_ref(tok[k]);
          if (std::find(t.resets.begin(), t.resets.end(), c) == t.resets.end())
            t.resets.push_back(c);
        }
        if (t.resets.empty())
          fail("empty reset list");
      } else {
        fail("unexpected token '" + std::string(tok[k]) + "' in edge");
      }
    }
    tba_.transitions.push_back(std::move(t));
  }

  void finish()
  {
    if (!have_alphabet_)
      throw ParseError(line_, "missing alphabet declaration");
    if (tba_.locations.empty())
      throw ParseError(line_, "no locations declared");
    if (tba_.initial_locations().empty())
      throw ParseError(line_, "no initial location");
    tba_.validate();
  }

  Tba tba_;
  std::size_t line_ = 0;
  bool have_alphabet_ = false;
};

} // namespace

Tba parse_tba(std::string_view text) { return Parser().run(text); }

Tba load_tba(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read automaton file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tba(buf.str());
}

} // namespace tmon
