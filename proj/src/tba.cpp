#include "tmon/tba.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace tmon {

std::string_view to_string(Relation r)
{
  switch (r) {
  case Relation::lt: return "<";
  case Relation::le: return "<=";
  case Relation::eq: return "==";
  case Relation::ge: return ">=";
  case Relation::gt: return ">";
  }
  return "?";
}

namespace {

template <typename T>
std::optional<std::uint32_t> index_of(const std::vector<T>& items, std::string_view name,
                                      auto&& key)
{
  for (std::size_t i = 0; i < items.size(); ++i)
    if (key(items[i]) == name)
      return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

} // namespace

std::optional<LocationId> Tba::find_location(std::string_view name) const
{
  return index_of(locations, name, [](const Location& l) -> const std::string& { return l.name; });
}

std::optional<SymbolId> Tba::find_symbol(std::string_view name) const
{
  return index_of(alphabet, name, [](const std::string& s) -> const std::string& { return s; });
}

std::optional<ClockId> Tba::find_clock(std::string_view name) const
{
  return index_of(clocks, name, [](const std::string& s) -> const std::string& { return s; });
}

std::vector<LocationId> Tba::initial_locations() const
{
  std::vector<LocationId> out;
  for (LocationId q = 0; q < locations.size(); ++q)
    if (locations[q].initial)
      out.push_back(q);
  return out;
}

std::vector<LocationId> Tba::accepting_locations() const
{
  std::vector<LocationId> out;
  for (LocationId q = 0; q < locations.size(); ++q)
    if (locations[q].accepting)
      out.push_back(q);
  return out;
}

std::int64_t Tba::max_constant() const
{
  std::int64_t m = 0;
  for (const Transition& t : transitions)
    for (const Atom& a : t.guard)
      m = std::max(m, a.constant);
  return m;
}

void Tba::validate() const
{
  if (alphabet.empty())
    throw std::invalid_argument("automaton has an empty alphabet");
  if (dim() > max_dimension)
    throw std::invalid_argument("automaton has too many clocks");
  if (std::none_of(locations.begin(), locations.end(), [](const Location& l) { return l.initial; }))
    throw std::invalid_argument("automaton has no initial location");
  for (const Transition& t : transitions) {
    if (t.source >= locations.size() || t.target >= locations.size())
      throw std::invalid_argument("transition endpoint is not a location");
    if (t.symbol >= alphabet.size())
      throw std::invalid_argument("transition symbol is not in the alphabet");
    for (ClockId c : t.resets)
      if (c >= clocks.size())
        throw std::invalid_argument("reset of an unknown clock");
    for (const Atom& a : t.guard) {
      if (a.clock >= clocks.size())
        throw std::invalid_argument("guard on an unknown clock");
      if (a.constant < 0)
        throw std::invalid_argument("guard constant must be a natural number");
    }
  }
}

Zone guard_zone(const std::vector<Atom>& guard, std::size_t dim)
{
  Zone z(dim);
  for (const Atom& a : guard) {
    const std::size_t x = a.clock + 1;
    const std::int64_t n = a.constant;
    switch (a.rel) {
    case Relation::lt: z = z.constrain(x, 0, bound::make(n, true)); break;
    case Relation::le: z = z.constrain(x, 0, bound::make(n, false)); break;
    case Relation::eq:
      z = z.constrain(x, 0, bound::make(n, false)).constrain(0, x, bound::make(-n, false));
      break;
    case Relation::ge: z = z.constrain(0, x, bound::make(-n, false)); break;
    case Relation::gt: z = z.constrain(0, x, bound::make(-n, true)); break;
    }
  }
  return z;
}

ClockMask reset_mask(const std::vector<ClockId>& resets)
{
  ClockMask m = 0;
  for (ClockId c : resets)
    m |= clock_bit(c + 1);
  return m;
}

std::string to_text(const Tba& a)
{
  std::ostringstream out;
  out << "alphabet";
  for (const auto& s : a.alphabet)
    out << ' ' << s;
  out << '\n';
  for (const auto& c : a.clocks)
    out << "clock " << c << '\n';
  for (const auto& l : a.locations) {
    out << "location " << l.name;
    if (l.initial)
      out << " init";
    if (l.accepting)
      out << " accept";
    out << '\n';
  }
  for (const auto& t : a.transitions) {
    out << "edge " << a.locations[t.source].name << ' ' << a.locations[t.target].name << ' '
        << a.alphabet[t.symbol];
    if (!t.guard.empty()) {
      out << " guard ";
      for (std::size_t k = 0; k < t.guard.size(); ++k)
        out << (k ? "&" : "") << a.clocks[t.guard[k].clock] << to_string(t.guard[k].rel)
            << t.guard[k].constant;
    }
    if (!t.resets.empty()) {
      out << " reset";
      for (ClockId c : t.resets)
        out << ' ' << a.clocks[c];
    }
    out << '\n';
  }
  return out.str();
}

Tba product(const Tba& a, const Tba& b, std::string_view clock_suffix)
{
  if (a.alphabet.size() != b.alphabet.size()
      || !std::is_permutation(a.alphabet.begin(), a.alphabet.end(), b.alphabet.begin()))
    throw AlphabetMismatch("automata have different alphabets");

  Tba p;
  p.alphabet = a.alphabet;
  p.clocks = a.clocks;
  std::vector<ClockId> b_clock(b.clocks.size());
  for (std::size_t c = 0; c < b.clocks.size(); ++c) {
    std::string name = b.clocks[c];
    if (a.find_clock(name))
      name += clock_suffix;
    if (std::find(p.clocks.begin(), p.clocks.end(), name) != p.clocks.end())
      throw std::invalid_argument("clock name collision in product: " + name);
    b_clock[c] = static_cast<ClockId>(p.clocks.size());
    p.clocks.push_back(std::move(name));
  }
  // Symbols of b mapped onto a's numbering.
  std::vector<SymbolId> b_symbol(b.alphabet.size());
  for (SymbolId s = 0; s < b.alphabet.size(); ++s)
    b_symbol[s] = *a.find_symbol(b.alphabet[s]);

  // Outgoing transitions per location and symbol.
  auto index = [](const Tba& t, auto&& symbol_of) {
    std::vector<std::vector<std::vector<std::size_t>>> out(
        t.locations.size(), std::vector<std::vector<std::size_t>>(t.alphabet.size()));
    for (std::size_t k = 0; k < t.transitions.size(); ++k)
      out[t.transitions[k].source][symbol_of(t.transitions[k].symbol)].push_back(k);
    return out;
  };
  const auto a_out = index(a, [](SymbolId s) { return s; });
  const auto b_out = index(b, [&](SymbolId s) { return b_symbol[s]; });

  using Key = std::tuple<LocationId, LocationId, int>;
  std::map<Key, LocationId> ids;
  std::deque<Key> work;
  std::set<std::string> names;
  auto intern = [&](const Key& k) {
    auto [it, inserted] = ids.try_emplace(k, static_cast<LocationId>(p.locations.size()));
    if (inserted) {
      const auto [qa, qb, flag] = k;
      std::string name = a.locations[qa].name + "_" + b.locations[qb].name + "_" + std::to_string(flag);
      while (!names.insert(name).second)
        name += "_";
      const bool accepting = (flag == 1 && a.locations[qa].accepting)
                             || (flag == 2 && b.locations[qb].accepting);
      p.locations.push_back({std::move(name), false, accepting});
      work.push_back(k);
    }
    return it->second;
  };

  for (LocationId qa : a.initial_locations())
    for (LocationId qb : b.initial_locations())
      p.locations[intern({qa, qb, 1})].initial = true;

  while (!work.empty()) {
    const auto [qa, qb, flag] = work.front();
    work.pop_front();
    const LocationId src = ids.at({qa, qb, flag});
    int next_flag = flag;
    if (flag == 1 && a.locations[qa].accepting)
      next_flag = 2;
    else if (flag == 2 && b.locations[qb].accepting)
      next_flag = 1;
    for (SymbolId s = 0; s < a.alphabet.size(); ++s) {
      for (std::size_t ka : a_out[qa][s]) {
        const Transition& ta = a.transitions[ka];
        for (std::size_t kb : b_out[qb][s]) {
          const Transition& tb = b.transitions[kb];
          Transition t;
          t.source = src;
          t.target = intern({ta.target, tb.target, next_flag});
          t.symbol = s;
          t.resets = ta.resets;
          for (ClockId c : tb.resets)
            t.resets.push_back(b_clock[c]);
          t.guard = ta.guard;
          for (Atom atom : tb.guard) {
            atom.clock = b_clock[atom.clock];
            t.guard.push_back(atom);
          }
          p.transitions.push_back(std::move(t));
        }
      }
    }
  }
  return p;
}

Tba divergence_automaton(const std::vector<std::string>& alphabet, std::int64_t unit)
{
  if (alphabet.empty())
    throw std::invalid_argument("divergence automaton needs a non-empty alphabet");
  Tba d;
  d.alphabet = alphabet;
  d.clocks = {"z"};
  d.locations = {{"A", true, true}, {"B", false, false}};
  constexpr LocationId A = 0, B = 1;
  for (SymbolId s = 0; s < alphabet.size(); ++s) {
    d.transitions.push_back({A, B, s, {0}, {}});
    d.transitions.push_back({B, A, s, {}, {{0, Relation::ge, unit}}});
    d.transitions.push_back({B, B, s, {}, {{0, Relation::lt, unit}}});
  }
  return d;
}

Tba add_fresh_clock(const Tba& a, std::string_view base_name, ClockId* fresh)
{
  Tba out = a;
  std::string name(base_name);
  for (int k = 1; out.find_clock(name); ++k)
    name = std::string(base_name) + std::to_string(k);
  if (fresh)
    *fresh = static_cast<ClockId>(out.clocks.size());
  out.clocks.push_back(std::move(name));
  return out;
}

Tba rescale(const Tba& a, std::int64_t scale)
{
  if (scale < 1)
    throw std::invalid_argument("scale must be a positive integer");
  Tba out = a;
  for (Transition& t : out.transitions)
    for (Atom& atom : t.guard)
      atom.constant *= scale;
  return out;
}

} // namespace tmon
