// Timed Büchi automata and the constructions the monitor builds from them.

#ifndef TMON_TBA_HPP
#define TMON_TBA_HPP

#include "tmon/zone.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmon {

using LocationId = std::uint32_t;
using SymbolId = std::uint32_t;
/// Index into Tba::clocks. The DBM index of clock c is c + 1.
using ClockId = std::uint32_t;

enum class Relation : std::uint8_t { lt, le, eq, ge, gt };

std::string_view to_string(Relation r);

/// x ~ n with n a natural number in model units.
struct Atom {
  ClockId clock = 0;
  Relation rel = Relation::le;
  std::int64_t constant = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Transition {
  LocationId source = 0;
  LocationId target = 0;
  SymbolId symbol = 0;
  std::vector<ClockId> resets;
  std::vector<Atom> guard; ///< conjunction; empty means true

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Location {
  std::string name;
  bool initial = false;
  bool accepting = false;

  friend bool operator==(const Location&, const Location&) = default;
};

/// (Q, Q0, Σ, C, Δ, F). Every name is resolved to a dense id.
struct Tba {
  std::vector<std::string> alphabet;
  std::vector<std::string> clocks;
  std::vector<Location> locations;
  std::vector<Transition> transitions;

  std::size_t clock_count() const noexcept { return clocks.size(); }
  /// DBM dimension: clocks plus the reference clock.
  std::size_t dim() const noexcept { return clocks.size() + 1; }

  std::optional<LocationId> find_location(std::string_view name) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  std::optional<ClockId> find_clock(std::string_view name) const;

  std::vector<LocationId> initial_locations() const;
  std::vector<LocationId> accepting_locations() const;
  std::int64_t max_constant() const;

  /// Checks the structural invariants; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const Tba&, const Tba&) = default;
};

/// The guard as a zone of dimension `dim` (>= a.dim()); extra clocks are unconstrained.
Zone guard_zone(const std::vector<Atom>& guard, std::size_t dim);
ClockMask reset_mask(const std::vector<ClockId>& resets);

/// Renders in the automaton file format; parse_tba(to_text(a)) == a.
std::string to_text(const Tba& a);

class AlphabetMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A ⊗ B. Clocks of `b` whose name collides with a clock of `a` get `clock_suffix`
/// appended. Only product locations reachable in the location graph from the
/// initial locations are kept. Location (p, q, k) is named `p_q_k`.
Tba product(const Tba& a, const Tba& b, std::string_view clock_suffix = "_2");

/// Locations A (initial, accepting) and B, one clock z; accepts exactly the
/// time-divergent words over `alphabet` (with threshold `unit` model time).
Tba divergence_automaton(const std::vector<std::string>& alphabet, std::int64_t unit = 1);

/// Appends one clock that is never reset and never tested. Returns its id in `fresh`.
Tba add_fresh_clock(const Tba& a, std::string_view base_name = "z", ClockId* fresh = nullptr);

/// Multiplies every guard constant by `scale`.
Tba rescale(const Tba& a, std::int64_t scale);

} // namespace tmon

#endif // TMON_TBA_HPP
