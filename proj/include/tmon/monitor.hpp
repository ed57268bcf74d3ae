// Online three-valued monitor driven by a property automaton and an automaton
// for its negation.

#ifndef TMON_MONITOR_HPP
#define TMON_MONITOR_HPP

#include "tmon/reachability.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tmon {

enum class Verdict : std::uint8_t { unknown, top, bottom };

/// `?`, `TOP` or `BOT`.
std::string_view to_string(Verdict v);

/// The information order: unknown is below both conclusive verdicts.
constexpr bool refines(Verdict lower, Verdict upper) noexcept
{
  return lower == Verdict::unknown || lower == upper;
}

/// Guaranteed minimum times (scaled units) before a TOP, resp. BOT, verdict
/// can be reached. `infinite_time` means never.
struct PredictiveVerdict {
  std::int64_t d_top = 0;
  std::int64_t d_bot = 0;
  friend bool operator==(const PredictiveVerdict&, const PredictiveVerdict&) = default;
};

/// Absolute time in scaled units.
struct TimedEvent {
  std::string symbol;
  std::int64_t time = 0;
};

/// Absolute time known to lie in [lower, upper] model units (natural numbers, lower < upper).
struct SymbolicTimedEvent {
  std::string symbol;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

struct MonitorOptions {
  /// Scaled units per model time unit.
  std::int64_t scale = 1000;
  /// Restrict to time-divergent continuations.
  bool divergence = true;
  /// Precompute predictive regions so that predict() is available.
  bool predict = false;
  /// Drop estimate zones that have left the non-empty set. They can never
  /// come back, and dropping them keeps the estimate bounded.
  bool prune_dead = true;
};

/// Malformed input to the monitor: bad timestamp, unknown symbol, mixed modes.
class MonitorError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Both estimates lost every non-empty state, so the automata are not complementary.
class InconsistentPair : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Monitor {
public:
  Monitor(const Tba& property, const Tba& negation, MonitorOptions options = {});

  Verdict step(const TimedEvent& e);
  /// Time given as a decimal string in model units.
  Verdict step(std::string_view symbol, std::string_view time);
  Verdict step_symbolic(const SymbolicTimedEvent& e);

  Verdict verdict() const noexcept { return verdict_; }
  PredictiveVerdict predict() const;

  const MonitorOptions& options() const noexcept { return options_; }
  std::size_t event_count() const noexcept { return events_; }
  bool symbolic_mode() const noexcept { return mode_ == Mode::symbolic; }

  /// Monitored automata after the divergence product and rescaling.
  const Tba& property_automaton() const noexcept { return prop_.automaton; }
  const Tba& negation_automaton() const noexcept { return neg_.automaton; }
  const StateSet& property_nonempty() const noexcept { return prop_.nonempty; }
  const StateSet& negation_nonempty() const noexcept { return neg_.nonempty; }
  /// Current estimates over the automaton clocks (the absolute-time clock of
  /// symbolic mode is projected away).
  StateSet property_estimate() const { return projected(prop_); }
  StateSet negation_estimate() const { return projected(neg_); }
  std::size_t estimate_zone_count() const noexcept
  {
    return prop_.estimate.zone_count() + neg_.estimate.zone_count();
  }

private:
  enum class Mode : std::uint8_t { none, concrete, symbolic };

  struct Side {
    Tba automaton;
    std::vector<std::optional<SymbolId>> symbol_map;
    EdgeIndex index;
    StateSet nonempty;
    std::optional<ReachResult> region;
    StateSet estimate;
    std::optional<EdgeIndex> symbolic_index;
  };

  Monitor(MonitorOptions options, std::vector<std::string> alphabet, std::pair<Side, Side> sides);
  static std::pair<Side, Side> build_sides(const Tba& property, const Tba& negation,
                                           const MonitorOptions& options);
  static Side make_side(const Tba& source, const std::vector<std::string>& alphabet,
                        const MonitorOptions& options);
  SymbolId symbol_id(std::string_view name) const;
  StateSet projected(const Side& s) const;
  bool live(const Side& s) const;
  bool initially_live(const Side& s) const;
  void advance(Side& s, SymbolId sym, const std::function<Zone(const Zone&)>& delay, const EdgeIndex& index);
  Verdict update_verdict();
  void enter_symbolic();

  MonitorOptions options_;
  std::vector<std::string> alphabet_;
  Side prop_;
  Side neg_;
  Mode mode_ = Mode::none;
  std::size_t events_ = 0;
  std::int64_t last_time_ = 0;
  Zone time_window_{2}; ///< symbolic mode: possible absolute times of the last event
  Verdict verdict_ = Verdict::unknown;
};

} // namespace tmon

#endif // TMON_MONITOR_HPP
