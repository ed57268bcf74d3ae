// Backward symbolic analysis over zones: predecessors, backward reachability,
// the Büchi non-emptiness fixpoint and the predictive region used for
// time-to-verdict bounds.

#ifndef TMON_REACHABILITY_HPP
#define TMON_REACHABILITY_HPP

#include "tmon/symbolic.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tmon {

inline constexpr std::int64_t infinite_time = std::numeric_limits<std::int64_t>::max();

struct BackwardOptions {
  /// Delay allowed before each transition. Events have strictly increasing
  /// timestamps, so states reached after an event move on with d > 0.
  DelayMode delay = DelayMode::positive;
  /// Clocks (DBM indices) that hold minus the time still to elapse. They may be
  /// negative and are kept downward closed.
  ClockMask countdown_clocks = 0;
  /// Hard cap on processed symbolic states; 0 derives one from the automaton.
  std::uint64_t max_iterations = 0;
};

class IterationLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the distinct canonical zones per location times |Q|, saturating.
std::uint64_t derived_iteration_bound(const Tba& a, std::size_t dim);

class BackwardAnalysis {
public:
  BackwardAnalysis(const Tba& a, std::size_t dim, BackwardOptions options = {});

  const Tba& automaton() const noexcept { return *a_; }
  std::size_t dim() const noexcept { return index_.dim(); }

  /// Single-transition predecessors of s.
  StateSet pred(const SymbolicState& s) const;
  /// States that reach S with at least one transition.
  StateSet reach(const StateSet& s) const;
  /// States that can visit `targets` infinitely often.
  StateSet reach_infinite(const std::vector<LocationId>& targets) const;

private:
  void pred_into(const SymbolicState& s, const std::function<void(LocationId, const Zone&)>& emit) const;

  const Tba* a_;
  EdgeIndex index_;
  BackwardOptions options_;
  std::uint64_t limit_;
  /// Edge guards with the countdown clocks left unbounded below.
  std::vector<Zone> guards_;
};

StateSet pred(const Tba& a, const SymbolicState& s, const BackwardOptions& options = {});
StateSet reach(const Tba& a, const StateSet& s, const BackwardOptions& options = {});
StateSet reach_infinite(const Tba& a, const std::vector<LocationId>& targets,
                        const BackwardOptions& options = {});
/// reach_infinite over the accepting locations.
StateSet nonempty_states(const Tba& a, const BackwardOptions& options = {});

StateSet intersect_sets(const StateSet& s, const StateSet& t);

enum class ReachKind : std::uint8_t { nonempty_set, complement_reach, plain_reach };

struct ReachResult {
  StateSet states;
  ReachKind kind = ReachKind::plain_reach;
  /// DBM index of the prediction clock, or 0 when there is none.
  std::size_t prediction_clock = 0;
};

/// Reach of the empty-language states with the prediction clock `z` at zero.
/// `a_z` must already carry z. z is stored as minus the elapsed time, so
/// (q, v, -c) is in the result iff from (q, v) an empty-language state is
/// reachable within c time units. The zero-step case is included.
ReachResult predictive_region(const Tba& a_z, ClockId z, const BackwardOptions& options = {});

/// Same region built from the automaton without z and its already computed
/// non-empty set. z is appended as the last clock.
ReachResult predictive_region_from(const Tba& a, const StateSet& nonempty,
                                   const BackwardOptions& options = {});

/// Supremum over the members of `estimate` of the least time after which an
/// empty-language state can be reached; `infinite_time` if some member never
/// can. Exact for point zones, a sound integer lower bound otherwise.
/// `estimate` has the dimension of `region` without the prediction clock.
std::int64_t distance(const ReachResult& region, const StateSet& estimate);

} // namespace tmon

#endif // TMON_REACHABILITY_HPP
