// Brute-force semantics for small automata, independent of the zone engine.
//
// Times are integers counting half model-time units, so every valuation has a
// fractional part of 0 or 1/2 and lies in a region that is easy to compute.

#ifndef TMON_TESTS_ORACLE_HPP
#define TMON_TESTS_ORACLE_HPP

#include "tmon/monitor.hpp"
#include "tmon/tba.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmon::oracle {

class TooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t max_clocks = 3;
/// Per location, as counted by region_bound().
inline constexpr std::uint64_t max_regions = 400000;

/// Location plus region. For clock c, ints[c] is the integer part (max+1 means
/// above the largest constant, and then rank is -1); rank 0 means a zero
/// fractional part, ranks 1.. order the non-zero fractional parts.
struct Region {
  LocationId location = 0;
  std::vector<int> ints;
  std::vector<int> ranks;
  friend auto operator<=>(const Region&, const Region&) = default;
};

/// Finds whether an accepting cycle is reachable from a node, by Tarjan's
/// algorithm on the lazily explored graph. Results are cached across queries.
template <typename Node>
class BuchiSearch {
public:
  using Successors = std::function<std::vector<Node>(const Node&)>;
  using Accepting = std::function<bool(const Node&)>;

  BuchiSearch(Successors succ, Accepting acc) : succ_(std::move(succ)), acc_(std::move(acc)) {}

  bool nonempty(const Node& root)
  {
    if (auto it = done_.find(root); it != done_.end())
      return it->second;
    struct Frame {
      Node node;
      std::vector<Node> succ;
      std::size_t next = 0;
    };
    std::map<Node, Info> info;
    std::vector<Node> stack;
    std::vector<Frame> frames;
    std::size_t counter = 0;

    auto open = [&](const Node& n) {
      info[n] = Info{counter, counter, true, false, false};
      ++counter;
      stack.push_back(n);
      frames.push_back({n, succ_(n), 0});
    };
    open(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      Info& fi = info[f.node];
      if (f.next < f.succ.size()) {
        const Node m = f.succ[f.next++];
        if (m == f.node)
          fi.self_loop = true;
        if (auto d = done_.find(m); d != done_.end()) {
          fi.reaches_good |= d->second;
          continue;
        }
        auto it = info.find(m);
        if (it == info.end()) {
          open(m);
        } else if (it->second.on_stack) {
          fi.low = std::min(fi.low, it->second.index);
        }
        continue;
      }
      // All successors handled.
      const Node node = f.node;
      frames.pop_back();
      Info& ni = info[node];
      if (ni.low == ni.index) {
        std::vector<Node> scc;
        while (true) {
          Node m = stack.back();
          stack.pop_back();
          info[m].on_stack = false;
          scc.push_back(m);
          if (m == node)
            break;
        }
        bool good = false;
        const bool cyclic = scc.size() > 1 || ni.self_loop;
        for (const Node& m : scc)
          good |= info[m].reaches_good || (cyclic && acc_(m));
        for (const Node& m : scc)
          done_[m] = good;
      }
      if (!frames.empty()) {
        Info& pi = info[frames.back().node];
        pi.low = std::min(pi.low, ni.low);
        if (auto d = done_.find(node); d != done_.end())
          pi.reaches_good |= d->second;
      }
    }
    return done_.at(root);
  }

  std::size_t explored() const noexcept { return done_.size(); }

private:
  struct Info {
    std::size_t index, low;
    bool on_stack, self_loop, reaches_good;
  };
  Successors succ_;
  Accepting acc_;
  std::map<Node, bool> done_;
};

class RegionGraph {
public:
  /// Throws TooLarge beyond max_clocks clocks or max_regions. Regions are
  /// fine enough for constants up to max(a.max_constant(), min_constant).
  explicit RegionGraph(const Tba& a, std::int64_t min_constant = 0);

  const Tba& automaton() const noexcept { return a_; }
  std::int64_t constant() const noexcept { return m_; }

  /// Region of a valuation given in half units.
  Region region_of(LocationId q, const std::vector<std::int64_t>& half_units) const;
  Region time_successor(const Region& r) const;
  /// Regions reachable by a delay d >= 0, or d > 0 when `strict`.
  std::vector<Region> delays(const Region& r, bool strict) const;
  bool satisfies(const Region& r, const std::vector<Atom>& guard) const;
  /// Positive delay followed by one transition.
  std::vector<Region> successors(const Region& r) const;

  /// Some accepting run starts from a state in r that was just entered by an event.
  bool nonempty(const Region& r) { return search_.nonempty(r); }
  /// Some accepting run starts from (q, v) at time 0, before any event.
  bool nonempty_initial(LocationId q);
  /// Same as nonempty for the region of a concrete state.
  bool nonempty(LocationId q, const std::vector<std::int64_t>& half_units)
  {
    return nonempty(region_of(q, half_units));
  }

  /// A valuation inside r in units of 1/representative_denominator.
  static constexpr std::int64_t representative_denominator = 12;
  std::vector<std::int64_t> representative(const Region& r) const;

  /// Some run with at least one transition leads from r into a region accepted by `target`.
  bool reaches(const Region& r, const std::function<bool(const Region&)>& target) const;

  /// Closed-form upper bound on the number of regions per location.
  std::uint64_t region_bound() const;

private:
  void normalize(Region& r) const;

  Tba a_;
  std::int64_t m_;
  BuchiSearch<Region> search_;
};

struct ConcreteState {
  LocationId location = 0;
  std::vector<std::int64_t> clocks; ///< half units
  friend auto operator<=>(const ConcreteState&, const ConcreteState&) = default;
};

/// Event at an absolute time in half units.
struct HalfEvent {
  std::string symbol;
  std::int64_t time = 0;
};

std::set<ConcreteState> initial_states(const Tba& a);
/// All successors after delaying `delay` half units and firing a `symbol` transition.
std::set<ConcreteState> step(const Tba& a, const std::set<ConcreteState>& states,
                             std::string_view symbol, std::int64_t delay);
bool satisfies(const ConcreteState& s, const std::vector<Atom>& guard, std::int64_t delay);

/// Verdict on every prefix (including the empty one at index 0). Builds the
/// divergence products itself when `divergence` is set.
std::vector<Verdict> verdicts(const Tba& property, const Tba& negation,
                              const std::vector<HalfEvent>& trace, bool divergence);

/// Acceptance of the ultimately periodic word prefix (loop)^omega. `loop`
/// holds symbols with positive delays in half units (so the word diverges).
bool accepts_lasso(const Tba& a, const std::vector<HalfEvent>& prefix,
                   const std::vector<HalfEvent>& loop);

} // namespace tmon::oracle

#endif // TMON_TESTS_ORACLE_HPP
