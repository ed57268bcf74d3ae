// Sets of symbolic states and a transition index shared by the forward and
// backward engines.

#ifndef TMON_SYMBOLIC_HPP
#define TMON_SYMBOLIC_HPP

#include "tmon/federation.hpp"
#include "tmon/tba.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tmon {

struct SymbolicState {
  LocationId location = 0;
  Zone zone;
};

/// location -> federation. Locations without zones hold the empty federation.
class StateSet {
public:
  StateSet(std::size_t location_count, std::size_t dim);

  std::size_t location_count() const noexcept { return sets_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  const Federation& at(LocationId q) const { return sets_.at(q); }

  bool add(LocationId q, const Zone& z) { return sets_.at(q).add(z); }
  void add(LocationId q, const Federation& f);
  /// Adds with a semantic (federation) inclusion check; returns false if already covered.
  bool add_if_new(LocationId q, const Zone& z);

  bool is_empty() const;
  std::size_t zone_count() const;
  std::vector<SymbolicState> states() const;

  [[nodiscard]] StateSet intersect(const StateSet& other) const;
  [[nodiscard]] StateSet unite(const StateSet& other) const;
  [[nodiscard]] StateSet map(const std::function<Zone(const Zone&)>& op, std::size_t new_dim) const;
  bool intersects(const StateSet& other) const;
  bool includes(const StateSet& other) const;
  bool same_set(const StateSet& other) const { return includes(other) && other.includes(*this); }

  /// One line per non-empty location: `name: (zone) | (zone)`.
  std::string to_string(const Tba& a) const;

private:
  std::size_t dim_;
  std::vector<Federation> sets_;
};

/// Transitions with guards compiled to zones of a fixed dimension (at least
/// the automaton's own; extra clocks are unconstrained and never reset).
class EdgeIndex {
public:
  struct Edge {
    LocationId source;
    LocationId target;
    SymbolId symbol;
    ClockMask resets;
    Zone guard;
  };

  EdgeIndex(const Tba& a, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const Edge& edge(std::size_t k) const { return edges_[k]; }
  const std::vector<std::size_t>& outgoing(LocationId q, SymbolId s) const
  {
    return outgoing_[q * symbols_ + s];
  }
  const std::vector<std::size_t>& incoming(LocationId q) const { return incoming_[q]; }
  const std::vector<std::size_t>& outgoing(LocationId q) const { return outgoing_any_[q]; }

private:
  std::size_t dim_;
  std::size_t symbols_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> outgoing_any_;
  std::vector<std::vector<std::size_t>> incoming_;
};

} // namespace tmon

#endif // TMON_SYMBOLIC_HPP
