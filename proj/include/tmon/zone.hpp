// Zones over a fixed set of clocks, stored as canonical difference bound matrices.
//
// Index 0 is the reference clock (constant zero); clocks are 1..dim-1. Entry
// (i, j) bounds x_i - x_j. Every non-empty Zone is kept in canonical
// (shortest-path closed) form, so inclusion and emptiness are entrywise tests.
//
// Zones are values: all operations return a new zone and leave the operand alone.

#ifndef TMON_ZONE_HPP
#define TMON_ZONE_HPP

#include "tmon/bound.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tmon {

/// Bit i set means DBM index i (so bit 0, the reference clock, is never used).
using ClockMask = std::uint64_t;

constexpr ClockMask clock_bit(std::size_t index) noexcept { return ClockMask{1} << index; }

inline constexpr std::size_t max_dimension = 63;

enum class DelayMode : std::uint8_t {
  non_negative, ///< d >= 0
  positive,     ///< d > 0; successive events have strictly increasing timestamps
};

class Zone {
public:
  /// The universal zone (all clocks >= 0) of the given dimension.
  explicit Zone(std::size_t dim);

  static Zone universal(std::size_t dim) { return Zone(dim); }
  static Zone zero(std::size_t dim);
  static Zone empty(std::size_t dim);

  /// Builds a zone from a raw row-major matrix and closes it. The matrix need not
  /// be canonical; a negative cycle yields the empty zone.
  static Zone from_matrix(std::size_t dim, std::span<const raw_t> matrix);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t clock_count() const noexcept { return dim_ - 1; }
  bool is_empty() const noexcept { return empty_; }

  raw_t at(std::size_t i, std::size_t j) const noexcept { return m_[i * dim_ + j]; }

  /// Upper bound on clock i, i.e. entry (i, 0).
  raw_t upper(std::size_t i) const noexcept { return at(i, 0); }
  /// Bound on -x_i, i.e. entry (0, i).
  raw_t lower(std::size_t i) const noexcept { return at(0, i); }

  /// Z^↗: arbitrary delay.
  [[nodiscard]] Zone up() const;
  /// Delay by some d > 0.
  [[nodiscard]] Zone up_strict() const;
  /// Uniform delay d in [t1, t2] applied to all clocks.
  [[nodiscard]] Zone up_interval(std::int64_t t1, std::int64_t t2) const;

  /// Z^↘ restricted to non-negative valuations.
  [[nodiscard]] Zone down() const { return past(DelayMode::non_negative); }

  /// Valuations that reach Z after a delay of the given kind. Clocks in
  /// `signed_clocks` are not clipped at zero.
  [[nodiscard]] Zone past(DelayMode mode, ClockMask signed_clocks = 0) const;

  [[nodiscard]] Zone free(ClockMask clocks) const;
  [[nodiscard]] Zone reset(ClockMask clocks) const;

  /// Intersection with x_i - x_j ≺ b.
  [[nodiscard]] Zone constrain(std::size_t i, std::size_t j, raw_t b) const;
  [[nodiscard]] Zone intersect(const Zone& other) const;

  /// Drops every lower bound on the given clocks (they become unbounded below).
  [[nodiscard]] Zone relax_lower(ClockMask clocks) const;

  /// Appends one unconstrained clock. A signed clock may also take negative values.
  [[nodiscard]] Zone add_clock(bool is_signed = false) const;
  /// Existential projection of clock `index`.
  [[nodiscard]] Zone remove_clock(std::size_t index) const;

  /// True iff every valuation of `other` is in this zone.
  bool includes(const Zone& other) const;
  bool intersects(const Zone& other) const;

  /// True iff each clock has a single value.
  bool is_point() const;

  /// Largest absolute finite constant in the matrix.
  std::int64_t max_constant() const;

  /// Conjunction in the form `x<=5 & y-x<3`; `true` for the universal zone,
  /// `false` for the empty one. Names index clocks 1..dim-1.
  std::string to_string(std::span<const std::string> clock_names) const;
  std::string to_string() const;

  friend bool operator==(const Zone& a, const Zone& b)
  {
    if (a.dim_ != b.dim_ || a.empty_ != b.empty_)
      return false;
    return a.empty_ || a.m_ == b.m_;
  }

private:
  raw_t& ref(std::size_t i, std::size_t j) noexcept { return m_[i * dim_ + j]; }
  bool close();
  void tighten(std::size_t i, std::size_t j, raw_t b);
  void make_empty() noexcept { empty_ = true; }

  std::size_t dim_;
  bool empty_ = false;
  std::vector<raw_t> m_;
};

} // namespace tmon

#endif // TMON_ZONE_HPP
