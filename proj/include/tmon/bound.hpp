// Difference bounds for DBM entries.
//
// A bound (c, <) or (c, <=) is packed into one integer as 2*c + (non-strict ? 1 : 0),
// so that the natural integer order is the bound order and min() is a plain
// comparison. Infinity is the largest representable value.

#ifndef TMON_BOUND_HPP
#define TMON_BOUND_HPP

#include <cstdint>
#include <limits>
#include <string>

namespace tmon {

using raw_t = std::int64_t;

namespace bound {

inline constexpr raw_t infinity = std::numeric_limits<raw_t>::max();

/// Packs a finite bound.
constexpr raw_t make(std::int64_t value, bool strict) noexcept
{
  return value * 2 + (strict ? 0 : 1);
}

inline constexpr raw_t le_zero = make(0, false);
inline constexpr raw_t lt_zero = make(0, true);

constexpr bool is_infinite(raw_t b) noexcept { return b == infinity; }

constexpr bool is_strict(raw_t b) noexcept { return (b & 1) == 0; }

/// Numeric part of a finite bound. Arithmetic shift keeps negative values exact.
constexpr std::int64_t value(raw_t b) noexcept { return b >> 1; }

/// (a, s) + (b, s') = (a + b, s or s'), saturating at infinity.
constexpr raw_t add(raw_t a, raw_t b) noexcept
{
  if (a == infinity || b == infinity)
    return infinity;
  return ((a & ~raw_t{1}) + (b & ~raw_t{1})) | (a & b & 1);
}

/// The bound of the negated constraint: not (x - y <= c) is y - x < -c.
constexpr raw_t negate(raw_t b) noexcept { return make(-value(b), !is_strict(b)); }

constexpr raw_t strict_of(raw_t b) noexcept { return b == infinity ? b : (b & ~raw_t{1}); }

std::string to_string(raw_t b);

} // namespace bound
} // namespace tmon

#endif // TMON_BOUND_HPP
