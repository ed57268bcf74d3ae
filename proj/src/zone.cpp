#include "tmon/zone.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tmon {

std::string bound::to_string(raw_t b)
{
  if (is_infinite(b))
    return "<inf";
  return (is_strict(b) ? "<" : "<=") + std::to_string(value(b));
}

Zone::Zone(std::size_t dim) : dim_(dim), m_(dim * dim, bound::infinity)
{
  if (dim == 0 || dim > max_dimension)
    throw std::invalid_argument("zone dimension out of range");
  for (std::size_t i = 0; i < dim; ++i) {
    ref(i, i) = bound::le_zero;
    ref(0, i) = bound::le_zero;
  }
}

Zone Zone::zero(std::size_t dim)
{
  Zone z(dim);
  std::fill(z.m_.begin(), z.m_.end(), bound::le_zero);
  return z;
}

Zone Zone::empty(std::size_t dim)
{
  Zone z(dim);
  z.make_empty();
  return z;
}

Zone Zone::from_matrix(std::size_t dim, std::span<const raw_t> matrix)
{
  if (matrix.size() != dim * dim)
    throw std::invalid_argument("matrix size does not match zone dimension");
  Zone z(dim);
  std::copy(matrix.begin(), matrix.end(), z.m_.begin());
  // Clocks range over non-negative reals and the diagonal is trivially zero.
  for (std::size_t i = 0; i < dim; ++i) {
    z.ref(0, i) = std::min(z.ref(0, i), bound::le_zero);
    z.ref(i, i) = std::min(z.ref(i, i), bound::le_zero);
  }
  z.close();
  return z;
}

bool Zone::close()
{
  const std::size_t n = dim_;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const raw_t ik = at(i, k);
      if (bound::is_infinite(ik))
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        const raw_t via = bound::add(ik, at(k, j));
        if (via < at(i, j))
          ref(i, j) = via;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i, i) < bound::le_zero) {
        make_empty();
        return false;
      }
    }
  }
  return true;
}

// Restores canonical form after tightening the single entry (i, j) of a
// canonical matrix. Shortest paths use the new edge at most once.
void Zone::tighten(std::size_t i, std::size_t j, raw_t b)
{
  if (empty_ || b >= at(i, j))
    return;
  if (bound::add(at(j, i), b) < bound::le_zero) {
    make_empty();
    return;
  }
  ref(i, j) = b;
  const std::size_t n = dim_;
  for (std::size_t k = 0; k < n; ++k) {
    const raw_t ki = at(k, i);
    if (bound::is_infinite(ki))
      continue;
    const raw_t kij = bound::add(ki, b);
    for (std::size_t l = 0; l < n; ++l) {
      const raw_t via = bound::add(kij, at(j, l));
      if (via < at(k, l))
        ref(k, l) = via;
    }
  }
}

Zone Zone::up() const
{
  Zone z = *this;
  if (!empty_)
    for (std::size_t i = 1; i < dim_; ++i)
      z.ref(i, 0) = bound::infinity;
  return z;
}

Zone Zone::up_strict() const
{
  Zone z = up();
  if (!empty_)
    for (std::size_t i = 1; i < dim_; ++i)
      z.ref(0, i) = bound::strict_of(z.at(0, i));
  return z;
}

Zone Zone::up_interval(std::int64_t t1, std::int64_t t2) const
{
  if (t1 < 0 || t2 < t1)
    throw std::invalid_argument("delay interval must satisfy 0 <= t1 <= t2");
  Zone z = *this;
  if (empty_)
    return z;
  const raw_t hi = bound::make(t2, false);
  const raw_t lo = bound::make(-t1, false);
  for (std::size_t i = 1; i < dim_; ++i) {
    z.ref(i, 0) = bound::add(z.at(i, 0), hi);
    z.ref(0, i) = bound::add(z.at(0, i), lo);
  }
  return z;
}

Zone Zone::past(DelayMode mode, ClockMask signed_clocks) const
{
  Zone z = *this;
  if (empty_)
    return z;
  for (std::size_t i = 1; i < dim_; ++i) {
    z.ref(0, i) = (signed_clocks & clock_bit(i)) ? bound::infinity : bound::le_zero;
    if (mode == DelayMode::positive)
      z.ref(i, 0) = bound::strict_of(z.at(i, 0));
  }
  z.close();
  return z;
}

Zone Zone::free(ClockMask clocks) const
{
  Zone z = *this;
  if (empty_)
    return z;
  for (std::size_t x = 1; x < dim_; ++x) {
    if (!(clocks & clock_bit(x)))
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == x)
        continue;
      z.ref(x, j) = bound::infinity;
      z.ref(j, x) = z.at(j, 0);
    }
    z.ref(0, x) = bound::le_zero;
  }
  return z;
}

Zone Zone::reset(ClockMask clocks) const
{
  Zone z = *this;
  if (empty_)
    return z;
  for (std::size_t x = 1; x < dim_; ++x) {
    if (!(clocks & clock_bit(x)))
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == x)
        continue;
      z.ref(x, j) = z.at(0, j);
      z.ref(j, x) = z.at(j, 0);
    }
    z.ref(x, 0) = bound::le_zero;
    z.ref(0, x) = bound::le_zero;
  }
  return z;
}

Zone Zone::constrain(std::size_t i, std::size_t j, raw_t b) const
{
  assert(i < dim_ && j < dim_);
  Zone z = *this;
  z.tighten(i, j, b);
  return z;
}

Zone Zone::intersect(const Zone& other) const
{
  if (other.dim_ != dim_)
    throw std::invalid_argument("zone dimension mismatch");
  if (empty_ || other.empty_)
    return empty(dim_);
  Zone z = *this;
  bool changed = false;
  for (std::size_t k = 0; k < m_.size(); ++k) {
    if (other.m_[k] < z.m_[k]) {
      z.m_[k] = other.m_[k];
      changed = true;
    }
  }
  if (changed)
    z.close();
  return z;
}

Zone Zone::relax_lower(ClockMask clocks) const
{
  Zone z = *this;
  if (empty_)
    return z;
  for (std::size_t x = 1; x < dim_; ++x) {
    if (!(clocks & clock_bit(x)))
      continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (j != x)
        z.ref(j, x) = bound::infinity;
  }
  return z;
}

Zone Zone::add_clock(bool is_signed) const
{
  const std::size_t n = dim_ + 1;
  Zone z(n);
  z.empty_ = empty_;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      z.ref(i, j) = at(i, j);
  const std::size_t x = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    z.ref(x, j) = bound::infinity;
    z.ref(j, x) = is_signed ? bound::infinity : at(j, 0);
  }
  z.ref(x, x) = bound::le_zero;
  return z;
}

Zone Zone::remove_clock(std::size_t index) const
{
  if (index == 0 || index >= dim_)
    throw std::invalid_argument("cannot remove the reference clock or a missing clock");
  Zone z(dim_ - 1);
  z.empty_ = empty_;
  std::size_t zi = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i == index)
      continue;
    std::size_t zj = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j == index)
        continue;
      z.ref(zi, zj++) = at(i, j);
    }
    ++zi;
  }
  return z;
}

bool Zone::includes(const Zone& other) const
{
  if (other.dim_ != dim_)
    throw std::invalid_argument("zone dimension mismatch");
  if (other.empty_)
    return true;
  if (empty_)
    return false;
  for (std::size_t k = 0; k < m_.size(); ++k)
    if (other.m_[k] > m_[k])
      return false;
  return true;
}

bool Zone::intersects(const Zone& other) const
{
  if (empty_ || other.empty_)
    return false;
  // Cheap disjointness witness before the full closure.
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (bound::add(at(i, j), other.at(j, i)) < bound::le_zero)
        return false;
  return !intersect(other).is_empty();
}

bool Zone::is_point() const
{
  if (empty_)
    return false;
  for (std::size_t i = 1; i < dim_; ++i) {
    const raw_t up = at(i, 0);
    const raw_t lo = at(0, i);
    if (bound::is_infinite(up) || bound::is_strict(up) || bound::is_strict(lo)
        || bound::value(up) != -bound::value(lo))
      return false;
  }
  return true;
}

std::int64_t Zone::max_constant() const
{
  std::int64_t m = 0;
  if (empty_)
    return m;
  for (raw_t b : m_)
    if (!bound::is_infinite(b))
      m = std::max(m, std::abs(bound::value(b)));
  return m;
}

namespace {

std::string clock_name(std::span<const std::string> names, std::size_t i)
{
  if (i - 1 < names.size())
    return names[i - 1];
  return "x" + std::to_string(i);
}

const char* rel(raw_t b) { return bound::is_strict(b) ? "<" : "<="; }
const char* rel_ge(raw_t b) { return bound::is_strict(b) ? ">" : ">="; }

} // namespace

std::string Zone::to_string(std::span<const std::string> clock_names) const
{
  if (empty_)
    return "false";
  std::vector<std::string> parts;
  for (std::size_t i = 1; i < dim_; ++i) {
    const std::string name = clock_name(clock_names, i);
    const raw_t up = at(i, 0);
    const raw_t lo = at(0, i);
    if (!bound::is_infinite(up) && !bound::is_strict(up) && !bound::is_strict(lo)
        && bound::value(up) == -bound::value(lo)) {
      parts.push_back(name + "==" + std::to_string(bound::value(up)));
      continue;
    }
    if (bound::is_infinite(lo))
      ; // signed clock without lower bound
    else if (lo != bound::le_zero)
      parts.push_back(name + rel_ge(lo) + std::to_string(-bound::value(lo)));
    if (!bound::is_infinite(up))
      parts.push_back(name + rel(up) + std::to_string(bound::value(up)));
  }
  for (std::size_t i = 1; i < dim_; ++i) {
    for (std::size_t j = 1; j < dim_; ++j) {
      if (i == j)
        continue;
      const raw_t b = at(i, j);
      if (bound::is_infinite(b) || b >= bound::add(at(i, 0), at(0, j)))
        continue;
      const raw_t back = at(j, i);
      if (!bound::is_strict(b) && !bound::is_infinite(back) && !bound::is_strict(back)
          && bound::value(back) == -bound::value(b)) {
        if (i < j)
          parts.push_back(clock_name(clock_names, i) + "-" + clock_name(clock_names, j) + "=="
                          + std::to_string(bound::value(b)));
        continue;
      }
      parts.push_back(clock_name(clock_names, i) + "-" + clock_name(clock_names, j) + rel(b)
                      + std::to_string(bound::value(b)));
    }
  }
  if (parts.empty())
    return "true";
  std::ostringstream out;
  for (std::size_t k = 0; k < parts.size(); ++k)
    out << (k ? " & " : "") << parts[k];
  return out.str();
}

std::string Zone::to_string() const { return to_string(std::span<const std::string>{}); }

} // namespace tmon
