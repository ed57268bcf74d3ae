#include "tmon/federation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tmon {

Federation::Federation(const Zone& z) : dim_(z.dim()) { add(z); }

bool Federation::add(const Zone& z)
{
  if (z.dim() != dim_)
    throw std::invalid_argument("federation dimension mismatch");
  if (z.is_empty())
    return false;
  for (const Zone& member : zones_)
    if (member.includes(z))
      return false;
  std::erase_if(zones_, [&](const Zone& member) { return z.includes(member); });
  zones_.push_back(z);
  return true;
}

Federation Federation::unite(const Federation& other) const
{
  Federation out = *this;
  for (const Zone& z : other.zones_)
    out.add(z);
  return out;
}

Federation Federation::intersect(const Zone& z) const
{
  Federation out(dim_);
  for (const Zone& member : zones_)
    out.add(member.intersect(z));
  return out;
}

Federation Federation::intersect(const Federation& other) const
{
  Federation out(dim_);
  for (const Zone& a : zones_)
    for (const Zone& b : other.zones_)
      out.add(a.intersect(b));
  return out;
}

std::vector<Zone> subtract(const Zone& z, const Zone& cut)
{
  if (z.dim() != cut.dim())
    throw std::invalid_argument("zone dimension mismatch");
  if (z.is_empty())
    return {};
  if (!z.intersects(cut))
    return {z};
  std::vector<Zone> pieces;
  Zone rest = z;
  const std::size_t n = z.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      const raw_t b = cut.at(i, j);
      if (bound::is_infinite(b) || b >= rest.at(i, j))
        continue;
      // Part of `rest` violating x_i - x_j ≺ b, i.e. x_j - x_i ≺' -b.
      Zone outside = rest.constrain(j, i, bound::negate(b));
      if (!outside.is_empty())
        pieces.push_back(std::move(outside));
      rest = rest.constrain(i, j, b);
      if (rest.is_empty())
        return pieces;
    }
  }
  return pieces;
}

Federation Federation::subtract(const Zone& cut) const
{
  Federation out(dim_);
  for (const Zone& member : zones_)
    for (Zone& piece : tmon::subtract(member, cut))
      out.add(piece);
  return out;
}

Federation Federation::subtract(const Federation& other) const
{
  Federation out = *this;
  for (const Zone& cut : other.zones_) {
    if (out.is_empty())
      break;
    out = out.subtract(cut);
  }
  return out;
}

Federation Federation::complement() const
{
  return Federation::universal(dim_).subtract(*this);
}

Federation Federation::map(const std::function<Zone(const Zone&)>& op, std::size_t new_dim) const
{
  Federation out(new_dim);
  for (const Zone& z : zones_)
    out.add(op(z));
  return out;
}

bool Federation::includes(const Zone& z) const
{
  if (z.is_empty())
    return true;
  for (const Zone& member : zones_)
    if (member.includes(z))
      return true;
  return Federation(z).subtract(*this).is_empty();
}

bool Federation::includes(const Federation& other) const
{
  for (const Zone& z : other.zones_)
    if (!includes(z))
      return false;
  return true;
}

bool Federation::intersects(const Zone& z) const
{
  return std::any_of(zones_.begin(), zones_.end(), [&](const Zone& m) { return m.intersects(z); });
}

bool Federation::intersects(const Federation& other) const
{
  return std::any_of(other.zones_.begin(), other.zones_.end(),
                     [&](const Zone& z) { return intersects(z); });
}

std::string Federation::to_string(std::span<const std::string> clock_names) const
{
  if (zones_.empty())
    return "false";
  std::ostringstream out;
  for (std::size_t k = 0; k < zones_.size(); ++k)
    out << (k ? " | " : "") << "(" << zones_[k].to_string(clock_names) << ")";
  return out.str();
}

} // namespace tmon
