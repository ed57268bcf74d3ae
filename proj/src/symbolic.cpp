#include "tmon/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace tmon {

StateSet::StateSet(std::size_t location_count, std::size_t dim)
    : dim_(dim), sets_(location_count, Federation(dim))
{
}

void StateSet::add(LocationId q, const Federation& f)
{
  for (const Zone& z : f)
    sets_.at(q).add(z);
}

bool StateSet::add_if_new(LocationId q, const Zone& z)
{
  Federation& f = sets_.at(q);
  if (f.includes(z))
    return false;
  f.add(z);
  return true;
}

bool StateSet::is_empty() const
{
  for (const Federation& f : sets_)
    if (!f.is_empty())
      return false;
  return true;
}

std::size_t StateSet::zone_count() const
{
  std::size_t n = 0;
  for (const Federation& f : sets_)
    n += f.size();
  return n;
}

std::vector<SymbolicState> StateSet::states() const
{
  std::vector<SymbolicState> out;
  for (LocationId q = 0; q < sets_.size(); ++q)
    for (const Zone& z : sets_[q])
      out.push_back({q, z});
  return out;
}

namespace {

void check_shape(const StateSet& a, const StateSet& b)
{
  if (a.location_count() != b.location_count() || a.dim() != b.dim())
    throw std::invalid_argument("state sets over different automata or dimensions");
}

} // namespace

StateSet StateSet::intersect(const StateSet& other) const
{
  check_shape(*this, other);
  StateSet out(sets_.size(), dim_);
  for (LocationId q = 0; q < sets_.size(); ++q)
    if (!sets_[q].is_empty() && !other.sets_[q].is_empty())
      out.sets_[q] = sets_[q].intersect(other.sets_[q]);
  return out;
}

StateSet StateSet::unite(const StateSet& other) const
{
  check_shape(*this, other);
  StateSet out = *this;
  for (LocationId q = 0; q < sets_.size(); ++q)
    out.add(q, other.sets_[q]);
  return out;
}

StateSet StateSet::map(const std::function<Zone(const Zone&)>& op, std::size_t new_dim) const
{
  StateSet out(sets_.size(), new_dim);
  for (LocationId q = 0; q < sets_.size(); ++q)
    for (const Zone& z : sets_[q])
      out.add(q, op(z));
  return out;
}

bool StateSet::intersects(const StateSet& other) const
{
  check_shape(*this, other);
  for (LocationId q = 0; q < sets_.size(); ++q)
    if (sets_[q].intersects(other.sets_[q]))
      return true;
  return false;
}

bool StateSet::includes(const StateSet& other) const
{
  check_shape(*this, other);
  for (LocationId q = 0; q < sets_.size(); ++q)
    if (!sets_[q].includes(other.sets_[q]))
      return false;
  return true;
}

std::string StateSet::to_string(const Tba& a) const
{
  std::ostringstream out;
  for (LocationId q = 0; q < sets_.size(); ++q) {
    if (sets_[q].is_empty())
      continue;
    const std::string name = q < a.locations.size() ? a.locations[q].name : std::to_string(q);
    out << name << ": " << sets_[q].to_string(a.clocks) << '\n';
  }
  return out.str();
}

EdgeIndex::EdgeIndex(const Tba& a, std::size_t dim)
    : dim_(dim), symbols_(a.alphabet.size()), outgoing_(a.locations.size() * a.alphabet.size()),
      outgoing_any_(a.locations.size()), incoming_(a.locations.size())
{
  if (dim < a.dim())
    throw std::invalid_argument("edge index dimension smaller than the automaton's");
  edges_.reserve(a.transitions.size());
  for (const Transition& t : a.transitions) {
    const std::size_t k = edges_.size();
    edges_.push_back({t.source, t.target, t.symbol, reset_mask(t.resets), guard_zone(t.guard, dim)});
    outgoing_[t.source * symbols_ + t.symbol].push_back(k);
    outgoing_any_[t.source].push_back(k);
    incoming_[t.target].push_back(k);
  }
}

} // namespace tmon
