#include "tmon/reachability.hpp"

#include <algorithm>
#include <deque>

namespace tmon {

namespace {

constexpr std::uint64_t saturated = std::uint64_t{1} << 62;

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0)
    return 0;
  if (a > saturated / b)
    return saturated;
  return a * b;
}

} // namespace

std::uint64_t derived_iteration_bound(const Tba& a, std::size_t dim)
{
  // Every canonical entry is infinity or a bound whose value lies in
  // [-K, K] with either strictness, K the largest constant in play.
  const std::uint64_t k = static_cast<std::uint64_t>(a.max_constant()) + 1;
  const std::uint64_t per_entry = 4 * k + 3;
  std::uint64_t zones = 1;
  for (std::size_t e = 0; e < dim * (dim - 1); ++e)
    zones = mul_sat(zones, per_entry);
  return std::max<std::uint64_t>(mul_sat(zones, std::max<std::size_t>(a.locations.size(), 1)), 1024);
}

BackwardAnalysis::BackwardAnalysis(const Tba& a, std::size_t dim, BackwardOptions options)
    : a_(&a), index_(a, dim), options_(options),
      limit_(options.max_iterations ? options.max_iterations : derived_iteration_bound(a, dim))
{
  for (std::size_t k = 0; k < a.transitions.size(); ++k) {
    const Zone& g = index_.edge(k).guard;
    guards_.push_back(options.countdown_clocks ? g.relax_lower(options.countdown_clocks) : g);
  }
}

void BackwardAnalysis::pred_into(const SymbolicState& s,
                                 const std::function<void(LocationId, const Zone&)>& emit) const
{
  if (s.zone.is_empty())
    return;
  for (std::size_t k : index_.incoming(s.location)) {
    const EdgeIndex::Edge& e = index_.edge(k);
    Zone z = s.zone;
    for (std::size_t x = 1; x < z.dim() && !z.is_empty(); ++x)
      if (e.resets & clock_bit(x))
        z = z.constrain(x, 0, bound::le_zero);
    if (z.is_empty())
      continue;
    z = z.free(e.resets).intersect(guards_[k]);
    if (z.is_empty())
      continue;
    z = z.past(options_.delay, options_.countdown_clocks);
    if (options_.countdown_clocks)
      z = z.relax_lower(options_.countdown_clocks);
    if (!z.is_empty())
      emit(e.source, z);
  }
}

StateSet BackwardAnalysis::pred(const SymbolicState& s) const
{
  StateSet out(a_->locations.size(), dim());
  pred_into(s, [&](LocationId q, const Zone& z) { out.add(q, z); });
  return out;
}

StateSet BackwardAnalysis::reach(const StateSet& s) const
{
  if (s.dim() != dim() || s.location_count() != a_->locations.size())
    throw std::invalid_argument("state set does not match the automaton");
  StateSet seen(a_->locations.size(), dim());
  std::deque<SymbolicState> waiting;
  auto offer = [&](LocationId q, const Zone& z) {
    if (seen.add_if_new(q, z))
      waiting.push_back({q, z});
  };
  for (const SymbolicState& st : s.states())
    pred_into(st, offer);

  std::uint64_t iterations = 0;
  while (!waiting.empty()) {
    if (++iterations > limit_)
      throw IterationLimitExceeded("backward reachability exceeded its iteration bound");
    const SymbolicState st = std::move(waiting.front());
    waiting.pop_front();
    // Dropped from `seen` means a larger zone arrived later and is queued behind us.
    const Federation& f = seen.at(st.location);
    if (std::find(f.begin(), f.end(), st.zone) == f.end())
      continue;
    pred_into(st, offer);
  }
  return seen;
}

StateSet BackwardAnalysis::reach_infinite(const std::vector<LocationId>& targets) const
{
  StateSet layer(a_->locations.size(), dim());
  for (LocationId q : targets)
    layer.add(q, Zone::universal(dim()));

  StateSet current = layer;
  std::uint64_t rounds = 0;
  while (true) {
    if (++rounds > limit_)
      throw IterationLimitExceeded("non-emptiness fixpoint exceeded its iteration bound");
    StateSet next = reach(current.intersect(layer));
    if (next.same_set(current))
      return next;
    current = std::move(next);
  }
}

StateSet pred(const Tba& a, const SymbolicState& s, const BackwardOptions& options)
{
  return BackwardAnalysis(a, s.zone.dim(), options).pred(s);
}

StateSet reach(const Tba& a, const StateSet& s, const BackwardOptions& options)
{
  return BackwardAnalysis(a, s.dim(), options).reach(s);
}

StateSet reach_infinite(const Tba& a, const std::vector<LocationId>& targets,
                        const BackwardOptions& options)
{
  return BackwardAnalysis(a, a.dim(), options).reach_infinite(targets);
}

StateSet nonempty_states(const Tba& a, const BackwardOptions& options)
{
  return reach_infinite(a, a.accepting_locations(), options);
}

StateSet intersect_sets(const StateSet& s, const StateSet& t) { return s.intersect(t); }

namespace {

// Empty-language states at the prediction clock zero, closed downward in z.
StateSet empty_language_targets(const StateSet& nonempty_z, std::size_t z)
{
  StateSet out(nonempty_z.location_count(), nonempty_z.dim());
  const ClockMask zbit = clock_bit(z);
  for (LocationId q = 0; q < nonempty_z.location_count(); ++q)
    for (const Zone& c : nonempty_z.at(q).complement())
      out.add(q, c.constrain(z, 0, bound::le_zero).relax_lower(zbit));
  return out;
}

ReachResult finish_region(const Tba& a_z, StateSet targets, std::size_t z, BackwardOptions options)
{
  options.countdown_clocks |= clock_bit(z);
  StateSet r = BackwardAnalysis(a_z, a_z.dim(), options).reach(targets);
  return {targets.unite(r), ReachKind::complement_reach, z};
}

} // namespace

ReachResult predictive_region(const Tba& a_z, ClockId z, const BackwardOptions& options)
{
  if (z + 1 != a_z.clocks.size())
    throw std::invalid_argument("the prediction clock must be the last clock");
  BackwardOptions plain = options;
  plain.countdown_clocks = 0;
  const StateSet ne = nonempty_states(a_z, plain);
  return finish_region(a_z, empty_language_targets(ne, z + 1), z + 1, options);
}

ReachResult predictive_region_from(const Tba& a, const StateSet& nonempty, const BackwardOptions& options)
{
  if (nonempty.dim() != a.dim() || nonempty.location_count() != a.locations.size())
    throw std::invalid_argument("non-empty set does not match the automaton");
  const Tba a_z = add_fresh_clock(a, "z");
  const std::size_t z = a.dim();
  // z plays no part in non-emptiness, so the set lifts by adding z unconstrained.
  const StateSet ne_z = nonempty.map([](const Zone& zone) { return zone.add_clock(false); }, z + 1);
  return finish_region(a_z, empty_language_targets(ne_z, z), z, options);
}

namespace {

Zone with_countdown(const Zone& e, std::size_t z, std::int64_t c)
{
  return e.add_clock(true)
      .constrain(z, 0, bound::make(-c, false))
      .constrain(0, z, bound::make(c, false));
}

std::int64_t point_distance(const Federation& r, const Zone& e, std::size_t z)
{
  const Zone ez = e.add_clock(true);
  std::int64_t best = infinite_time;
  for (const Zone& rz : r) {
    const Zone meet = ez.intersect(rz);
    if (meet.is_empty())
      continue;
    const raw_t top = meet.upper(z);
    if (bound::is_infinite(top))
      continue;
    best = std::min(best, std::max<std::int64_t>(0, -bound::value(top)));
  }
  return best;
}

std::int64_t threshold_distance(const Federation& r, const Zone& e, std::size_t z)
{
  const Federation projected = r.map([z](const Zone& rz) { return rz.remove_clock(z); }, z);
  if (!projected.includes(e))
    return infinite_time;
  auto covered = [&](std::int64_t c) { return r.includes(with_countdown(e, z, c)); };
  if (covered(0))
    return 0;
  std::int64_t lo = 0, hi = 1;
  while (!covered(hi)) {
    lo = hi;
    if (hi > (std::int64_t{1} << 60))
      return lo;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (covered(mid) ? hi : lo) = mid;
  }
  // Constants are integers, so the infimum of the covered values is lo or hi.
  const Zone between = e.add_clock(true)
                           .constrain(z, 0, bound::make(-lo, true))
                           .constrain(0, z, bound::make(hi, true));
  return r.includes(between) ? lo : hi;
}

} // namespace

std::int64_t distance(const ReachResult& region, const StateSet& estimate)
{
  const std::size_t z = region.prediction_clock;
  if (z == 0 || region.states.dim() != estimate.dim() + 1 || z != estimate.dim()
      || region.states.location_count() != estimate.location_count())
    throw std::invalid_argument("estimate and predictive region dimensions do not match");
  std::int64_t worst = 0;
  for (LocationId q = 0; q < estimate.location_count(); ++q) {
    for (const Zone& e : estimate.at(q)) {
      const Federation& r = region.states.at(q);
      const std::int64_t d = e.is_point() ? point_distance(r, e, z) : threshold_distance(r, e, z);
      if (d == infinite_time)
        return infinite_time;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

} // namespace tmon
