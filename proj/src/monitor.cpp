#include "tmon/monitor.hpp"

#include "tmon/trace.hpp"

#include <algorithm>
#include <future>

namespace tmon {

std::string_view to_string(Verdict v)
{
  switch (v) {
  case Verdict::unknown: return "?";
  case Verdict::top: return "TOP";
  case Verdict::bottom: return "BOT";
  }
  return "?";
}

Monitor::Side Monitor::make_side(const Tba& source, const std::vector<std::string>& alphabet,
                                 const MonitorOptions& options)
{
  Tba a = options.divergence ? product(source, divergence_automaton(source.alphabet)) : source;
  a = rescale(a, options.scale);

  std::vector<std::optional<SymbolId>> map(alphabet.size());
  for (SymbolId s = 0; s < alphabet.size(); ++s)
    map[s] = a.find_symbol(alphabet[s]);

  EdgeIndex index(a, a.dim());
  StateSet nonempty = nonempty_states(a);
  std::optional<ReachResult> region;
  if (options.predict)
    region = predictive_region_from(a, nonempty);
  StateSet estimate(a.locations.size(), a.dim());
  for (LocationId q : a.initial_locations())
    estimate.add(q, Zone::zero(a.dim()));
  return Side{std::move(a), std::move(map), std::move(index), std::move(nonempty),
              std::move(region), std::move(estimate), std::nullopt};
}

std::pair<Monitor::Side, Monitor::Side> Monitor::build_sides(const Tba& property, const Tba& negation,
                                                             const MonitorOptions& options)
{
  if (options.scale < 1)
    throw std::invalid_argument("scale must be a positive integer");
  property.validate();
  negation.validate();
  if (property.alphabet.size() != negation.alphabet.size()
      || !std::is_permutation(property.alphabet.begin(), property.alphabet.end(),
                              negation.alphabet.begin()))
    throw AlphabetMismatch("property and negation automata have different alphabets");
  // The two fixpoints are independent.
  auto neg = std::async(std::launch::async, [&] { return make_side(negation, property.alphabet, options); });
  Side prop = make_side(property, property.alphabet, options);
  return {std::move(prop), neg.get()};
}

Monitor::Monitor(const Tba& property, const Tba& negation, MonitorOptions options)
    : Monitor(options, property.alphabet, build_sides(property, negation, options))
{
}

Monitor::Monitor(MonitorOptions options, std::vector<std::string> alphabet, std::pair<Side, Side> sides)
    : options_(options), alphabet_(std::move(alphabet)), prop_(std::move(sides.first)),
      neg_(std::move(sides.second))
{
  const bool p = initially_live(prop_);
  const bool n = initially_live(neg_);
  if (!p && !n)
    throw InconsistentPair("neither automaton accepts any continuation of the empty word");
  if (!p)
    verdict_ = Verdict::bottom;
  else if (!n)
    verdict_ = Verdict::top;
}

SymbolId Monitor::symbol_id(std::string_view name) const
{
  for (SymbolId s = 0; s < alphabet_.size(); ++s)
    if (alphabet_[s] == name)
      return s;
  throw MonitorError("unknown symbol '" + std::string(name) + "'");
}

StateSet Monitor::projected(const Side& s) const
{
  if (mode_ != Mode::symbolic)
    return s.estimate;
  const std::size_t t = s.automaton.dim();
  return s.estimate.map([t](const Zone& z) { return z.remove_clock(t); }, t);
}

bool Monitor::live(const Side& s) const
{
  const std::size_t dim = s.automaton.dim();
  for (LocationId q = 0; q < s.estimate.location_count(); ++q)
    for (const Zone& z : s.estimate.at(q))
      if (s.nonempty.at(q).intersects(z.dim() == dim ? z : z.remove_clock(dim)))
        return true;
  return false;
}

bool Monitor::initially_live(const Side& s) const
{
  // The first event may occur at time 0, so the first delay is not strict.
  const Zone start = Zone::zero(s.automaton.dim()).up();
  for (LocationId q : s.automaton.initial_locations())
    for (std::size_t k : s.index.outgoing(q)) {
      const EdgeIndex::Edge& e = s.index.edge(k);
      const Zone z = start.intersect(e.guard);
      if (!z.is_empty() && s.nonempty.at(e.target).intersects(z.reset(e.resets)))
        return true;
    }
  return false;
}

void Monitor::advance(Side& s, SymbolId sym, const std::function<Zone(const Zone&)>& delay,
                      const EdgeIndex& index)
{
  const std::optional<SymbolId> local = s.symbol_map[sym];
  const std::size_t dim = s.automaton.dim();
  StateSet next(s.estimate.location_count(), s.estimate.dim());
  for (LocationId q = 0; q < s.estimate.location_count(); ++q) {
    for (const Zone& z : s.estimate.at(q)) {
      const Zone d = delay(z);
      if (d.is_empty() || !local)
        continue;
      for (std::size_t k : index.outgoing(q, *local)) {
        const EdgeIndex::Edge& e = index.edge(k);
        const Zone g = d.intersect(e.guard);
        if (g.is_empty())
          continue;
        const Zone r = g.reset(e.resets);
        if (options_.prune_dead
            && !s.nonempty.at(e.target).intersects(r.dim() == dim ? r : r.remove_clock(dim)))
          continue;
        next.add(e.target, r);
      }
    }
  }
  s.estimate = std::move(next);
}

Verdict Monitor::update_verdict()
{
  const bool p = live(prop_);
  const bool n = live(neg_);
  if (!p && !n)
    throw InconsistentPair("both estimates have an empty language after event "
                           + std::to_string(events_) + "; the automata are not complementary");
  if (verdict_ == Verdict::unknown) {
    if (!p)
      verdict_ = Verdict::bottom;
    else if (!n)
      verdict_ = Verdict::top;
  }
  return verdict_;
}

Verdict Monitor::step(const TimedEvent& e)
{
  if (mode_ == Mode::symbolic)
    throw MonitorError("concrete event after interval events");
  const SymbolId sym = symbol_id(e.symbol);
  if (e.time < 0)
    throw MonitorError("negative timestamp");
  if (events_ > 0 && e.time <= last_time_)
    throw MonitorError("timestamps must strictly increase");
  const std::int64_t d = e.time - last_time_;
  auto delay = [d](const Zone& z) { return z.up_interval(d, d); };
  mode_ = Mode::concrete;
  advance(prop_, sym, delay, prop_.index);
  advance(neg_, sym, delay, neg_.index);
  last_time_ = e.time;
  ++events_;
  return update_verdict();
}

Verdict Monitor::step(std::string_view symbol, std::string_view time)
{
  std::int64_t t = 0;
  try {
    t = scale_decimal(time, options_.scale);
  } catch (const std::invalid_argument& err) {
    throw MonitorError(err.what());
  }
  return step(TimedEvent{std::string(symbol), t});
}

void Monitor::enter_symbolic()
{
  for (Side* s : {&prop_, &neg_}) {
    const std::size_t t = s->automaton.dim();
    s->symbolic_index.emplace(s->automaton, t + 1);
    s->estimate = s->estimate.map(
        [t](const Zone& z) { return z.add_clock(false).constrain(t, 0, bound::le_zero); }, t + 1);
  }
  time_window_ = Zone::zero(2);
  mode_ = Mode::symbolic;
}

Verdict Monitor::step_symbolic(const SymbolicTimedEvent& e)
{
  if (mode_ == Mode::concrete)
    throw MonitorError("interval event after concrete events");
  const SymbolId sym = symbol_id(e.symbol);
  if (e.lower < 0)
    throw MonitorError("negative interval bound");
  if (e.lower >= e.upper)
    throw MonitorError("interval bounds must satisfy l < u");
  if (e.upper > infinite_time / 4 / options_.scale)
    throw MonitorError("interval bound out of range");
  const std::int64_t lo = e.lower * options_.scale;
  const std::int64_t hi = e.upper * options_.scale;
  if (mode_ == Mode::none)
    enter_symbolic();
  const bool first = events_ == 0;

  auto window = [&](const Zone& z, std::size_t t) {
    const Zone d = first ? z.up() : z.up_strict();
    return d.constrain(t, 0, bound::make(hi, false)).constrain(0, t, bound::make(-lo, false));
  };
  const Zone w = window(time_window_, 1);
  if (w.is_empty())
    throw MonitorError("interval [" + std::to_string(e.lower) + "," + std::to_string(e.upper)
                       + "] admits no time after the previous event");
  time_window_ = w;

  for (Side* s : {&prop_, &neg_}) {
    const std::size_t t = s->automaton.dim();
    advance(*s, sym, [&](const Zone& z) { return window(z, t); }, *s->symbolic_index);
  }
  ++events_;
  return update_verdict();
}

PredictiveVerdict Monitor::predict() const
{
  if (!options_.predict)
    throw MonitorError("prediction was not enabled for this monitor");
  if (verdict_ == Verdict::top)
    return {0, infinite_time};
  if (verdict_ == Verdict::bottom)
    return {infinite_time, 0};
  return {distance(*neg_.region, projected(neg_)), distance(*prop_.region, projected(prop_))};
}

} // namespace tmon
