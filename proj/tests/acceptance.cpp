// Acceptance checks. Prints one PASS/FAIL line per criterion; with arguments,
// runs only the listed criterion numbers. Exit status 1 if any selected check fails.

#include "support/suites.hpp"

#include "tmon/cli.hpp"
#include "tmon/monitor.hpp"
#include "tmon/tba_parser.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

using namespace tmon;

namespace {

std::string data(const std::string& name) { return std::string(TMON_TEST_DATA) + "/" + name; }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string verdicts_text(const std::vector<Verdict>& vs)
{
  std::string s;
  for (Verdict v : vs)
    s += (s.empty() ? "" : ",") + std::string(to_string(v));
  return s;
}

std::vector<Verdict> run_concrete(const std::string& base, const std::vector<std::pair<std::string, std::string>>& trace,
                                  MonitorOptions o = {})
{
  Monitor m(load_tba(data(base + ".tba")), load_tba(data(base + "_neg.tba")), o);
  std::vector<Verdict> out;
  for (const auto& [s, t] : trace)
    out.push_back(m.step(s, t));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome response_verdicts()
{
  const auto start = std::chrono::steady_clock::now();
  const auto on_time = run_concrete("response", {{"a", "10"}, {"b", "20"}});
  const auto late = run_concrete("response", {{"a", "10"}, {"b", "50"}});
  const double took = seconds_since(start);
  const bool ok = on_time == std::vector<Verdict>{Verdict::unknown, Verdict::unknown}
                  && late == std::vector<Verdict>{Verdict::unknown, Verdict::bottom} && took < 1.0;
  return {ok, "(a,10),(b,20) -> " + verdicts_text(on_time) + "; (a,10),(b,50) -> " + verdicts_text(late)
                  + "; " + std::to_string(took) + " s"};
}

Outcome divergence_verdicts()
{
  MonitorOptions weak;
  weak.divergence = false;
  const auto with = run_concrete("eventually_a_after_20", {{"a", "10"}});
  const auto without = run_concrete("eventually_a_after_20", {{"a", "10"}}, weak);
  return {with == std::vector<Verdict>{Verdict::top} && without == std::vector<Verdict>{Verdict::unknown},
          "divergence -> " + verdicts_text(with) + "; no divergence -> " + verdicts_text(without)};
}

struct Shape {
  std::size_t locations, transitions, grouped;
};

// Reachable part only; `grouped` merges transitions that differ only in the symbol.
Shape shape(const Tba& p)
{
  std::set<std::tuple<LocationId, LocationId, std::string, std::vector<ClockId>>> groups;
  for (const Transition& t : p.transitions) {
    std::ostringstream g;
    for (const Atom& a : t.guard)
      g << a.clock << static_cast<int>(a.rel) << a.constant << ';';
    groups.insert({t.source, t.target, g.str(), t.resets});
  }
  return {p.locations.size(), p.transitions.size(), groups.size()};
}

Outcome product_structure()
{
  const Tba f3 = load_tba(data("eventually_a_after_20_neg.tba"));
  const Tba p3 = product(f3, divergence_automaton(f3.alphabet));
  const Tba f1 = load_tba(data("response_two_state.tba"));
  const Tba p1 = product(f1, divergence_automaton(f1.alphabet));
  const Shape s3 = shape(p3), s1 = shape(p1);

  const StateSet ne = nonempty_states(p3);
  bool zero_free = true;
  for (LocationId q : p3.initial_locations())
    zero_free &= !ne.at(q).intersects(Zone::zero(p3.dim()));

  const bool ok = s3.locations == 4 && s3.transitions == 5 && zero_free && s1.locations == 8
                  && s1.transitions == 23;
  std::ostringstream d;
  d << "always-before-20 x divergence: " << s3.locations << " locations, " << s3.transitions
    << " transitions (expected 4, 5); initial zero state " << (zero_free ? "not " : "")
    << "non-empty; two-location response x divergence: " << s1.locations << " locations, " << s1.transitions
    << " transitions, " << s1.grouped << " when symbols are merged (expected 8, 23)";
  return {ok, d.str()};
}

std::map<std::string, std::string> projected(const Tba& a, const StateSet& s)
{
  const std::size_t d = a.dim() - 1;
  std::map<std::string, Federation> by_name;
  for (const SymbolicState& st : s.states()) {
    const std::string& name = a.locations[st.location].name;
    auto [it, fresh] = by_name.try_emplace(name.substr(0, name.find('_')), d);
    it->second.add(st.zone.remove_clock(d));
  }
  std::map<std::string, std::string> out;
  const std::vector<std::string> clocks(a.clocks.begin(), a.clocks.end() - 1);
  for (const auto& [name, f] : by_name)
    out[name] = f.to_string(clocks);
  return out;
}

std::string show(const std::map<std::string, std::string>& m)
{
  std::string s = "{";
  for (const auto& [k, v] : m)
    s += (s.size() > 1 ? ", " : "") + k + ": " + v;
  return s + "}";
}

Outcome estimates()
{
  MonitorOptions o;
  o.scale = 1;
  o.prune_dead = false;
  const Tba p = load_tba(data("response.tba")), n = load_tba(data("response_neg.tba"));
  Monitor on_time(p, n, o), late(p, n, o);
  on_time.step("a", "10");
  on_time.step("b", "20");
  late.step("a", "10");
  late.step("b", "50");
  using M = std::map<std::string, std::string>;
  const M a = projected(on_time.property_automaton(), on_time.property_estimate());
  const M b = projected(on_time.negation_automaton(), on_time.negation_estimate());
  const M c = projected(late.property_automaton(), late.property_estimate());
  const M d = projected(late.negation_automaton(), late.negation_estimate());
  const bool ok = a == M{{"q1", "(x==10)"}} && b == M{{"nq1", "(y==20)"}, {"nq4", "(y==10)"}}
                  && c == M{{"q3", "(x==40)"}} && d == M{{"nq1", "(y==50)"}, {"nq3", "(y==40)"}};
  return {ok, "(a,10),(b,20): " + show(a) + " " + show(b) + "; (a,10),(b,50): " + show(c) + " " + show(d)};
}

Outcome intervals()
{
  const Tba p = load_tba(data("within_5_6_a.tba")), n = load_tba(data("within_5_6_a_neg.tba"));
  auto symbolic = [&](const std::vector<SymbolicTimedEvent>& trace) {
    Monitor m(p, n);
    std::vector<Verdict> out;
    for (const auto& e : trace)
      out.push_back(m.step_symbolic(e));
    return out;
  };
  const auto narrow = symbolic({{"b", 1, 2}, {"a", 5, 6}, {"c", 7, 8}});
  const auto wide = symbolic({{"b", 1, 3}, {"a", 5, 7}, {"c", 7, 9}});
  const auto sat = run_concrete("within_5_6_a", {{"b", "2"}, {"a", "5.5"}, {"c", "8"}});
  const auto vio = run_concrete("within_5_6_a", {{"b", "2"}, {"a", "6.5"}, {"c", "8"}});
  const bool ok = narrow.back() == Verdict::top && wide.back() == Verdict::unknown
                  && sat.back() == Verdict::top && vio.back() == Verdict::bottom;
  return {ok, "narrow -> " + verdicts_text(narrow) + "; wide -> " + verdicts_text(wide)
                  + "; realization a@5.5 -> " + verdicts_text(sat) + "; a@6.5 -> " + verdicts_text(vio)};
}

Outcome prediction()
{
  RunConfig c;
  c.property = data("within_20_40_b.tba");
  c.negation = data("within_20_40_b_neg.tba");
  c.scale = 10;
  c.predict = true;
  std::istringstream in("a 5.1\nb 35.1\n");
  std::ostringstream out, err;
  const int code = run(c, in, out, err);
  const std::string expected = "1 ? d_top=14.9 d_bot=34.9\n2 TOP d_top=0 d_bot=inf\n";
  std::string shown = out.str();
  std::replace(shown.begin(), shown.end(), '\n', '|');
  return {code == 0 && out.str() == expected, shown};
}

std::string summary(const testing::SuiteResult& r, const std::string& name)
{
  std::string s = name + " " + std::to_string(r.cases) + " cases, " + std::to_string(r.violations) + " violations";
  if (r.violations)
    s += " (first: " + r.first_violation + ")";
  return s;
}

Outcome differential()
{
  const auto start = std::chrono::steady_clock::now();
  const testing::DifferentialResult r = testing::differential(2024, 200, 10);
  const double took = seconds_since(start);
  return {r.complement.passed() && r.verdicts.passed() && r.pairs >= 200 && took < 300,
          std::to_string(r.pairs) + " pairs; " + summary(r.complement, "complementarity:") + "; "
              + summary(r.verdicts, "traces:") + "; " + std::to_string(r.undecided_starts)
              + " start undecided, " + std::to_string(r.verdict_changes) + " of them become conclusive; " + std::to_string(took) + " s"};
}

Outcome properties()
{
  const testing::SuiteResult zones = testing::zone_algebra(7, 10000);
  const testing::SuiteResult stable = testing::verdict_stability(8, 1000);
  const testing::RefinementResult refine = testing::uncertainty_refinement(9, 1000);
  const testing::SuiteResult predict = testing::prediction_soundness(10, 300);
  const bool ok = zones.passed() && zones.cases >= 10000 && stable.passed() && stable.cases >= 1000
                  && refine.refinement.passed() && refine.refinement.cases >= 1000 && refine.agreement.passed()
                  && predict.passed();
  return {ok, summary(zones, "zone algebra:") + "; " + summary(stable, "stability:") + "; "
                  + summary(refine.refinement, "refinement:") + "; " + summary(refine.agreement, "agreement:")
                  + "; " + summary(predict, "prediction:")};
}

Outcome streaming()
{
  constexpr std::size_t zone_limit = 8;
  const testing::StreamingResult r = testing::streaming(1000000, 10);
  const auto& b = r.block_seconds;
  auto median3 = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[1];
  };
  const double early = median3({b[0], b[1], b[2]});
  const double late = median3({b[b.size() - 3], b[b.size() - 2], b[b.size() - 1]});
  const bool flat = late <= 2.0 * early + 0.05;
  std::ostringstream d;
  d << r.events << " events; peak " << r.peak_zones << " zones (limit " << zone_limit << "); block seconds";
  for (double s : b)
    d << ' ' << static_cast<int>(s * 1000) << "ms";
  d << "; verdict stayed ? " << (r.stayed_unknown ? "yes" : "no");
  return {r.stayed_unknown && r.peak_zones <= zone_limit && flat, d.str()};
}

} // namespace

int main(int argc, char** argv)
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"response example verdicts", response_verdicts},
      {"divergence in the eventually example", divergence_verdicts},
      {"divergence product structure", product_structure},
      {"state estimates on the response example", estimates},
      {"interval timestamps", intervals},
      {"predictive verdicts", prediction},
      {"differential oracle suite", differential},
      {"property suites", properties},
      {"streaming bound", streaming},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i)
    selected.insert(std::stoul(argv[i]));
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!selected.empty() && !selected.count(k + 1))
      continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all &= o.pass;
    std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[k].first
              << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
