#include "tmon/cli.hpp"
#include "tmon/monitor.hpp"
#include "tmon/tba_parser.hpp"
#include "tmon/trace.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <limits>
#include <sstream>

namespace py = pybind11;
using namespace tmon;

namespace {

py::object model_time(std::int64_t scaled, std::int64_t scale)
{
  if (scaled == infinite_time)
    return py::float_(std::numeric_limits<double>::infinity());
  return py::float_(static_cast<double>(scaled) / static_cast<double>(scale));
}

py::tuple run_text(const std::string& property, const std::string& negation, const std::string& trace,
                   std::int64_t scale, bool divergence, bool predict, bool stop_on_conclusive)
{
  RunConfig c;
  c.property = property;
  c.negation = negation;
  c.scale = scale;
  c.divergence = divergence;
  c.predict = predict;
  c.stop_on_conclusive = stop_on_conclusive;
  std::istringstream in(trace);
  std::ostringstream out, err;
  const int code = run(c, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_tmon, m)
{
  m.doc() = "Online three-valued monitoring of timed properties";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MonitorError>(m, "MonitorError", PyExc_ValueError);
  py::register_exception<TraceError>(m, "TraceError", PyExc_ValueError);
  py::register_exception<InconsistentPair>(m, "InconsistentPair", PyExc_RuntimeError);

  py::class_<Location>(m, "Location")
      .def_readonly("name", &Location::name)
      .def_readonly("initial", &Location::initial)
      .def_readonly("accepting", &Location::accepting)
      .def("__repr__", [](const Location& l) {
        return "<Location " + l.name + (l.initial ? " init" : "") + (l.accepting ? " accept" : "") + ">";
      });

  py::class_<Tba>(m, "Tba")
      .def_readonly("alphabet", &Tba::alphabet)
      .def_readonly("clocks", &Tba::clocks)
      .def_readonly("locations", &Tba::locations)
      .def_property_readonly("transition_count", [](const Tba& a) { return a.transitions.size(); })
      .def_property_readonly("max_constant", &Tba::max_constant)
      .def("to_text", [](const Tba& a) { return to_text(a); })
      .def(py::self == py::self)
      .def("__repr__", [](const Tba& a) {
        return "<Tba " + std::to_string(a.locations.size()) + " locations, "
               + std::to_string(a.transitions.size()) + " transitions>";
      });

  m.def("parse_tba", &parse_tba, py::arg("text"));
  m.def("load_tba", &load_tba, py::arg("path"));
  m.def("product", [](const Tba& a, const Tba& b) { return product(a, b); }, py::arg("a"), py::arg("b"));
  m.def("divergence_automaton", [](const std::vector<std::string>& alphabet) { return divergence_automaton(alphabet); },
        py::arg("alphabet"));
  m.def("nonempty_states", [](const Tba& a) { return nonempty_states(a).to_string(a); }, py::arg("automaton"),
        "Non-empty state set rendered one location per line.");

  m.def("scale_decimal", &scale_decimal, py::arg("text"), py::arg("scale"));
  m.def("format_scaled", &format_scaled, py::arg("units"), py::arg("scale"));

  py::enum_<Verdict> verdict(m, "Verdict");
  verdict.value("UNKNOWN", Verdict::unknown).value("TOP", Verdict::top).value("BOTTOM", Verdict::bottom);
  // The CLI tokens: ?, TOP, BOT.
  verdict.attr("__str__") = py::cpp_function([](Verdict v) { return std::string(to_string(v)); },
                                             py::name("__str__"), py::is_method(verdict));

  py::class_<Monitor>(m, "Monitor")
      .def(py::init([](const Tba& property, const Tba& negation, std::int64_t scale, bool divergence, bool predict,
                       bool prune_dead) {
             return Monitor(property, negation, MonitorOptions{scale, divergence, predict, prune_dead});
           }),
           py::arg("property"), py::arg("negation"), py::arg("scale") = 1000, py::arg("divergence") = true,
           py::arg("predict") = false, py::arg("prune_dead") = true)
      .def("step", py::overload_cast<std::string_view, std::string_view>(&Monitor::step), py::arg("symbol"),
           py::arg("time"), "Event at an absolute time given as a decimal string.")
      .def("step_scaled", [](Monitor& mon, const std::string& symbol, std::int64_t time) {
             return mon.step(TimedEvent{symbol, time});
           }, py::arg("symbol"), py::arg("time"))
      .def("step_interval", [](Monitor& mon, const std::string& symbol, std::int64_t lower, std::int64_t upper) {
             return mon.step_symbolic(SymbolicTimedEvent{symbol, lower, upper});
           }, py::arg("symbol"), py::arg("lower"), py::arg("upper"))
      .def_property_readonly("verdict", &Monitor::verdict)
      .def("predict", [](const Monitor& mon) {
             const PredictiveVerdict p = mon.predict();
             const std::int64_t s = mon.options().scale;
             return py::make_tuple(model_time(p.d_top, s), model_time(p.d_bot, s));
           }, "(d_top, d_bot) in model time units; inf when no such verdict is reachable.")
      .def("predict_scaled", [](const Monitor& mon) {
             const PredictiveVerdict p = mon.predict();
             return py::make_tuple(p.d_top, p.d_bot);
           })
      .def_property_readonly("event_count", &Monitor::event_count)
      .def_property_readonly("symbolic_mode", &Monitor::symbolic_mode)
      .def_property_readonly("estimate_zone_count", &Monitor::estimate_zone_count)
      .def("property_estimate", [](const Monitor& mon) {
             return mon.property_estimate().to_string(mon.property_automaton());
           })
      .def("negation_estimate", [](const Monitor& mon) {
             return mon.negation_estimate().to_string(mon.negation_automaton());
           });

  m.def("run", &run_text, py::arg("property"), py::arg("negation"), py::arg("trace"), py::arg("scale") = 1000,
        py::arg("divergence") = true, py::arg("predict") = false, py::arg("stop_on_conclusive") = false,
        "Runs the command-line driver on trace text. Returns (exit code, stdout, stderr).");
}
