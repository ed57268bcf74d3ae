#include "tmon/cli.hpp"

#include "tmon/monitor.hpp"
#include "tmon/tba_parser.hpp"
#include "tmon/trace.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace tmon {

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
  std::optional<Monitor> monitor;
  try {
    if (config.scale < 1)
      throw std::invalid_argument("--scale must be a positive integer");
    const Tba property = load_tba(config.property);
    const Tba negation = load_tba(config.negation);
    monitor.emplace(property, negation,
                    MonitorOptions{config.scale, config.divergence, config.predict, true});
  } catch (const InconsistentPair& e) {
    err << "tmon: " << e.what() << '\n';
    return exit_code::inconsistent_pair;
  } catch (const std::exception& e) {
    err << "tmon: " << e.what() << '\n';
    return exit_code::input_error;
  }

  std::ifstream file;
  std::istream* source = &in;
  if (config.input != "-") {
    file.open(config.input);
    if (!file) {
      err << "tmon: cannot read trace " << config.input << '\n';
      return exit_code::input_error;
    }
    source = &file;
  }

  TraceReader reader(*source, config.scale);
  std::size_t index = 0;
  try {
    while (auto event = reader.next()) {
      Verdict v{};
      try {
        if (const auto* e = std::get_if<TimedEvent>(&*event))
          v = monitor->step(*e);
        else
          v = monitor->step_symbolic(std::get<SymbolicTimedEvent>(*event));
      } catch (const MonitorError& e) {
        throw TraceError(reader.line(), e.what());
      }
      out << ++index << ' ' << to_string(v);
      if (config.predict) {
        const PredictiveVerdict p = monitor->predict();
        out << " d_top=" << format_scaled(p.d_top, config.scale)
            << " d_bot=" << format_scaled(p.d_bot, config.scale);
      }
      out << '\n' << std::flush;
      if (config.stop_on_conclusive && v != Verdict::unknown)
        break;
    }
  } catch (const InconsistentPair& e) {
    err << "tmon: " << e.what() << '\n';
    return exit_code::inconsistent_pair;
  } catch (const std::exception& e) {
    err << "tmon: " << e.what() << '\n';
    return exit_code::input_error;
  }
  return exit_code::ok;
}

} // namespace tmon
