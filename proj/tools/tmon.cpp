#include "tmon/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
  tmon::RunConfig config;
  bool no_divergence = false;

  CLI::App app{"Online three-valued monitor for timed properties"};
  app.add_option("--property", config.property, "Automaton for the property")->required();
  app.add_option("--negation", config.negation, "Automaton for the negated property")->required();
  app.add_option("--scale", config.scale, "Scaled units per time unit")->capture_default_str();
  app.add_flag("--no-divergence", no_divergence, "Also admit time-convergent continuations");
  app.add_flag("--predict", config.predict, "Print guaranteed minimum times to a verdict");
  app.add_option("--input", config.input, "Trace file, or - for standard input")->capture_default_str();
  app.add_flag("--stop-on-conclusive", config.stop_on_conclusive, "Exit after the first TOP or BOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tmon::exit_code::input_error;
  }
  config.divergence = !no_divergence;
  return tmon::run(config, std::cin, std::cout, std::cerr);
}
