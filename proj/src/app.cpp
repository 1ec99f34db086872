#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "kslogos/commands.hpp"
#include "kslogos/error.hpp"

namespace kslogos {

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kochen-Specker contextuality scenarios: contexts, binary and intensive valuations"};
  app.name("kscheck");
  app.require_subcommand(1);

  std::string scenario_path;
  std::string format = "text";
  std::string output;
  CommandOptions opt;
  std::string state;
  std::string unitary;
  bool no_parity = false;

  for (std::string_view name : command_names()) {
    CLI::App* sub = app.add_subcommand(std::string(name));
    auto* scenario = sub->add_option("--scenario", scenario_path, "Scenario JSON file");
    if (name != "heyting-demo") scenario->required();
    sub->add_option("--state", state, "State: JSON file, inline JSON, 'mixed', or coordinates 'a,b,...'");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--sequential", opt.sequential, "Run serial kernels only (deterministic witnesses)");
    sub->add_option("--output", output, "Write the report to a file instead of stdout");
    sub->add_flag("--timing", opt.timing, "Include elapsed time in the report");
    if (name == "ks") sub->add_flag("--no-parity", no_parity, "Skip the parity certificate; search exhaustively");
    if (name == "evolve") sub->add_option("--unitary", unitary, "Unitary: rot345, perm:..., givens:I:J:C:S, JSON")->required();
    if (name == "export-dot") sub->add_flag("--intensities", opt.intensities, "Label nodes with intensive values");
  }

  std::vector<const char*> argv;
  argv.push_back("kscheck");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (!state.empty()) opt.state = state;
  if (!unitary.empty()) opt.unitary = unitary;
  opt.parity = !no_parity;
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    std::optional<Scenario> scenario;
    if (!scenario_path.empty()) scenario = load_scenario(scenario_path);
    const Report report = run_command(command, scenario ? &*scenario : nullptr, opt);
    const std::string rendered = report.render(format == "json" ? OutputFormat::json : OutputFormat::text);
    if (output.empty()) {
      out << rendered;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw Error("cannot write " + output);
      file << rendered;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace kslogos
