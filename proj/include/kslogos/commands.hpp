#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kslogos/scenario.hpp"

namespace kslogos {

enum class OutputFormat { text, json };

struct CommandOptions {
  std::optional<std::string> state;    // --state
  std::optional<std::string> unitary;  // --unitary (evolve)
  bool sequential = false;             // --sequential
  bool parity = true;                  // --no-parity clears it (ks)
  bool intensities = false;            // --intensities (export-dot)
  bool timing = false;                 // --timing
};

/// One command result. The text rendering is derived from `data`; nothing
/// is recomputed when rendering.
struct Report {
  std::string command;
  nlohmann::ordered_json data;

  std::string render(OutputFormat format) const;
};

Report cmd_contexts(const Scenario& s, const CommandOptions& opt);
Report cmd_ks(const Scenario& s, const CommandOptions& opt);
Report cmd_valuate(const Scenario& s, const CommandOptions& opt);
Report cmd_collapse(const Scenario& s, const CommandOptions& opt);
Report cmd_check_psa(const Scenario& s, const CommandOptions& opt);
Report cmd_reconstruct(const Scenario& s, const CommandOptions& opt);
Report cmd_evolve(const Scenario& s, const CommandOptions& opt);
/// The scenario is optional: without one only the built-in hosts are shown.
Report cmd_heyting_demo(const Scenario* s, const CommandOptions& opt);
Report cmd_export_dot(const Scenario& s, const CommandOptions& opt);

/// Subcommand names in the order they are listed by --help.
std::span<const std::string_view> command_names();
/// Dispatches by subcommand name; throws kslogos::Error for unknown names.
Report run_command(std::string_view name, const Scenario* s, const CommandOptions& opt);

/// The kscheck command line. Returns the process exit code: 0 whenever the
/// analysis completed (whatever the verdict), 1 for I/O, parse and
/// precondition failures, CLI11's code for usage errors.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kslogos
