#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "kslogos/frame.hpp"
#include "kslogos/linalg.hpp"
#include "kslogos/valuation.hpp"

namespace kslogos {

enum class Field { rational, gaussian_rational };

/// A loaded scenario file: either a ray frame (graph derived by
/// orthogonality) or an abstract graph with explicit edges, plus an optional
/// state and an optional standalone intensive valuation.
struct Scenario {
  std::string name;
  std::string description;
  Field field = Field::rational;
  std::optional<Frame> frame;
  Graph graph;
  std::map<int, std::string> labels;  // abstract-graph node labels
  std::optional<State> state;
  std::optional<IntensiveValuation> valuation;

  std::vector<int> ids() const;
  std::string node_name(int id) const;
  /// The frame, or throws naming the command that needed one.
  const Frame& require_frame(std::string_view command) const;
};

/// Parses UTF-8 JSON scenario text. Errors carry a line number or a JSON
/// field path (e.g. "rays[3].coords[1]").
Scenario parse_scenario(std::string_view text, const std::string& origin = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);
/// Serializes to the same schema; load(write(s)) reproduces s.
std::string write_scenario(const Scenario& scenario);

/// --state argument: a JSON file, inline JSON ({"pure": [...]} or
/// {"density": [[...]]}), the keyword "mixed" for I/d, or a comma-separated
/// coordinate list.
State parse_state_argument(std::string_view arg, std::size_t dim, Field field);

/// --unitary argument: "identity", "perm:2,1,3,4", "givens:I:J:C:S",
/// "rot345" (givens:1:2:3/5:4/5), a JSON matrix inline or in a file, or
/// several of these joined by ';' (multiplied left to right).
RationalUnitary parse_unitary_argument(std::string_view arg, std::size_t dim);

}  // namespace kslogos
