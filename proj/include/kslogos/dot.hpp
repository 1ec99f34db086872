#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "kslogos/frame.hpp"
#include "kslogos/valuation.hpp"

namespace kslogos {

/// Graphviz DOT for a graph. Nodes are named n<id>; each context becomes
/// subgraph cluster_ctx<k> in the given order. With a valuation, node labels
/// are the exact intensities and the fill is gray with lightness 1 - value.
std::string export_dot(const Graph& graph, const std::function<std::string(int)>& node_name,
                       std::span<const Context> clusters, const IntensiveValuation* giv,
                       std::string_view title = "frame");

std::string export_dot(const Frame& frame, std::span<const Context> clusters = {},
                       const IntensiveValuation* giv = nullptr);

/// "#rrggbb" gray for an intensity in [0,1]: 0 is white, 1 is black.
std::string intensity_fill(const Rational& intensity);

}  // namespace kslogos
