#include "kslogos/dot.hpp"

#include <cstdio>
#include <sstream>

namespace kslogos {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string intensity_fill(const Rational& intensity) {
  // round(255 * (1 - p)), exact.
  const Rational level = 255 * (1 - intensity) + Rational(1, 2);
  mpz_class v;
  mpz_fdiv_q(v.get_mpz_t(), level.get_num_mpz_t(), level.get_den_mpz_t());
  const unsigned g = static_cast<unsigned>(v.get_ui());
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, g);
  return buf;
}

std::string export_dot(const Graph& graph, const std::function<std::string(int)>& node_name,
                       std::span<const Context> clusters, const IntensiveValuation* giv,
                       std::string_view title) {
  std::ostringstream out;
  out << "graph " << quoted(title) << " {\n";
  out << "  node [shape=circle";
  if (giv) out << ", style=filled";
  out << "];\n";
  for (int id : graph.ids()) {
    out << "  n" << id << " [";
    if (giv) {
      const Rational& p = (*giv)(id);
      out << "label=" << quoted(to_string(p)) << ", xlabel=" << quoted(node_name(id))
          << ", fillcolor=" << quoted(intensity_fill(p))
          << ", fontcolor=" << quoted(p > Rational(1, 2) ? "white" : "black");
    } else {
      out << "label=" << quoted(node_name(id));
    }
    out << "];\n";
  }
  for (const auto& [i, j] : graph.edges()) {
    out << "  n" << graph.id(i) << " -- n" << graph.id(j) << ";\n";
  }
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    out << "  subgraph cluster_ctx" << k << " {\n";
    out << "    label=" << quoted("ctx" + std::to_string(k)) << ";\n";
    out << "   ";
    for (int id : clusters[k].members) out << " n" << id << ";";
    out << "\n  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Frame& frame, std::span<const Context> clusters, const IntensiveValuation* giv) {
  return export_dot(build_graph(frame), [&](int id) { return frame.name(id); }, clusters, giv);
}

}  // namespace kslogos
