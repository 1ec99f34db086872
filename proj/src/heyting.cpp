#include "kslogos/heyting.hpp"

#include <cassert>

#include "kslogos/error.hpp"

namespace kslogos {

namespace {

void require_same_host(const Subgraph& a, const Subgraph& b) {
  if (a.host() != b.host()) throw Error("subgraphs belong to different host graphs");
}

}  // namespace

Subgraph::Subgraph(Host host, std::vector<int> node_ids, std::vector<std::pair<int, int>> edges)
    : host_(std::move(host)) {
  if (!host_) throw Error("subgraph needs a host graph");
  nodes_.assign(host_->size(), false);
  edges_.assign(host_->edges().size(), false);
  for (int id : node_ids) nodes_[host_->index_of(id)] = true;
  for (const auto& [u, v] : edges) {
    const std::size_t i = host_->index_of(u);
    const std::size_t j = host_->index_of(v);
    const auto e = host_->edge_index(i, j);
    if (!e) throw Error("(" + std::to_string(u) + ", " + std::to_string(v) + ") is not a host edge");
    if (!nodes_[i] || !nodes_[j]) {
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") needs both endpoints in the subgraph");
    }
    edges_[*e] = true;
  }
}

Subgraph Subgraph::bottom(Host host) {
  return Subgraph(std::move(host), {}, {});
}

Subgraph Subgraph::top(Host host) {
  if (!host) throw Error("subgraph needs a host graph");
  std::vector<bool> nodes(host->size(), true);
  std::vector<bool> edges(host->edges().size(), true);
  return Subgraph(Subgraph::Masks{}, std::move(host), std::move(nodes), std::move(edges));
}

std::vector<int> Subgraph::nodes() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i]) out.push_back(host_->id(i));
  return out;
}

std::vector<std::pair<int, int>> Subgraph::edges() const {
  std::vector<std::pair<int, int>> out;
  const auto host_edges = host_->edges();
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e]) out.emplace_back(host_->id(host_edges[e].first), host_->id(host_edges[e].second));
  return out;
}

bool leq(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  const auto& host = *a.host();
  for (std::size_t i = 0; i < host.size(); ++i)
    if (a.has_node_index(i) && !b.has_node_index(i)) return false;
  for (std::size_t e = 0; e < host.edges().size(); ++e)
    if (a.has_edge_index(e) && !b.has_edge_index(e)) return false;
  return true;
}

Subgraph meet(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  std::vector<bool> nodes(a.nodes_.size());
  std::vector<bool> edges(a.edges_.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = a.nodes_[i] && b.nodes_[i];
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e] = a.edges_[e] && b.edges_[e];
  return Subgraph(Subgraph::Masks{}, a.host_, std::move(nodes), std::move(edges));
}

Subgraph join(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  std::vector<bool> nodes(a.nodes_.size());
  std::vector<bool> edges(a.edges_.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = a.nodes_[i] || b.nodes_[i];
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e] = a.edges_[e] || b.edges_[e];
  return Subgraph(Subgraph::Masks{}, a.host_, std::move(nodes), std::move(edges));
}

Subgraph implication(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  const auto host_edges = a.host_->edges();
  std::vector<bool> nodes(a.nodes_.size());
  std::vector<bool> edges(a.edges_.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = !a.nodes_[i] || b.nodes_[i];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = host_edges[e];
    edges[e] = (!a.edges_[e] || b.edges_[e]) && nodes[i] && nodes[j];
  }
  Subgraph c(Subgraph::Masks{}, a.host_, std::move(nodes), std::move(edges));
  assert(leq(meet(c, a), b));
  return c;
}

Subgraph pseudo_complement(const Subgraph& a) { return implication(a, Subgraph::bottom(a.host())); }

std::vector<Subgraph> all_subgraphs(const Subgraph::Host& host) {
  if (!host) throw Error("subgraph needs a host graph");
  const std::size_t n = host->size();
  if (n > kMaxEnumerableHost) {
    throw Error("host has " + std::to_string(n) + " nodes; enumeration is limited to " +
                std::to_string(kMaxEnumerableHost));
  }
  const auto host_edges = host->edges();
  std::vector<Subgraph> out;
  for (unsigned node_mask = 0; node_mask < (1u << n); ++node_mask) {
    std::vector<bool> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = (node_mask >> i) & 1u;
    std::vector<std::size_t> allowed;
    for (std::size_t e = 0; e < host_edges.size(); ++e)
      if (nodes[host_edges[e].first] && nodes[host_edges[e].second]) allowed.push_back(e);
    for (unsigned edge_mask = 0; edge_mask < (1u << allowed.size()); ++edge_mask) {
      std::vector<bool> edges(host_edges.size(), false);
      for (std::size_t k = 0; k < allowed.size(); ++k) edges[allowed[k]] = (edge_mask >> k) & 1u;
      out.push_back(Subgraph(Subgraph::Masks{}, host, nodes, std::move(edges)));
    }
  }
  return out;
}

Subgraph brute_force_implication(const Subgraph& a, const Subgraph& b) {
  require_same_host(a, b);
  Subgraph acc = Subgraph::bottom(a.host());
  for (const auto& c : all_subgraphs(a.host())) {
    if (leq(meet(c, a), b)) acc = join(acc, c);
  }
  return acc;
}

}  // namespace kslogos
