#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "kslogos/frame.hpp"

namespace kslogos {

/// A (not necessarily induced) subgraph of a fixed host graph.
///
/// Subgraphs of one host, ordered by inclusion, form a Heyting algebra:
/// meet and join are componentwise, and implication is the largest c with
/// meet(c, a) <= b. Node-induced subgraphs alone would only give a Boolean
/// algebra; edge-poorer subgraphs are what break excluded middle.
class Subgraph {
 public:
  using Host = std::shared_ptr<const Graph>;

  /// Throws if an edge is not a host edge or lacks one of its endpoints.
  Subgraph(Host host, std::vector<int> node_ids, std::vector<std::pair<int, int>> edges);
  static Subgraph bottom(Host host);
  static Subgraph top(Host host);

  const Host& host() const { return host_; }
  std::vector<int> nodes() const;
  std::vector<std::pair<int, int>> edges() const;
  bool has_node_index(std::size_t i) const { return nodes_[i]; }
  bool has_edge_index(std::size_t e) const { return edges_[e]; }

  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.host_ == b.host_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  friend Subgraph meet(const Subgraph&, const Subgraph&);
  friend Subgraph join(const Subgraph&, const Subgraph&);
  friend Subgraph implication(const Subgraph&, const Subgraph&);
  friend std::vector<Subgraph> all_subgraphs(const Host&);

  struct Masks {};
  Subgraph(Masks, Host host, std::vector<bool> nodes, std::vector<bool> edges)
      : host_(std::move(host)), nodes_(std::move(nodes)), edges_(std::move(edges)) {}

  Host host_;
  std::vector<bool> nodes_;  // indexed by host node index
  std::vector<bool> edges_;  // indexed by host edge index
};

bool leq(const Subgraph& a, const Subgraph& b);
Subgraph meet(const Subgraph& a, const Subgraph& b);
Subgraph join(const Subgraph& a, const Subgraph& b);
Subgraph implication(const Subgraph& a, const Subgraph& b);
/// implication(a, bottom).
Subgraph pseudo_complement(const Subgraph& a);

/// Hosts up to this many nodes may be enumerated exhaustively.
inline constexpr std::size_t kMaxEnumerableHost = 5;

/// Every subgraph of the host; throws above kMaxEnumerableHost nodes.
std::vector<Subgraph> all_subgraphs(const Subgraph::Host& host);
/// Join of every subgraph c with meet(c, a) <= b, by enumeration.
Subgraph brute_force_implication(const Subgraph& a, const Subgraph& b);

}  // namespace kslogos
