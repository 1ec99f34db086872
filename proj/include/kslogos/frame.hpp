#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kslogos/linalg.hpp"
#include "kslogos/parallel.hpp"

namespace kslogos {

struct Ray {
  int id = 0;
  std::optional<std::string> label;
  Vector coords;
};

/// A scenario of rays in a fixed dimension, optionally with declared bases.
///
/// Construction canonicalizes every ray and rejects duplicate ids,
/// duplicate canonical rays and malformed declared bases.
class Frame {
 public:
  Frame(std::size_t dim, std::vector<Ray> rays,
        std::optional<std::vector<std::vector<int>>> declared_bases = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::span<const Ray> rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  const std::optional<std::vector<std::vector<int>>>& declared_bases() const {
    return declared_bases_;
  }

  bool contains(int id) const;
  std::size_t index_of(int id) const;
  const Ray& ray(int id) const { return rays_[index_of(id)]; }
  std::vector<int> ids() const;
  /// Display name: the label if present, otherwise "v<id>".
  std::string name(int id) const;

 private:
  std::size_t dim_;
  std::vector<Ray> rays_;
  std::optional<std::vector<std::vector<int>>> declared_bases_;
};

/// Simple undirected graph over integer node ids. Reflexivity of the
/// relation is implicit: adjacent(u, u) is never stored.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<int> ids, std::span<const std::pair<int, int>> edges);
  /// adjacency is row-major n x n, symmetric, zero diagonal.
  static Graph from_adjacency(std::vector<int> ids, std::vector<char> adjacency);
  static Graph complete(int n);
  static Graph path(int n);

  std::size_t size() const { return ids_.size(); }
  std::span<const int> ids() const { return ids_; }
  int id(std::size_t index) const { return ids_[index]; }
  bool contains(int id) const;
  std::size_t index_of(int id) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * ids_.size() + j]; }
  bool adjacent_ids(int u, int v) const { return adjacent(index_of(u), index_of(v)); }
  std::span<const std::size_t> neighbors(std::size_t i) const { return neighbors_[i]; }

  /// Edges as index pairs (i < j), sorted lexicographically.
  std::span<const std::pair<std::size_t, std::size_t>> edges() const { return edges_; }
  std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const;

  /// True iff every pair of distinct ids is adjacent.
  bool is_complete(std::span<const int> ids) const;

 private:
  void index_edges();

  std::vector<int> ids_;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

using OrthogonalityGraph = Graph;

/// A complete subgraph; members are sorted ids.
struct Context {
  std::vector<int> members;
  bool is_maximal = false;
  bool is_basis = false;

  bool contains(int id) const;
  friend bool operator==(const Context&, const Context&) = default;
};

/// Edge iff two distinct rays are orthogonal.
Graph build_graph(const Frame& frame, ExecutionPolicy policy = ExecutionPolicy::parallel);

/// All maximal cliques in canonical order (lexicographic on sorted members).
std::vector<Context> enumerate_maximal_contexts(const Graph& graph,
                                                ExecutionPolicy policy = ExecutionPolicy::parallel);
/// As above, flagging cliques of size dim whose rays span as bases.
std::vector<Context> enumerate_maximal_contexts(const Frame& frame, const Graph& graph,
                                                ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Declared bases when present, otherwise every maximal context that is a basis.
std::vector<Context> resolve_bases(const Frame& frame);
std::vector<Context> resolve_bases(const Frame& frame, const Graph& graph);

/// True iff the union of both contexts is a complete subgraph.
bool contexts_compatible(const Context& a, const Context& b, const Graph& graph);

/// Sorted maximal cliques as index sets; the two kernels behind
/// enumerate_maximal_contexts.
std::vector<std::vector<std::size_t>> maximal_cliques_serial(const Graph& graph);
std::vector<std::vector<std::size_t>> maximal_cliques_parallel(const Graph& graph);

}  // namespace kslogos
