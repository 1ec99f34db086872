#include "kslogos/frame.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kslogos/error.hpp"

namespace kslogos {

namespace {

std::string id_list(std::span<const int> ids) {
  std::string out = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(ids[k]);
  }
  return out + "}";
}

}  // namespace

// ---------------------------------------------------------------- Frame

Frame::Frame(std::size_t dim, std::vector<Ray> rays,
             std::optional<std::vector<std::vector<int>>> declared_bases)
    : dim_(dim), rays_(std::move(rays)), declared_bases_(std::move(declared_bases)) {
  if (dim_ == 0) throw Error("frame dimension must be positive");

  std::map<int, std::size_t> seen_ids;
  std::map<std::vector<std::string>, int> seen_coords;
  for (std::size_t k = 0; k < rays_.size(); ++k) {
    Ray& r = rays_[k];
    if (!seen_ids.emplace(r.id, k).second) {
      throw Error("duplicate ray id " + std::to_string(r.id));
    }
    if (r.coords.dim() != dim_) {
      throw Error("ray " + std::to_string(r.id) + " has dimension " +
                  std::to_string(r.coords.dim()) + ", frame dimension is " + std::to_string(dim_));
    }
    if (r.coords.is_zero()) throw Error("ray " + std::to_string(r.id) + " is the zero vector");
    r.coords = canonical_ray(r.coords);

    std::vector<std::string> key;
    for (const auto& s : r.coords.entries()) key.push_back(to_string(s));
    const auto [it, fresh] = seen_coords.emplace(std::move(key), r.id);
    if (!fresh) {
      throw Error("rays " + std::to_string(it->second) + " and " + std::to_string(r.id) +
                  " are the same ray");
    }
  }

  if (!declared_bases_) return;
  for (std::size_t b = 0; b < declared_bases_->size(); ++b) {
    auto& basis = (*declared_bases_)[b];
    const std::string name = "declared basis #" + std::to_string(b + 1) + " " + id_list(basis);
    if (basis.size() != dim_) {
      throw Error(name + " has " + std::to_string(basis.size()) + " rays, dimension is " +
                  std::to_string(dim_));
    }
    std::sort(basis.begin(), basis.end());
    if (std::adjacent_find(basis.begin(), basis.end()) != basis.end()) {
      throw Error(name + " repeats a ray");
    }
    for (int id : basis) {
      if (!contains(id)) throw Error(name + " references unknown ray " + std::to_string(id));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (!inner_product(ray(basis[i]).coords, ray(basis[j]).coords).is_zero()) {
          throw Error(name + " is not orthogonal: rays " + std::to_string(basis[i]) + " and " +
                      std::to_string(basis[j]));
        }
    // dim mutually orthogonal nonzero vectors always span; checked anyway.
    std::vector<Vector> vs;
    for (int id : basis) vs.push_back(ray(id).coords);
    if (rank(vs) != dim_) throw Error(name + " does not span");
  }
}

bool Frame::contains(int id) const {
  return std::any_of(rays_.begin(), rays_.end(), [id](const Ray& r) { return r.id == id; });
}

std::size_t Frame::index_of(int id) const {
  for (std::size_t k = 0; k < rays_.size(); ++k)
    if (rays_[k].id == id) return k;
  throw Error("unknown ray id " + std::to_string(id));
}

std::vector<int> Frame::ids() const {
  std::vector<int> out;
  out.reserve(rays_.size());
  for (const auto& r : rays_) out.push_back(r.id);
  return out;
}

std::string Frame::name(int id) const {
  const Ray& r = ray(id);
  return r.label ? *r.label : "v" + std::to_string(id);
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::vector<int> ids, std::span<const std::pair<int, int>> edges)
    : ids_(std::move(ids)), adj_(ids_.size() * ids_.size(), 0) {
  std::set<int> unique(ids_.begin(), ids_.end());
  if (unique.size() != ids_.size()) throw Error("graph node ids must be unique");
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error("self-loop on node " + std::to_string(u) + " (reflexivity is implicit)");
    const std::size_t i = index_of(u);
    const std::size_t j = index_of(v);
    adj_[i * ids_.size() + j] = 1;
    adj_[j * ids_.size() + i] = 1;
  }
  index_edges();
}

Graph Graph::from_adjacency(std::vector<int> ids, std::vector<char> adjacency) {
  const std::size_t n = ids.size();
  if (adjacency.size() != n * n) throw Error("adjacency matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i * n + i]) throw Error("adjacency matrix has a nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (adjacency[i * n + j] != adjacency[j * n + i]) throw Error("adjacency matrix is not symmetric");
  }
  Graph g;
  g.ids_ = std::move(ids);
  g.adj_ = std::move(adjacency);
  g.index_edges();
  return g;
}

Graph Graph::complete(int n) {
  std::vector<int> ids;
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    ids.push_back(u);
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph(std::move(ids), edges);
}

Graph Graph::path(int n) {
  std::vector<int> ids;
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u) {
    ids.push_back(u);
    if (u < n) edges.emplace_back(u, u + 1);
  }
  return Graph(std::move(ids), edges);
}

void Graph::index_edges() {
  const std::size_t n = ids_.size();
  neighbors_.assign(n, {});
  edges_.clear();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adjacent(i, j)) {
        neighbors_[i].push_back(j);
        if (i < j) edges_.emplace_back(i, j);
      }
}

bool Graph::contains(int id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::size_t Graph::index_of(int id) const {
  const auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw Error("unknown node id " + std::to_string(id));
  return static_cast<std::size_t>(it - ids_.begin());
}

std::optional<std::size_t> Graph::edge_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(i, j));
  if (it == edges_.end() || *it != std::make_pair(i, j)) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_complete(std::span<const int> ids) const {
  std::vector<std::size_t> idx;
  idx.reserve(ids.size());
  for (int id : ids) idx.push_back(index_of(id));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] != idx[b] && !adjacent(idx[a], idx[b])) return false;
  return true;
}

bool Context::contains(int id) const {
  return std::binary_search(members.begin(), members.end(), id);
}

// ---------------------------------------------------------------- build_graph

Graph build_graph(const Frame& frame, ExecutionPolicy policy) {
  const auto rays = frame.rays();
  const std::size_t n = rays.size();
  std::vector<char> adj(n * n, 0);
  const long rows = static_cast<long>(n);

#pragma omp parallel for schedule(dynamic) if (policy == ExecutionPolicy::parallel)
  for (long i = 0; i < rows; ++i) {
    const auto a = static_cast<std::size_t>(i);
    for (std::size_t b = a + 1; b < n; ++b) {
      if (inner_product(rays[a].coords, rays[b].coords).is_zero()) {
        adj[a * n + b] = 1;
        adj[b * n + a] = 1;
      }
    }
  }
  return Graph::from_adjacency(frame.ids(), std::move(adj));
}

// ---------------------------------------------------------------- contexts

std::vector<Context> resolve_bases(const Frame& frame) {
  if (frame.declared_bases()) return resolve_bases(frame, Graph{});
  return resolve_bases(frame, build_graph(frame));
}

std::vector<Context> resolve_bases(const Frame& frame, const Graph& graph) {
  std::vector<Context> out;
  if (const auto& declared = frame.declared_bases()) {
    // Validated by the Frame constructor.
    for (const auto& basis : *declared) out.push_back(Context{basis, true, true});
    std::sort(out.begin(), out.end(),
              [](const Context& a, const Context& b) { return a.members < b.members; });
    return out;
  }
  for (auto& c : enumerate_maximal_contexts(frame, graph)) {
    if (c.is_basis) out.push_back(std::move(c));
  }
  return out;
}

bool contexts_compatible(const Context& a, const Context& b, const Graph& graph) {
  std::vector<int> all;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(all));
  return graph.is_complete(all);
}

}  // namespace kslogos
