// Maximal clique enumeration: Bron-Kerbosch with Tomita pivoting.
#include <algorithm>
#include <iterator>

#include "kslogos/frame.hpp"

namespace kslogos {

namespace {

using IndexSet = std::vector<std::size_t>;

IndexSet intersect(const IndexSet& a, std::span<const std::size_t> b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Pivot maximizing |P ∩ N(u)| over P ∪ X; ties go to the lowest node id.
std::size_t choose_pivot(const Graph& g, const IndexSet& p, const IndexSet& x) {
  std::size_t best = p.empty() ? x.front() : p.front();
  std::size_t best_score = 0;
  bool first = true;
  auto consider = [&](std::size_t u) {
    const std::size_t score = intersect(p, g.neighbors(u)).size();
    if (first || score > best_score || (score == best_score && g.id(u) < g.id(best))) {
      best = u;
      best_score = score;
      first = false;
    }
  };
  for (std::size_t u : p) consider(u);
  for (std::size_t u : x) consider(u);
  return best;
}

void expand(const Graph& g, IndexSet& r, IndexSet p, IndexSet x, std::vector<IndexSet>& out) {
  if (p.empty()) {
    if (x.empty()) {
      IndexSet clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  const std::size_t pivot = choose_pivot(g, p, x);
  const auto pivot_nbrs = g.neighbors(pivot);
  IndexSet branch;
  std::set_difference(p.begin(), p.end(), pivot_nbrs.begin(), pivot_nbrs.end(),
                      std::back_inserter(branch));
  for (std::size_t v : branch) {
    r.push_back(v);
    expand(g, r, intersect(p, g.neighbors(v)), intersect(x, g.neighbors(v)), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

void sort_canonically(const Graph& g, std::vector<IndexSet>& cliques) {
  auto key = [&](const IndexSet& c) {
    std::vector<int> ids;
    ids.reserve(c.size());
    for (std::size_t i : c) ids.push_back(g.id(i));
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  std::sort(cliques.begin(), cliques.end(),
            [&](const IndexSet& a, const IndexSet& b) { return key(a) < key(b); });
}

}  // namespace

std::vector<IndexSet> maximal_cliques_serial(const Graph& graph) {
  std::vector<IndexSet> out;
  if (graph.size() == 0) return out;
  IndexSet r;
  IndexSet p(graph.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = k;
  expand(graph, r, std::move(p), {}, out);
  sort_canonically(graph, out);
  return out;
}

std::vector<IndexSet> maximal_cliques_parallel(const Graph& graph) {
  // Each top-level branch owns the cliques whose smallest index is v.
  const long n = static_cast<long>(graph.size());
  std::vector<std::vector<IndexSet>> per_vertex(graph.size());

#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const auto v = static_cast<std::size_t>(k);
    IndexSet p;
    IndexSet x;
    for (std::size_t u : graph.neighbors(v)) (u > v ? p : x).push_back(u);
    IndexSet r{v};
    expand(graph, r, std::move(p), std::move(x), per_vertex[v]);
  }

  std::vector<IndexSet> out;
  for (auto& part : per_vertex)
    for (auto& c : part) out.push_back(std::move(c));
  sort_canonically(graph, out);
  return out;
}

std::vector<Context> enumerate_maximal_contexts(const Graph& graph, ExecutionPolicy policy) {
  const auto cliques = policy == ExecutionPolicy::parallel ? maximal_cliques_parallel(graph)
                                                           : maximal_cliques_serial(graph);
  std::vector<Context> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) {
    Context ctx;
    for (std::size_t i : c) ctx.members.push_back(graph.id(i));
    std::sort(ctx.members.begin(), ctx.members.end());
    ctx.is_maximal = true;
    out.push_back(std::move(ctx));
  }
  return out;
}

std::vector<Context> enumerate_maximal_contexts(const Frame& frame, const Graph& graph,
                                                ExecutionPolicy policy) {
  auto out = enumerate_maximal_contexts(graph, policy);
  for (auto& ctx : out) {
    if (ctx.members.size() != frame.dim()) continue;
    std::vector<Vector> vs;
    for (int id : ctx.members) vs.push_back(frame.ray(id).coords);
    ctx.is_basis = rank(vs) == frame.dim();
  }
  return out;
}

}  // namespace kslogos
