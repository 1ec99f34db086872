#include "kslogos/valuation.hpp"

#include <algorithm>
#include <functional>

#include "kslogos/error.hpp"
#include "kslogos/ks_solver.hpp"

namespace kslogos {

// ---------------------------------------------------------------- value types

BinaryValuation BinaryValuation::constant(std::span<const int> ids, bool value) {
  std::map<int, bool> values;
  for (int id : ids) values.emplace(id, value);
  return BinaryValuation(std::move(values));
}

bool BinaryValuation::operator()(int id) const {
  const auto it = values_.find(id);
  if (it == values_.end()) throw Error("valuation has no value for ray " + std::to_string(id));
  return it->second;
}

bool BinaryValuation::covers(std::span<const int> ids) const {
  return std::all_of(ids.begin(), ids.end(), [&](int id) { return values_.count(id) > 0; });
}

LocalBinaryValuation::LocalBinaryValuation(Context context, std::map<int, bool> values)
    : context_(std::move(context)), values_(std::move(values)) {
  std::vector<int> keys;
  for (const auto& kv : values_) keys.push_back(kv.first);
  std::vector<int> members = context_.members;
  std::sort(members.begin(), members.end());
  if (keys != members) throw Error("local valuation keys differ from its context's members");
  if (context_.is_basis) {
    const auto ones = std::count_if(values_.begin(), values_.end(),
                                    [](const auto& kv) { return kv.second; });
    if (ones != 1) {
      throw Error("local valuation on a basis must assign 1 to exactly one ray, got " +
                  std::to_string(ones));
    }
  }
}

IntensiveValuation::IntensiveValuation(std::map<int, Rational> values, Origin origin,
                                       std::string source)
    : values_(std::move(values)), origin_(origin), source_(std::move(source)) {
  for (const auto& [id, q] : values_) {
    if (sgn(q) < 0 || q > 1) {
      throw Error("intensive value " + to_string(q) + " at node " + std::to_string(id) +
                  " is outside [0,1]");
    }
  }
}

const Rational& IntensiveValuation::operator()(int id) const {
  const auto it = values_.find(id);
  if (it == values_.end()) throw Error("intensive valuation has no value for node " + std::to_string(id));
  return it->second;
}

// ---------------------------------------------------------------- binary valuations

bool is_asa(const BinaryValuation& v, std::span<const Context> bases) {
  for (const auto& b : bases) {
    int ones = 0;
    for (int id : b.members) ones += v(id) ? 1 : 0;
    if (ones != 1) return false;
  }
  return true;
}

bool check_compatibility(std::span<const LocalBinaryValuation> family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      for (const auto& [id, value] : family[i].values()) {
        const auto it = family[j].values().find(id);
        if (it != family[j].values().end() && it->second != value) return false;
      }
  return true;
}

std::optional<BinaryValuation> paste_local_valuations(std::span<const LocalBinaryValuation> family,
                                                      const Frame& frame) {
  if (!check_compatibility(family)) {
    throw Error("local valuations disagree on a shared ray; run check_compatibility first");
  }
  std::map<int, bool> fixed;
  for (const auto& local : family)
    for (const auto& [id, value] : local.values()) {
      if (!frame.contains(id)) throw Error("local valuation references unknown ray " + std::to_string(id));
      fixed[id] = value;
    }
  const auto bases = resolve_bases(frame);
  SolverOptions options;
  options.try_parity = false;
  auto report = solve_exactly_one(frame.ids(), bases, fixed, options);
  if (const auto* w = report.witness()) return *w;
  return std::nullopt;
}

LocalBinaryValuation restrict_global(const BinaryValuation& v, const Context& c) {
  std::map<int, bool> values;
  for (int id : c.members) values.emplace(id, v(id));
  return LocalBinaryValuation(c, std::move(values));
}

// ---------------------------------------------------------------- intensive valuations

IntensiveValuation born_giv(const Frame& frame, const State& state, ExecutionPolicy policy) {
  if (state_dim(state) != frame.dim()) {
    throw Error("state dimension " + std::to_string(state_dim(state)) +
                " does not match frame dimension " + std::to_string(frame.dim()));
  }
  const auto rays = frame.rays();
  std::vector<Rational> probs(rays.size());
  const long n = static_cast<long>(rays.size());

#pragma omp parallel for schedule(static) if (policy == ExecutionPolicy::parallel)
  for (long k = 0; k < n; ++k) {
    probs[static_cast<std::size_t>(k)] = born_probability(state, rays[static_cast<std::size_t>(k)].coords);
  }

  std::map<int, Rational> values;
  for (std::size_t k = 0; k < rays.size(); ++k) values.emplace(rays[k].id, std::move(probs[k]));
  return IntensiveValuation(std::move(values), IntensiveValuation::Origin::born,
                            std::holds_alternative<Vector>(state) ? "pure" : "density");
}

bool PsaAudit::ok() const {
  if (!missing.empty() || !out_of_range.empty()) return false;
  auto good = [](const Entry& e) { return e.ok; };
  return std::all_of(bases.begin(), bases.end(), good) &&
         std::all_of(contexts.begin(), contexts.end(), good);
}

PsaAudit audit_psa(const IntensiveValuation& giv, std::span<const int> ids,
                   std::span<const Context> bases, std::span<const Context> contexts) {
  PsaAudit audit;
  const auto& values = giv.values();
  for (int id : ids) {
    const auto it = values.find(id);
    if (it == values.end()) {
      audit.missing.push_back(id);
    } else if (sgn(it->second) < 0 || it->second > 1) {
      audit.out_of_range.push_back(id);
    }
  }
  if (!audit.missing.empty()) return audit;

  auto sum_of = [&](const Context& c) {
    Rational s = 0;
    for (int id : c.members) s += values.at(id);
    return s;
  };
  for (const auto& b : bases) {
    Rational s = sum_of(b);
    const bool ok = s == 1;
    audit.bases.push_back({b, std::move(s), ok});
  }
  // Nonnegative values: sub-contexts never exceed their maximal context.
  for (const auto& c : contexts) {
    Rational s = sum_of(c);
    const bool ok = s <= 1;
    audit.contexts.push_back({c, std::move(s), ok});
  }
  return audit;
}

bool check_psa(const IntensiveValuation& giv, const Frame& frame) {
  const Graph graph = build_graph(frame);
  const auto bases = resolve_bases(frame, graph);
  const auto contexts = enumerate_maximal_contexts(frame, graph);
  const auto ids = frame.ids();
  return audit_psa(giv, ids, bases, contexts).ok();
}

BinaryValuation collapse_tau(const IntensiveValuation& giv) {
  std::map<int, bool> values;
  for (const auto& [id, q] : giv.values()) values.emplace(id, sgn(q) != 0);
  return BinaryValuation(std::move(values));
}

// ---------------------------------------------------------------- reconstruction

std::string to_string(Reconstruction::Diagnostic d) {
  switch (d) {
    case Reconstruction::Diagnostic::ok: return "ok";
    case Reconstruction::Diagnostic::underdetermined: return "underdetermined";
    case Reconstruction::Diagnostic::inconsistent: return "inconsistent";
    case Reconstruction::Diagnostic::not_psd: return "not-psd";
  }
  return "unknown";
}

Reconstruction reconstruct_density(const Frame& frame, const IntensiveValuation& giv) {
  const std::size_t d = frame.dim();
  // Unknowns: rho_kk (d reals), then Re/Im of rho_ij for i < j.
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) off.emplace_back(i, j);
  const std::size_t unknowns = d + 2 * off.size();

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& ray : frame.rays()) {
    const Vector& v = ray.coords;
    const Rational norm = inner_product(v, v).real();
    std::vector<Rational> row(unknowns, Rational(0));
    for (std::size_t k = 0; k < d; ++k) row[k] = v[k].norm();
    for (std::size_t t = 0; t < off.size(); ++t) {
      const auto [i, j] = off[t];
      // <v|rho|v> picks up 2 Re(conj(v_i) v_j rho_ij) from the (i,j), (j,i) pair.
      const Scalar w = v[i].conj() * v[j];
      row[d + 2 * t] = 2 * w.real();
      row[d + 2 * t + 1] = -2 * w.imag();
    }
    a.push_back(std::move(row));
    b.push_back(giv(ray.id) * norm);
  }
  std::vector<Rational> trace_row(unknowns, Rational(0));
  for (std::size_t k = 0; k < d; ++k) trace_row[k] = 1;
  a.push_back(std::move(trace_row));
  b.push_back(Rational(1));

  const LinearSolution sol = solve_exact(std::move(a), std::move(b));
  Reconstruction out{Reconstruction::Diagnostic::ok, std::nullopt, sol.rank, unknowns};
  if (sol.status == LinearSolution::Status::inconsistent) {
    out.diagnostic = Reconstruction::Diagnostic::inconsistent;
    return out;
  }
  if (sol.status == LinearSolution::Status::underdetermined) {
    out.diagnostic = Reconstruction::Diagnostic::underdetermined;
    return out;
  }

  Operator rho(d);
  for (std::size_t k = 0; k < d; ++k) rho(k, k) = Scalar(sol.x[k]);
  for (std::size_t t = 0; t < off.size(); ++t) {
    const auto [i, j] = off[t];
    rho(i, j) = Scalar(sol.x[d + 2 * t], sol.x[d + 2 * t + 1]);
    rho(j, i) = rho(i, j).conj();
  }
  if (!is_positive_semidefinite(rho)) {
    out.diagnostic = Reconstruction::Diagnostic::not_psd;
    return out;
  }
  out.rho = DensityOperator(std::move(rho));
  return out;
}

bool evolution_commutes(const Frame& frame, const State& state, const RationalUnitary& u) {
  if (state_dim(state) != frame.dim() || u.dim() != frame.dim()) {
    throw Error("evolution: state, unitary and frame dimensions must agree");
  }
  const State evolved = evolve(state, u);
  for (const auto& ray : frame.rays()) {
    if (born_probability(evolved, apply(u, ray.coords)) != born_probability(state, ray.coords)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- classical frames

bool is_classical(const Graph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> component(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != n) continue;
    std::vector<std::size_t> members{start};
    component[start] = start;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t w : graph.neighbors(members[k]))
        if (component[w] == n) {
          component[w] = start;
          members.push_back(w);
        }
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        if (!graph.adjacent(members[x], members[y])) return false;
  }
  return true;
}

BinaryValuation classical_asa(const Frame& frame) {
  const Graph graph = build_graph(frame);
  if (!is_classical(graph)) {
    throw Error("frame is not classical: its orthogonality graph is not a disjoint union of complete components");
  }
  const auto ids = frame.ids();
  std::map<int, bool> values;
  for (int id : ids) values.emplace(id, false);
  for (const auto& b : resolve_bases(frame, graph)) {
    values[*std::min_element(b.members.begin(), b.members.end())] = true;
  }
  return BinaryValuation(std::move(values));
}

}  // namespace kslogos
