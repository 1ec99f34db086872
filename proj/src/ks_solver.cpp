#include "kslogos/ks_solver.hpp"

#include <algorithm>

#include "kslogos/error.hpp"

namespace kslogos {

bool ParityCertificate::valid() const {
  if (basis_count % 2 == 0) return false;
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](const auto& kv) { return kv.second % 2 == 0; });
}

std::optional<ParityCertificate> parity_certificate(std::span<const Context> bases) {
  ParityCertificate cert;
  cert.basis_count = bases.size();
  for (const auto& b : bases)
    for (int id : b.members) ++cert.multiplicities[id];
  if (!cert.valid()) return std::nullopt;
  return cert;
}

namespace {

using Assignment = std::vector<signed char>;  // -1 unassigned

struct Problem {
  std::vector<int> ids;
  std::vector<std::vector<std::size_t>> bases;  // member indices, ascending id order
};

// Exactly-one propagation to a fixpoint. Returns false on conflict.
bool propagate(const Problem& pb, Assignment& a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& basis : pb.bases) {
      int ones = 0;
      std::size_t open = 0;
      std::size_t last_open = 0;
      for (std::size_t v : basis) {
        if (a[v] == 1) ++ones;
        if (a[v] == -1) {
          ++open;
          last_open = v;
        }
      }
      if (ones > 1) return false;
      if (ones == 1) {
        if (open == 0) continue;
        for (std::size_t v : basis)
          if (a[v] == -1) a[v] = 0;
        changed = true;
      } else if (open == 0) {
        return false;
      } else if (open == 1) {
        a[last_open] = 1;
        changed = true;
      }
    }
  }
  return true;
}

// Unsatisfied basis with the fewest open members; ties to the lowest index.
std::optional<std::size_t> pick_basis(const Problem& pb, const Assignment& a) {
  std::optional<std::size_t> best;
  std::size_t best_open = 0;
  for (std::size_t b = 0; b < pb.bases.size(); ++b) {
    bool satisfied = false;
    std::size_t open = 0;
    for (std::size_t v : pb.bases[b]) {
      if (a[v] == 1) satisfied = true;
      if (a[v] == -1) ++open;
    }
    if (satisfied) continue;
    if (!best || open < best_open) {
      best = b;
      best_open = open;
    }
  }
  return best;
}

std::size_t first_open(const Problem& pb, const Assignment& a, std::size_t basis) {
  for (std::size_t v : pb.bases[basis])
    if (a[v] == -1) return v;
  return pb.bases[basis].front();  // unreachable after propagation
}

bool search(const Problem& pb, Assignment& a, SearchStats& stats) {
  ++stats.nodes;
  if (!propagate(pb, a)) return false;
  const auto basis = pick_basis(pb, a);
  if (!basis) {
    for (auto& x : a)
      if (x == -1) x = 0;
    return true;
  }
  const std::size_t v = first_open(pb, a, *basis);
  for (signed char value : {1, 0}) {
    ++stats.branches;
    Assignment child = a;
    child[v] = value;
    if (search(pb, child, stats)) {
      a = std::move(child);
      return true;
    }
  }
  return false;
}

BinaryValuation to_valuation(const Problem& pb, const Assignment& a) {
  std::map<int, bool> values;
  for (std::size_t k = 0; k < pb.ids.size(); ++k) values.emplace(pb.ids[k], a[k] == 1);
  return BinaryValuation(std::move(values));
}

}  // namespace

KSReport solve_exactly_one(std::span<const int> ids, std::span<const Context> bases,
                           const std::map<int, bool>& fixed, const SolverOptions& options) {
  KSReport report;
  report.basis_count = bases.size();

  Problem pb;
  pb.ids.assign(ids.begin(), ids.end());
  std::map<int, std::size_t> index;
  for (std::size_t k = 0; k < pb.ids.size(); ++k) {
    if (!index.emplace(pb.ids[k], k).second) {
      throw Error("duplicate ray id " + std::to_string(pb.ids[k]) + " in solver input");
    }
  }
  auto lookup = [&](int id) {
    const auto it = index.find(id);
    if (it == index.end()) throw Error("basis references unknown ray " + std::to_string(id));
    return it->second;
  };
  for (const auto& b : bases) {
    std::vector<int> members = b.members;
    std::sort(members.begin(), members.end());
    std::vector<std::size_t> idx;
    for (int id : members) idx.push_back(lookup(id));
    pb.bases.push_back(std::move(idx));
  }

  if (options.try_parity) {
    if (auto cert = parity_certificate(bases)) {
      report.outcome = Certificate{std::move(*cert)};
      return report;
    }
  }

  Assignment root(pb.ids.size(), -1);
  for (const auto& [id, value] : fixed) root[lookup(id)] = value ? 1 : 0;

  if (options.policy == ExecutionPolicy::sequential) {
    if (search(pb, root, report.stats)) {
      report.outcome = to_valuation(pb, root);
    } else {
      report.outcome = Certificate{SearchExhausted{report.stats}};
    }
    return report;
  }

  ++report.stats.nodes;
  std::optional<std::size_t> split;
  if (propagate(pb, root)) {
    split = pick_basis(pb, root);
    if (!split) {
      for (auto& x : root)
        if (x == -1) x = 0;
      report.outcome = to_valuation(pb, root);
      return report;
    }
  } else {
    report.outcome = Certificate{SearchExhausted{report.stats}};
    return report;
  }

  std::vector<std::size_t> open;
  for (std::size_t v : pb.bases[*split])
    if (root[v] == -1) open.push_back(v);

  std::vector<Assignment> results(open.size(), root);
  std::vector<char> found(open.size(), 0);
  std::vector<SearchStats> stats(open.size());
  const long tasks = static_cast<long>(open.size());

#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < tasks; ++t) {
    const auto k = static_cast<std::size_t>(t);
    results[k][open[k]] = 1;
    ++stats[k].branches;
    found[k] = search(pb, results[k], stats[k]) ? 1 : 0;
  }

  for (const auto& s : stats) {
    report.stats.nodes += s.nodes;
    report.stats.branches += s.branches;
  }
  for (std::size_t k = 0; k < open.size(); ++k) {
    if (found[k]) {
      report.outcome = to_valuation(pb, results[k]);
      return report;
    }
  }
  report.outcome = Certificate{SearchExhausted{report.stats}};
  return report;
}

KSReport ks_solve(const Frame& frame, const SolverOptions& options) {
  const auto bases = resolve_bases(frame);
  if (bases.empty()) throw Error("frame has no basis contexts: nothing to valuate against");
  return solve_exactly_one(frame.ids(), bases, {}, options);
}

}  // namespace kslogos
