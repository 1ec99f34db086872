#include "kslogos/commands.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "kslogos/dot.hpp"
#include "kslogos/error.hpp"
#include "kslogos/heyting.hpp"
#include "kslogos/ks_solver.hpp"

namespace kslogos {

using ojson = nlohmann::ordered_json;

namespace {

std::string count(const ojson& n, const char* noun) {
  const auto k = n.get<std::size_t>();
  return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

ExecutionPolicy policy_of(const CommandOptions& opt) {
  return opt.sequential ? ExecutionPolicy::sequential : ExecutionPolicy::parallel;
}

ojson header(std::string_view command, const Scenario* s) {
  ojson d;
  d["command"] = command;
  if (s) d["scenario"] = s->name;
  return d;
}

ojson id_array(std::span<const int> ids) {
  ojson a = ojson::array();
  for (int id : ids) a.push_back(id);
  return a;
}

ojson context_json(const Scenario& s, const Context& c, std::size_t index) {
  ojson j;
  j["index"] = index;
  j["members"] = id_array(c.members);
  ojson names = ojson::array();
  for (int id : c.members) names.push_back(s.node_name(id));
  j["names"] = std::move(names);
  j["basis"] = c.is_basis;
  return j;
}

std::string brace_list(const ojson& arr) {
  std::string out = "{";
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) out += ", ";
    out += arr[k].is_string() ? arr[k].get<std::string>() : arr[k].dump();
  }
  return out + "}";
}

std::vector<Context> bases_of(const Scenario& s) {
  if (!s.frame) return {};
  return resolve_bases(*s.frame, s.graph);
}

std::vector<Context> contexts_of(const Scenario& s, ExecutionPolicy policy) {
  return s.frame ? enumerate_maximal_contexts(*s.frame, s.graph, policy)
                 : enumerate_maximal_contexts(s.graph, policy);
}

std::optional<State> state_of(const Scenario& s, const CommandOptions& opt) {
  if (opt.state) return parse_state_argument(*opt.state, s.require_frame("--state").dim(), s.field);
  return s.state;
}

State require_state(const Scenario& s, const CommandOptions& opt, std::string_view command) {
  const Frame& frame = s.require_frame(command);
  (void)frame;
  auto state = state_of(s, opt);
  if (!state) throw Error(std::string(command) + " needs a state: pass --state or add \"state\" to the scenario");
  return *state;
}

std::string describe_state(const State& state) {
  if (const auto* psi = std::get_if<Vector>(&state)) {
    std::string out = "pure (";
    for (std::size_t k = 0; k < psi->dim(); ++k) {
      if (k) out += ", ";
      out += to_string((*psi)[k]);
    }
    return out + ")";
  }
  const auto& rho = std::get<DensityOperator>(state);
  if (rho == DensityOperator::maximally_mixed(rho.dim())) return "density I/" + std::to_string(rho.dim());
  return "density operator";
}

// Born valuation from a state, or the scenario's standalone valuation.
IntensiveValuation giv_of(const Scenario& s, const CommandOptions& opt, std::string_view command,
                          std::string& source) {
  if (s.frame) {
    if (auto state = state_of(s, opt)) {
      source = "born: " + describe_state(*state);
      return born_giv(*s.frame, *state, policy_of(opt));
    }
  }
  if (s.valuation) {
    source = "loaded from scenario";
    return *s.valuation;
  }
  throw Error(std::string(command) + " needs a state (--state or scenario \"state\") or a scenario \"valuation\"");
}

ojson values_json(const Scenario& s, const IntensiveValuation& giv) {
  ojson rows = ojson::array();
  for (int id : s.ids()) {
    ojson r;
    r["id"] = id;
    r["name"] = s.node_name(id);
    r["value"] = to_string(giv(id));
    rows.push_back(std::move(r));
  }
  return rows;
}

ojson matrix_json(const Operator& op) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < op.dim(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < op.dim(); ++j) row.push_back(to_string(op(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson state_json(const State& state) {
  ojson j;
  if (const auto* psi = std::get_if<Vector>(&state)) {
    ojson coords = ojson::array();
    for (const auto& c : psi->entries()) coords.push_back(to_string(c));
    j["pure"] = std::move(coords);
  } else {
    j["density"] = matrix_json(std::get<DensityOperator>(state).op());
  }
  return j;
}

template <typename F>
Report timed(std::string_view command, const CommandOptions& opt, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Report r{std::string(command), body()};
  if (opt.timing) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    r.data["elapsed_ms"] = static_cast<double>(us.count()) / 1000.0;
  }
  return r;
}

// ---------------------------------------------------------------- text renderers

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::size_t name_width(const ojson& rows) {
  std::size_t w = 4;
  for (const auto& r : rows) w = std::max(w, r["name"].get<std::string>().size());
  return w;
}

void render_values(std::ostringstream& out, const ojson& rows, const char* column = "value") {
  const std::size_t w = name_width(rows);
  out << "  " << pad("id", 5) << pad("name", w + 2) << column << "\n";
  for (const auto& r : rows) {
    out << "  " << pad(r["id"].dump(), 5) << pad(r["name"].get<std::string>(), w + 2)
        << (r[column].is_string() ? r[column].get<std::string>() : r[column].dump()) << "\n";
  }
}

void render_sums(std::ostringstream& out, const ojson& entries, const char* what) {
  for (const auto& e : entries) {
    out << "  " << what << " " << brace_list(e["members"]) << "  sum " << e["sum"].get<std::string>()
        << (e["ok"].get<bool>() ? "" : "  VIOLATION") << "\n";
  }
}

std::string render_contexts(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << " (" << count(d["nodes"], "node") << ", "
      << count(d["edges"], "edge");
  if (!d["dimension"].is_null()) out << ", dimension " << d["dimension"];
  out << ")\n";
  out << "maximal contexts: " << d["contexts"].size() << " (" << d["basis_count"] << " bases)\n";
  for (const auto& c : d["contexts"]) {
    out << "  ctx" << c["index"] << (c["basis"].get<bool>() ? "  basis  " : "  partial ") << brace_list(c["members"])
        << "  " << brace_list(c["names"]) << "\n";
  }
  return out.str();
}

std::string render_ks(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << " (" << d["rays"] << " rays, " << d["basis_count"]
      << " bases)\n";
  if (d["verdict"] == "satisfiable") {
    out << "SATISFIABLE (ASA witness found)\n";
    out << "  rays valued 1: " << brace_list(d["witness"]["ones"]) << "\n";
  } else {
    const auto& c = d["certificate"];
    if (c["kind"] == "parity") {
      out << "UNSATISFIABLE (parity certificate: " << c["basis_count"]
          << " bases, all multiplicities even)\n";
      std::ostringstream mult;
      bool first = true;
      for (const auto& item : c["multiplicities"].items()) {
        mult << (first ? "" : ", ") << item.key() << ":" << item.value();
        first = false;
      }
      out << "  multiplicities: " << mult.str() << "\n";
    } else {
      out << "UNSATISFIABLE (search exhausted: " << c["nodes"] << " nodes, " << c["branches"] << " branches)\n";
    }
  }
  if (d.contains("search")) out << "  search: " << d["search"]["nodes"] << " nodes, " << d["search"]["branches"] << " branches\n";
  return out.str();
}

std::string render_valuate(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << "\n";
  out << "state: " << d["state_description"].get<std::string>() << "\n";
  out << "born valuation:\n";
  render_values(out, d["values"]);
  out << "basis sums:\n";
  render_sums(out, d["bases"], "basis");
  return out.str();
}

std::string render_collapse(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << "\n";
  out << "intensive valuation: " << d["source"].get<std::string>() << "\n";
  out << "tau-collapse:\n";
  render_values(out, d["values"], "tau");
  out << "rays valued 1: " << d["ones"] << " of " << d["values"].size() << "\n";
  out << "ASA: " << (d["is_asa"].get<bool>() ? "yes" : "no") << " (" << d["basis_count"] << " bases";
  if (!d["failing_bases"].empty()) out << ", " << d["failing_bases"].size() << " without exactly one 1";
  out << ")\n";
  for (const auto& f : d["failing_bases"]) out << "  basis " << brace_list(f["members"]) << " has " << f["ones"] << " ones\n";
  return out.str();
}

std::string render_check_psa(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << "\n";
  out << "intensive valuation: " << d["source"].get<std::string>() << "\n";
  out << "PSA: " << (d["is_psa"].get<bool>() ? "yes" : "no") << "\n";
  out << "bases (" << d["bases"].size() << "), sum must be 1:\n";
  render_sums(out, d["bases"], "basis");
  out << "maximal contexts (" << d["contexts"].size() << "), sum must be <= 1:\n";
  render_sums(out, d["contexts"], "context");
  return out.str();
}

std::string render_reconstruct(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << "\n";
  out << "intensive valuation: " << d["source"].get<std::string>() << "\n";
  out << "linear system: rank " << d["rank"] << " of " << d["unknowns"] << " unknowns\n";
  out << "result: " << d["diagnostic"].get<std::string>() << "\n";
  if (d.contains("rho")) {
    out << "rho:\n";
    for (const auto& row : d["rho"]) {
      out << "  [";
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k].get<std::string>();
      out << "]\n";
    }
  }
  return out.str();
}

std::string render_evolve(const ojson& d) {
  std::ostringstream out;
  out << "scenario: " << d["scenario"].get<std::string>() << "\n";
  out << "state: " << d["state_description"].get<std::string>() << "\n";
  out << "unitary:\n";
  for (const auto& row : d["unitary"]) {
    out << "  [";
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k].get<std::string>();
    out << "]\n";
  }
  out << "born(U rho U^dagger, U v) == born(rho, v) for every ray: "
      << (d["commutes"].get<bool>() ? "yes" : "no") << "\n";
  const auto& rows = d["rays"];
  const std::size_t w = name_width(rows);
  out << "  " << pad("id", 5) << pad("name", w + 2) << pad("before", 12) << "after\n";
  for (const auto& r : rows) {
    out << "  " << pad(r["id"].dump(), 5) << pad(r["name"].get<std::string>(), w + 2)
        << pad(r["before"].get<std::string>(), 12) << r["after"].get<std::string>() << "\n";
  }
  return out.str();
}

std::string render_heyting(const ojson& d) {
  std::ostringstream out;
  for (const auto& h : d["hosts"]) {
    out << "host " << h["name"].get<std::string>() << ": " << count(h["nodes"], "node") << ", "
        << count(h["edges"], "edge");
    if (h.contains("subgraphs")) {
      out << ", " << h["subgraphs"] << " subgraphs\n";
      out << "  adjunction meet(c,a) <= b  <=>  c <= (a => b): "
          << (h["adjunction_holds"].get<bool>() ? "holds" : "FAILS") << " on " << h["triples_checked"]
          << " triples\n";
      out << "  closed-form implication matches enumeration: "
          << (h["implication_matches_oracle"].get<bool>() ? "yes" : "NO") << " on " << h["pairs_checked"]
          << " pairs\n";
      out << "  distributive: " << (h["distributive"].get<bool>() ? "yes" : "NO") << "\n";
    } else {
      out << " (too large for exhaustive checks)\n";
    }
    if (h.contains("excluded_middle_witness")) {
      const auto& w = h["excluded_middle_witness"];
      out << "  excluded middle fails: a = nodes " << brace_list(w["a_nodes"]) << ", no edges; not a = "
          << (w["not_a_is_bottom"].get<bool>() ? "bottom" : "nonempty") << "; a or not a != top\n";
      out << "  double negation: not not a = " << (w["not_not_a_is_top"].get<bool>() ? "top" : "not top")
          << " != a\n";
    } else {
      out << "  excluded middle holds (no edges, the lattice is Boolean)\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- heyting helpers

ojson heyting_host(const std::string& name, Subgraph::Host host, bool exhaustive) {
  ojson h;
  h["name"] = name;
  h["nodes"] = host->size();
  h["edges"] = host->edges().size();
  if (exhaustive) {
    const auto subs = all_subgraphs(host);
    bool adjunction = true;
    bool distributive = true;
    bool oracle = true;
    std::uint64_t triples = 0;
    std::uint64_t pairs = 0;
    for (const auto& a : subs)
      for (const auto& b : subs) {
        const Subgraph imp = implication(a, b);
        oracle = oracle && imp == brute_force_implication(a, b);
        ++pairs;
        for (const auto& c : subs) {
          adjunction = adjunction && (leq(meet(c, a), b) == leq(c, imp));
          distributive = distributive && meet(a, join(b, c)) == join(meet(a, b), meet(a, c));
          ++triples;
        }
      }
    h["subgraphs"] = subs.size();
    h["triples_checked"] = triples;
    h["adjunction_holds"] = adjunction;
    h["pairs_checked"] = pairs;
    h["implication_matches_oracle"] = oracle;
    h["distributive"] = distributive;
  }
  if (!host->edges().empty()) {
    // All nodes, no edges: its pseudo-complement is bottom.
    const auto ids = host->ids();
    const Subgraph a(host, {ids.begin(), ids.end()}, {});
    const Subgraph not_a = pseudo_complement(a);
    ojson w;
    w["a_nodes"] = id_array(ids);
    w["not_a_is_bottom"] = not_a == Subgraph::bottom(host);
    w["a_or_not_a_is_top"] = join(a, not_a) == Subgraph::top(host);
    w["not_not_a_is_top"] = pseudo_complement(not_a) == Subgraph::top(host);
    h["excluded_middle_witness"] = std::move(w);
  }
  return h;
}

}  // namespace

// ---------------------------------------------------------------- commands

Report cmd_contexts(const Scenario& s, const CommandOptions& opt) {
  return timed("contexts", opt, [&] {
    ojson d = header("contexts", &s);
    d["nodes"] = s.graph.size();
    d["edges"] = s.graph.edges().size();
    d["dimension"] = s.frame ? ojson(s.frame->dim()) : ojson(nullptr);
    const auto contexts = contexts_of(s, policy_of(opt));
    ojson arr = ojson::array();
    std::size_t bases = 0;
    for (std::size_t k = 0; k < contexts.size(); ++k) {
      arr.push_back(context_json(s, contexts[k], k));
      bases += contexts[k].is_basis ? 1 : 0;
    }
    d["basis_count"] = bases;
    d["contexts"] = std::move(arr);
    return d;
  });
}

Report cmd_ks(const Scenario& s, const CommandOptions& opt) {
  const Frame& frame = s.require_frame("ks");
  return timed("ks", opt, [&] {
    SolverOptions so;
    so.try_parity = opt.parity;
    so.policy = policy_of(opt);
    const KSReport r = ks_solve(frame, so);
    ojson d = header("ks", &s);
    d["rays"] = frame.size();
    d["basis_count"] = r.basis_count;
    if (const auto* w = r.witness()) {
      d["verdict"] = "satisfiable";
      ojson ones = ojson::array();
      ojson values = ojson::object();
      for (const auto& [id, v] : w->values()) {
        if (v) ones.push_back(id);
        values[std::to_string(id)] = v ? 1 : 0;
      }
      d["witness"]["ones"] = std::move(ones);
      d["witness"]["values"] = std::move(values);
      d["witness"]["is_asa"] = is_asa(*w, resolve_bases(frame, s.graph));
    } else {
      d["verdict"] = "unsatisfiable";
      const Certificate& c = *r.certificate();
      if (const auto* p = std::get_if<ParityCertificate>(&c)) {
        d["certificate"]["kind"] = "parity";
        d["certificate"]["basis_count"] = p->basis_count;
        ojson m = ojson::object();
        for (const auto& [id, n] : p->multiplicities) m[std::to_string(id)] = n;
        d["certificate"]["multiplicities"] = std::move(m);
      } else {
        const auto& e = std::get<SearchExhausted>(c);
        d["certificate"]["kind"] = "search_exhausted";
        d["certificate"]["nodes"] = e.stats.nodes;
        d["certificate"]["branches"] = e.stats.branches;
      }
    }
    if (r.satisfiable()) {
      d["search"]["nodes"] = r.stats.nodes;
      d["search"]["branches"] = r.stats.branches;
    }
    return d;
  });
}

Report cmd_valuate(const Scenario& s, const CommandOptions& opt) {
  const State state = require_state(s, opt, "valuate");
  return timed("valuate", opt, [&] {
    const IntensiveValuation giv = born_giv(*s.frame, state, policy_of(opt));
    ojson d = header("valuate", &s);
    d["state_description"] = describe_state(state);
    d["state"] = state_json(state);
    d["values"] = values_json(s, giv);
    const auto ids = s.ids();
    const auto audit = audit_psa(giv, ids, bases_of(s), {});
    ojson bases = ojson::array();
    for (const auto& e : audit.bases) {
      ojson b;
      b["members"] = id_array(e.context.members);
      b["sum"] = to_string(e.sum);
      b["ok"] = e.ok;
      bases.push_back(std::move(b));
    }
    d["bases"] = std::move(bases);
    return d;
  });
}

Report cmd_collapse(const Scenario& s, const CommandOptions& opt) {
  return timed("collapse", opt, [&] {
    std::string source;
    const IntensiveValuation giv = giv_of(s, opt, "collapse", source);
    const BinaryValuation tau = collapse_tau(giv);
    const auto bases = bases_of(s);
    ojson d = header("collapse", &s);
    d["source"] = source;
    ojson rows = ojson::array();
    std::size_t ones = 0;
    for (int id : s.ids()) {
      ojson r;
      r["id"] = id;
      r["name"] = s.node_name(id);
      r["value"] = to_string(giv(id));
      r["tau"] = tau(id) ? 1 : 0;
      ones += tau(id) ? 1 : 0;
      rows.push_back(std::move(r));
    }
    d["values"] = std::move(rows);
    d["ones"] = ones;
    d["basis_count"] = bases.size();
    d["is_asa"] = is_asa(tau, bases);
    ojson failing = ojson::array();
    for (const auto& b : bases) {
      int count = 0;
      for (int id : b.members) count += tau(id) ? 1 : 0;
      if (count != 1) {
        ojson f;
        f["members"] = id_array(b.members);
        f["ones"] = count;
        failing.push_back(std::move(f));
      }
    }
    d["failing_bases"] = std::move(failing);
    return d;
  });
}

Report cmd_check_psa(const Scenario& s, const CommandOptions& opt) {
  return timed("check-psa", opt, [&] {
    std::string source;
    const IntensiveValuation giv = giv_of(s, opt, "check-psa", source);
    const auto ids = s.ids();
    const auto audit = audit_psa(giv, ids, bases_of(s), contexts_of(s, policy_of(opt)));
    ojson d = header("check-psa", &s);
    d["source"] = source;
    d["is_psa"] = audit.ok();
    auto entries = [](const std::vector<PsaAudit::Entry>& es) {
      ojson arr = ojson::array();
      for (const auto& e : es) {
        ojson j;
        j["members"] = id_array(e.context.members);
        j["sum"] = to_string(e.sum);
        j["ok"] = e.ok;
        arr.push_back(std::move(j));
      }
      return arr;
    };
    d["bases"] = entries(audit.bases);
    d["contexts"] = entries(audit.contexts);
    return d;
  });
}

Report cmd_reconstruct(const Scenario& s, const CommandOptions& opt) {
  const Frame& frame = s.require_frame("reconstruct");
  return timed("reconstruct", opt, [&] {
    std::string source;
    const IntensiveValuation giv = giv_of(s, opt, "reconstruct", source);
    const Reconstruction r = reconstruct_density(frame, giv);
    ojson d = header("reconstruct", &s);
    d["source"] = source;
    d["rank"] = r.rank;
    d["unknowns"] = r.unknowns;
    d["diagnostic"] = to_string(r.diagnostic);
    if (r.rho) d["rho"] = matrix_json(r.rho->op());
    return d;
  });
}

Report cmd_evolve(const Scenario& s, const CommandOptions& opt) {
  const State state = require_state(s, opt, "evolve");
  if (!opt.unitary) throw Error("evolve needs --unitary (e.g. rot345, perm:2,1,3,4, givens:1:2:3/5:4/5)");
  const Frame& frame = *s.frame;
  const RationalUnitary u = parse_unitary_argument(*opt.unitary, frame.dim());
  return timed("evolve", opt, [&] {
    const State evolved = evolve(state, u);
    ojson d = header("evolve", &s);
    d["state_description"] = describe_state(state);
    d["unitary"] = matrix_json(u.op());
    d["evolved_state"] = state_json(evolved);
    d["commutes"] = evolution_commutes(frame, state, u);
    ojson rows = ojson::array();
    for (const auto& ray : frame.rays()) {
      ojson r;
      r["id"] = ray.id;
      r["name"] = frame.name(ray.id);
      r["before"] = to_string(born_probability(state, ray.coords));
      r["after"] = to_string(born_probability(evolved, apply(u, ray.coords)));
      rows.push_back(std::move(r));
    }
    d["rays"] = std::move(rows);
    return d;
  });
}

Report cmd_heyting_demo(const Scenario* s, const CommandOptions& opt) {
  return timed("heyting-demo", opt, [&] {
    ojson d = header("heyting-demo", s);
    ojson hosts = ojson::array();
    hosts.push_back(heyting_host("K2", std::make_shared<const Graph>(Graph::complete(2)), true));
    hosts.push_back(heyting_host("P3", std::make_shared<const Graph>(Graph::path(3)), true));
    hosts.push_back(heyting_host("K3", std::make_shared<const Graph>(Graph::complete(3)), true));
    if (s) {
      auto host = std::make_shared<const Graph>(s->graph);
      // Exhaustive triple checks stay cheap up to 4 nodes.
      hosts.push_back(heyting_host(s->name.empty() ? "scenario" : s->name, host, host->size() <= 4));
    }
    d["hosts"] = std::move(hosts);
    return d;
  });
}

Report cmd_export_dot(const Scenario& s, const CommandOptions& opt) {
  return timed("export-dot", opt, [&] {
    std::vector<Context> clusters;
    if (s.frame) {
      clusters = bases_of(s);
    } else {
      for (auto& c : contexts_of(s, policy_of(opt)))
        if (c.members.size() >= 2) clusters.push_back(std::move(c));
    }
    std::optional<IntensiveValuation> giv;
    std::string source;
    if (opt.intensities) giv = giv_of(s, opt, "export-dot --intensities", source);
    ojson d = header("export-dot", &s);
    d["dot"] = export_dot(s.graph, [&](int id) { return s.node_name(id); }, clusters, giv ? &*giv : nullptr,
                          s.name.empty() ? "frame" : s.name);
    return d;
  });
}

std::span<const std::string_view> command_names() {
  static constexpr std::string_view names[] = {"contexts",    "ks",     "valuate",      "collapse",  "check-psa",
                                                "reconstruct", "evolve", "heyting-demo", "export-dot"};
  return names;
}

Report run_command(std::string_view name, const Scenario* s, const CommandOptions& opt) {
  if (name == "heyting-demo") return cmd_heyting_demo(s, opt);
  if (!s) throw Error(std::string(name) + " needs --scenario");
  if (name == "contexts") return cmd_contexts(*s, opt);
  if (name == "ks") return cmd_ks(*s, opt);
  if (name == "valuate") return cmd_valuate(*s, opt);
  if (name == "collapse") return cmd_collapse(*s, opt);
  if (name == "check-psa") return cmd_check_psa(*s, opt);
  if (name == "reconstruct") return cmd_reconstruct(*s, opt);
  if (name == "evolve") return cmd_evolve(*s, opt);
  if (name == "export-dot") return cmd_export_dot(*s, opt);
  throw Error("unknown command " + std::string(name));
}

std::string Report::render(OutputFormat format) const {
  if (format == OutputFormat::json) return data.dump(2) + "\n";
  std::string text;
  if (command == "contexts") text = render_contexts(data);
  else if (command == "ks") text = render_ks(data);
  else if (command == "valuate") text = render_valuate(data);
  else if (command == "collapse") text = render_collapse(data);
  else if (command == "check-psa") text = render_check_psa(data);
  else if (command == "reconstruct") text = render_reconstruct(data);
  else if (command == "evolve") text = render_evolve(data);
  else if (command == "heyting-demo") text = render_heyting(data);
  else if (command == "export-dot") return data["dot"].get<std::string>();
  if (data.contains("elapsed_ms")) {
    std::ostringstream t;
    t << "elapsed: " << std::fixed << std::setprecision(3) << data["elapsed_ms"].get<double>() << " ms\n";
    text += t.str();
  }
  return text;
}

}  // namespace kslogos
