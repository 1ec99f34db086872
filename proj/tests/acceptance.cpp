// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "kslogos/commands.hpp"
#include "kslogos/heyting.hpp"
#include "kslogos/ks_solver.hpp"
#include "support.hpp"

using namespace kslogos;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

const char* kBundled[] = {"cabello18.json", "qubit-pair.json", "single-basis-d3.json", "qubit-tomography.json",
                          "powers-table.json"};

Scenario bundled(const char* file) { return load_scenario(kstest::data_path(file)); }

Outcome cabello_structure() {
  const Scenario s = bundled("cabello18.json");
  const auto bases = resolve_bases(s.require_frame("acceptance"));
  std::map<int, int> seen;
  bool sizes = true;
  for (const auto& b : bases) {
    sizes = sizes && b.members.size() == 4 && b.is_basis;
    for (int id : b.members) ++seen[id];
  }
  bool twice = seen.size() == 18;
  for (const auto& [id, n] : seen) twice = twice && n == 2;
  return {bases.size() == 9 && sizes && twice,
          std::to_string(bases.size()) + " bases of size 4, every ray in exactly 2: " + (twice ? "yes" : "no")};
}

Outcome ks_unsat() {
  const Scenario s = bundled("cabello18.json");
  CommandOptions opt;
  opt.sequential = true;
  const std::string text = cmd_ks(s, opt).render(OutputFormat::text);
  const bool parity = text.find("UNSATISFIABLE (parity certificate: 9 bases, all multiplicities even)") !=
                      std::string::npos;
  const auto cert = parity_certificate(resolve_bases(*s.frame));
  bool twos = cert && cert->basis_count == 9 && cert->multiplicities.size() == 18;
  if (cert)
    for (const auto& [id, n] : cert->multiplicities) twos = twos && n == 2;

  const auto t0 = std::chrono::steady_clock::now();
  opt.parity = false;
  const auto search = cmd_ks(s, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool exhausted = search.data["verdict"] == "unsatisfiable" &&
                         search.data["certificate"]["kind"] == "search_exhausted";
  std::ostringstream d;
  d << "parity certificate " << (parity && twos ? "9 bases, multiplicities all 2" : "MISSING")
    << "; exhaustive search " << (exhausted ? "unsatisfiable" : "NOT unsatisfiable") << " ("
    << search.data["certificate"]["nodes"] << " nodes) in " << secs << " s";
  return {parity && twos && exhausted && secs < 5.0, d.str()};
}

Outcome classical_sat() {
  std::ostringstream d;
  bool ok = true;
  for (const char* file : {"single-basis-d3.json", "qubit-pair.json"}) {
    const Scenario s = bundled(file);
    const auto r = ks_solve(*s.frame, {true, ExecutionPolicy::sequential});
    const bool asa = r.satisfiable() && is_asa(*r.witness(), resolve_bases(*s.frame)) &&
                     r.witness()->covers(s.frame->ids());
    ok = ok && asa && is_classical(s.graph);
    d << (d.tellp() > 0 ? "; " : "") << s.name << (asa ? " witness is an ASA" : " NO ASA");
  }
  return {ok, d.str()};
}

// The same 100 random rational pure states feed criteria 4 and 5.
std::vector<State> random_pure_states() {
  kstest::Rng rng(2024);
  std::vector<State> out;
  for (int k = 0; k < 100; ++k) out.emplace_back(rng.nonzero_vector(4, false, 6));
  return out;
}

Outcome born_is_psa(const std::vector<State>& states) {
  const Scenario s = bundled("cabello18.json");
  const Frame& f = *s.frame;
  const auto bases = resolve_bases(f);
  const auto contexts = enumerate_maximal_contexts(f, s.graph);
  int passed = 0;
  for (const auto& st : states) {
    const auto giv = born_giv(f, st);
    const auto audit = audit_psa(giv, f.ids(), bases, contexts);
    bool exact = audit.ok() && check_psa(giv, f);
    for (const auto& e : audit.bases) exact = exact && e.sum == 1;
    passed += exact ? 1 : 0;
  }
  return {passed == 100, std::to_string(passed) + "/100 Born tables pass check_psa with basis sums exactly 1"};
}

Outcome collapse_not_asa(const std::vector<State>& states) {
  const Scenario s = bundled("cabello18.json");
  const auto bases = resolve_bases(*s.frame);
  int rejected = 0;
  for (const auto& st : states) rejected += is_asa(collapse_tau(born_giv(*s.frame, st)), bases) ? 0 : 1;
  return {rejected == 100, std::to_string(rejected) + "/100 collapsed valuations fail is_asa"};
}

Outcome solver_oracle() {
  kstest::Rng rng(31337);
  int agree = 0, sat = 0;
  for (int k = 0; k < 200; ++k) {
    const auto rf = kstest::random_frame(rng, 12, 5);
    const auto bases = resolve_bases(rf.frame);
    const bool expected = kstest::brute_force_asa_exists(rf.frame.ids(), bases);
    const auto r = ks_solve(rf.frame, {true, ExecutionPolicy::sequential});
    const bool same = r.satisfiable() == expected && (!r.satisfiable() || is_asa(*r.witness(), bases));
    agree += same ? 1 : 0;
    sat += expected ? 1 : 0;
  }
  return {agree == 200, std::to_string(agree) + "/200 verdicts match 2^n enumeration (" + std::to_string(sat) +
                            " satisfiable, " + std::to_string(200 - sat) + " unsatisfiable)"};
}

Outcome gleason_round_trip() {
  const Scenario s = bundled("qubit-tomography.json");
  const Frame& f = *s.frame;
  kstest::Rng rng(4242);
  int exact = 0;
  for (int k = 0; k < 50; ++k) {
    const DensityOperator rho = rng.density(2);
    const auto r = reconstruct_density(f, born_giv(f, rho));
    exact += r.diagnostic == Reconstruction::Diagnostic::ok && r.rho && r.rho->op() == rho.op() ? 1 : 0;
  }
  return {exact == 50, std::to_string(exact) + "/50 densities reconstructed entrywise"};
}

Outcome evolution() {
  kstest::Rng rng(5150);
  std::ostringstream d;
  bool ok = true;
  for (const char* file : kBundled) {
    const Scenario s = bundled(file);
    if (!s.frame) continue;  // abstract graphs have no unitary action
    const std::size_t dim = s.frame->dim();
    const bool complex = s.field == Field::gaussian_rational;
    int held = 0;
    for (int k = 0; k < 50; ++k) {
      // Always at least one 3-4-5 rotation so the unitary is not a permutation.
      const std::size_t i = rng.index(dim);
      std::size_t j = rng.index(dim - 1);
      if (j >= i) ++j;
      const RationalUnitary u = RationalUnitary::givens(dim, i, j, Scalar(Rational(3, 5)), Scalar(Rational(4, 5))) *
                                rng.unitary(dim, 3);
      const State st = rng.coin() ? State(rng.density(dim, complex)) : State(rng.nonzero_vector(dim, complex));
      held += evolution_commutes(*s.frame, st, u) ? 1 : 0;
    }
    ok = ok && held == 50;
    d << (d.tellp() > 0 ? "; " : "") << s.name << " " << held << "/50";
  }
  return {ok, d.str()};
}

Outcome heyting() {
  std::ostringstream d;
  bool ok = true;
  const std::pair<const char*, Graph> hosts[] = {{"K2", Graph::complete(2)}, {"P3", Graph::path(3)},
                                                 {"K3", Graph::complete(3)}};
  for (const auto& [name, g] : hosts) {
    const auto host = std::make_shared<const Graph>(g);
    const auto all = all_subgraphs(host);
    std::size_t triples = 0;
    bool holds = true;
    for (const auto& a : all)
      for (const auto& b : all) {
        const Subgraph imp = implication(a, b);
        for (const auto& c : all) {
          holds = holds && leq(meet(c, a), b) == leq(c, imp);
          ++triples;
        }
      }
    ok = ok && holds;
    d << name << " " << triples << " triples " << (holds ? "hold" : "FAIL") << "; ";
  }
  const auto k2 = std::make_shared<const Graph>(Graph::complete(2));
  const Subgraph a(k2, {1, 2}, {});
  const bool lem_fails = join(a, pseudo_complement(a)) != Subgraph::top(k2);
  d << "K2 excluded middle fails at a = nodes {1, 2}, no edges: " << (lem_fails ? "yes" : "no");
  return {ok && lem_fails, d.str()};
}

Outcome determinism() {
  std::size_t runs = 0, mismatches = 0;
  for (const char* file : kBundled) {
    for (std::string_view cmd : command_names()) {
      std::vector<std::string> args = {std::string(cmd), "--scenario", kstest::data_path(file), "--sequential"};
      if (cmd == "evolve") args.insert(args.end(), {"--unitary", "givens:1:2:3/5:4/5"});
      for (const char* format : {"text", "json"}) {
        auto a = args;
        a.insert(a.end(), {"--format", format});
        std::ostringstream out1, err1, out2, err2;
        const int c1 = run_cli(a, out1, err1);
        const int c2 = run_cli(a, out2, err2);
        ++runs;
        if (c1 != c2 || out1.str() != out2.str() || err1.str() != err2.str()) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(runs - mismatches) + "/" + std::to_string(runs) +
                               " subcommand/dataset/format runs byte-identical"};
}

}  // namespace

int main() {
  const auto states = random_pure_states();
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"Cabello-18 structure", 1, cabello_structure},
      {"KS unsatisfiability", 5, ks_unsat},
      {"classical satisfiability", 1, classical_sat},
      {"intensive non-contextuality", 5, [&] { return born_is_psa(states); }},
      {"tau-collapse never an ASA", 2, [&] { return collapse_not_asa(states); }},
      {"solver oracle equivalence", 30, solver_oracle},
      {"density round trip", 2, gleason_round_trip},
      {"evolution invariance", 5, evolution},
      {"Heyting adjunction", 10, heyting},
      {"determinism", 10, determinism},
  };
  int failures = 0;
  int number = 0;
  for (const auto& c : criteria) {
    ++number;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit;
    const bool pass = r.ok && in_time;
    failures += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s%s", secs, c.limit, in_time ? "" : ", TOO SLOW");
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "AC" << number << " " << c.name << ": " << r.detail << " ("
              << timing << ")\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
