#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "kslogos/frame.hpp"
#include "kslogos/parallel.hpp"
#include "kslogos/valuation.hpp"

namespace kslogos {

/// Odd number of bases with every ray used an even number of times: summing
/// the per-basis equations gives odd = even.
struct ParityCertificate {
  std::size_t basis_count = 0;
  std::map<int, std::size_t> multiplicities;

  bool valid() const;
  friend bool operator==(const ParityCertificate&, const ParityCertificate&) = default;
};

std::optional<ParityCertificate> parity_certificate(std::span<const Context> bases);

struct SearchStats {
  std::uint64_t nodes = 0;     // search nodes visited
  std::uint64_t branches = 0;  // value trials at decision points
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Backtracking ran to completion without a model.
struct SearchExhausted {
  SearchStats stats;
};

using Certificate = std::variant<ParityCertificate, SearchExhausted>;

struct KSReport {
  std::variant<BinaryValuation, Certificate> outcome;
  std::size_t basis_count = 0;
  SearchStats stats;

  bool satisfiable() const { return std::holds_alternative<BinaryValuation>(outcome); }
  const BinaryValuation* witness() const { return std::get_if<BinaryValuation>(&outcome); }
  const Certificate* certificate() const { return std::get_if<Certificate>(&outcome); }
};

struct SolverOptions {
  bool try_parity = true;
  /// sequential: one deterministic depth-first search. parallel: the first
  /// branching basis is split into one subproblem per member, solved
  /// concurrently; the lowest satisfiable subproblem supplies the witness.
  ExecutionPolicy policy = ExecutionPolicy::sequential;
};

/// Exactly-one constraint system over ray ids with optional fixed values.
/// Rays outside every basis take the value 0 in the witness.
KSReport solve_exactly_one(std::span<const int> ids, std::span<const Context> bases,
                           const std::map<int, bool>& fixed, const SolverOptions& options = {});

/// Decides whether the frame admits an ASA. Throws when the frame has no basis.
KSReport ks_solve(const Frame& frame, const SolverOptions& options = {});

}  // namespace kslogos
