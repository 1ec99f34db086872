#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kslogos/frame.hpp"
#include "kslogos/linalg.hpp"
#include "kslogos/parallel.hpp"

namespace kslogos {

/// Total {0,1} assignment over a frame's rays (a global binary valuation).
class BinaryValuation {
 public:
  BinaryValuation() = default;
  explicit BinaryValuation(std::map<int, bool> values) : values_(std::move(values)) {}
  static BinaryValuation constant(std::span<const int> ids, bool value);

  bool operator()(int id) const;
  const std::map<int, bool>& values() const { return values_; }
  bool covers(std::span<const int> ids) const;

  friend bool operator==(const BinaryValuation&, const BinaryValuation&) = default;

 private:
  std::map<int, bool> values_;
};

/// {0,1} assignment on one context; a basis context carries exactly one 1.
class LocalBinaryValuation {
 public:
  /// Throws if the keys differ from the context's members or a basis
  /// context does not have exactly one 1.
  LocalBinaryValuation(Context context, std::map<int, bool> values);

  const Context& context() const { return context_; }
  const std::map<int, bool>& values() const { return values_; }

  friend bool operator==(const LocalBinaryValuation&, const LocalBinaryValuation&) = default;

 private:
  Context context_;
  std::map<int, bool> values_;
};

/// Total assignment of exact rationals in [0,1].
class IntensiveValuation {
 public:
  enum class Origin { born, loaded };

  /// Throws if any value lies outside [0,1].
  IntensiveValuation(std::map<int, Rational> values, Origin origin, std::string source = {});

  const Rational& operator()(int id) const;
  const std::map<int, Rational>& values() const { return values_; }
  Origin origin() const { return origin_; }
  const std::string& source() const { return source_; }

 private:
  std::map<int, Rational> values_;
  Origin origin_;
  std::string source_;
};

/// Exactly one 1 in every basis.
bool is_asa(const BinaryValuation& v, std::span<const Context> bases);

/// Pairwise agreement on shared ray ids.
bool check_compatibility(std::span<const LocalBinaryValuation> family);

/// A global valuation extending every member of the family and satisfying
/// is_asa on the frame's bases, if one exists. Throws on an incompatible family.
std::optional<BinaryValuation> paste_local_valuations(std::span<const LocalBinaryValuation> family,
                                                      const Frame& frame);

LocalBinaryValuation restrict_global(const BinaryValuation& v, const Context& c);

/// Born-rule valuation of every ray.
IntensiveValuation born_giv(const Frame& frame, const State& state,
                            ExecutionPolicy policy = ExecutionPolicy::parallel);

/// Per-context sums behind check_psa.
struct PsaAudit {
  struct Entry {
    Context context;
    Rational sum;
    bool ok = false;  // basis: sum == 1, otherwise sum <= 1
  };
  std::vector<Entry> bases;
  std::vector<Entry> contexts;
  std::vector<int> missing;        // frame ids without a value
  std::vector<int> out_of_range;   // values outside [0,1]
  bool ok() const;
};

PsaAudit audit_psa(const IntensiveValuation& giv, std::span<const int> ids,
                   std::span<const Context> bases, std::span<const Context> contexts);
/// Basis sums exactly 1 and every maximal orthogonal context sums to at most 1.
bool check_psa(const IntensiveValuation& giv, const Frame& frame);

/// Support map: 0 stays 0, any positive value becomes 1.
BinaryValuation collapse_tau(const IntensiveValuation& giv);

struct Reconstruction {
  enum class Diagnostic { ok, underdetermined, inconsistent, not_psd };
  Diagnostic diagnostic;
  std::optional<DensityOperator> rho;
  std::size_t rank = 0;      // rank of the real linear system
  std::size_t unknowns = 0;  // real parameters of a Hermitian matrix (dim^2)
};

std::string to_string(Reconstruction::Diagnostic d);

/// Solves Tr(rho P_v) = giv(v) together with Tr(rho) = 1 for Hermitian rho.
Reconstruction reconstruct_density(const Frame& frame, const IntensiveValuation& giv);

/// born(U rho U^dagger, U v) == born(rho, v) for every ray v.
bool evolution_commutes(const Frame& frame, const State& state, const RationalUnitary& u);

/// True iff every connected component of the graph is complete.
bool is_classical(const Graph& graph);
/// ASA for a classical frame: 1 on the lowest id of each basis.
BinaryValuation classical_asa(const Frame& frame);

}  // namespace kslogos
