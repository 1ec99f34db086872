#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "kslogos/scalar.hpp"

namespace kslogos {

/// Column vector over the Gaussian rationals. Rays are stored unnormalized.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> entries);
  static Vector from_ints(std::initializer_list<long> values);
  static Vector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t k) const { return entries_[k]; }
  std::span<const Scalar> entries() const { return entries_; }
  bool is_zero() const;
  bool is_real() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Square matrix, row-major.
class Operator {
 public:
  Operator() = default;
  explicit Operator(std::size_t dim);
  Operator(std::size_t dim, std::vector<Scalar> row_major);
  static Operator identity(std::size_t dim);
  static Operator from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  Operator adjoint() const;
  Scalar trace() const;
  bool is_hermitian() const;

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator*(const Scalar& s, const Operator& a);
  friend bool operator==(const Operator&, const Operator&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

Vector operator*(const Operator& a, const Vector& v);

/// Hermitian, unit trace, positive semi-definite. Validated on construction.
class DensityOperator {
 public:
  /// Largest dimension for which the principal-minor PSD test is run.
  static constexpr std::size_t kMaxDim = 8;

  /// Throws kslogos::Error naming the violated invariant.
  explicit DensityOperator(Operator op);
  static DensityOperator maximally_mixed(std::size_t dim);
  static DensityOperator pure(const Vector& psi);

  std::size_t dim() const { return op_.dim(); }
  const Operator& op() const { return op_; }

  friend bool operator==(const DensityOperator&, const DensityOperator&) = default;

 private:
  struct Trusted {};
  DensityOperator(Operator op, Trusted) : op_(std::move(op)) {}
  Operator op_;
};

/// U with U U^dagger = I exactly. Validated on construction.
class RationalUnitary {
 public:
  explicit RationalUnitary(Operator op);
  static RationalUnitary identity(std::size_t dim);
  /// perm[k] is the image of coordinate k.
  static RationalUnitary permutation(std::span<const std::size_t> perm);
  /// Rotation in the (i, j) plane: [[c, -conj(s)], [s, conj(c)]] with |c|^2 + |s|^2 = 1.
  static RationalUnitary givens(std::size_t dim, std::size_t i, std::size_t j, const Scalar& c,
                                const Scalar& s);
  /// Diagonal of unit-modulus Gaussian rationals.
  static RationalUnitary phases(std::span<const Scalar> diagonal);

  std::size_t dim() const { return op_.dim(); }
  const Operator& op() const { return op_; }

  friend RationalUnitary operator*(const RationalUnitary& a, const RationalUnitary& b);

 private:
  Operator op_;
};

/// A pure state given by an unnormalized vector, or a density operator.
using State = std::variant<Vector, DensityOperator>;

std::size_t state_dim(const State& state);

/// <u|v>, conjugate-linear in u.
Scalar inner_product(const Vector& u, const Vector& v);
/// |v><v| / <v|v>.
Operator projector_from_ray(const Vector& v);
/// Tr(rho P_v); for a pure psi, |<psi|v>|^2 / (<psi|psi><v|v>).
Rational born_probability(const DensityOperator& rho, const Vector& v);
Rational born_probability(const Vector& psi, const Vector& v);
Rational born_probability(const State& state, const Vector& v);
bool commutes(const Operator& p, const Operator& q);

/// U rho U^dagger.
DensityOperator evolve(const DensityOperator& rho, const RationalUnitary& u);
State evolve(const State& state, const RationalUnitary& u);
/// U P U^dagger.
Operator conjugate(const Operator& p, const RationalUnitary& u);
Vector apply(const RationalUnitary& u, const Vector& v);

/// Scales v to coprime Gaussian-integer entries whose first nonzero entry
/// lies in the quadrant re > 0, im >= 0. Two vectors span the same complex
/// ray iff their canonical forms are equal.
Vector canonical_ray(const Vector& v);

Scalar determinant(const Operator& a);
std::size_t rank(std::span<const Vector> vectors);
/// Exact test via all principal minors; throws for dim > DensityOperator::kMaxDim.
bool is_positive_semidefinite(const Operator& a);

/// Outcome of an exact rational linear solve A x = b.
struct LinearSolution {
  enum class Status { unique, underdetermined, inconsistent };
  Status status;
  std::size_t rank = 0;
  std::vector<Rational> x;  // filled only for Status::unique
};

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace kslogos
