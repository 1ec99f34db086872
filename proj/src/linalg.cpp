#include "kslogos/linalg.hpp"

#include <algorithm>
#include <string>

#include "kslogos/error.hpp"

namespace kslogos {

namespace {

[[noreturn]] void dim_mismatch(const char* what, std::size_t a, std::size_t b) {
  throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
              std::to_string(b) + ")");
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("vector must have positive dimension");
}

Vector Vector::from_ints(std::initializer_list<long> values) {
  std::vector<Scalar> e;
  e.reserve(values.size());
  for (long v : values) e.emplace_back(v);
  return Vector(std::move(e));
}

Vector Vector::basis(std::size_t dim, std::size_t k) {
  std::vector<Scalar> e(dim);
  e.at(k) = Scalar(1);
  return Vector(std::move(e));
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Vector::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_real(); });
}

// ---------------------------------------------------------------- Operator

Operator::Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw Error("operator must have positive dimension");
}

Operator::Operator(std::size_t dim, std::vector<Scalar> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (dim == 0) throw Error("operator must have positive dimension");
  if (entries_.size() != dim * dim) {
    throw Error("operator of dimension " + std::to_string(dim) + " needs " +
                std::to_string(dim * dim) + " entries, got " + std::to_string(entries_.size()));
  }
}

Operator Operator::identity(std::size_t dim) {
  Operator id(dim);
  for (std::size_t k = 0; k < dim; ++k) id(k, k) = Scalar(1);
  return id;
}

Operator Operator::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  const std::size_t d = rows.size();
  std::vector<Scalar> e;
  e.reserve(d * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw Error("operator rows must form a square matrix");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Operator(d, std::move(e));
}

Operator Operator::adjoint() const {
  Operator out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

Scalar Operator::trace() const {
  Scalar t;
  for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

bool Operator::is_hermitian() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
  return true;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim_ != b.dim_) dim_mismatch("operator product", a.dim_, b.dim_);
  const std::size_t d = a.dim_;
  Operator out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim_ != b.dim_) dim_mismatch("operator sum", a.dim_, b.dim_);
  Operator out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

Operator operator*(const Scalar& s, const Operator& a) {
  Operator out = a;
  for (auto& e : out.entries_) e *= s;
  return out;
}

Vector operator*(const Operator& a, const Vector& v) {
  if (a.dim() != v.dim()) dim_mismatch("operator-vector product", a.dim(), v.dim());
  std::vector<Scalar> out(v.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  return Vector(std::move(out));
}

// ---------------------------------------------------------------- determinant / rank / PSD

Scalar determinant(const Operator& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);

  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = -det;
    }
    const Scalar p = m[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r * n + col].is_zero()) continue;
      const Scalar f = m[r * n + col] / p;
      for (std::size_t j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
    }
  }
  return det;
}

std::size_t rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().dim();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dim() != cols) dim_mismatch("rank", cols, v.dim());
    rows.emplace_back(v.entries().begin(), v.entries().end());
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][col].is_zero()) continue;
      const Scalar f = rows[k][col] / rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

bool is_positive_semidefinite(const Operator& a) {
  const std::size_t n = a.dim();
  if (n > DensityOperator::kMaxDim) {
    throw Error("PSD test limited to dimension " + std::to_string(DensityOperator::kMaxDim) +
                ", got " + std::to_string(n));
  }
  if (!a.is_hermitian()) return false;
  // A Hermitian matrix is PSD iff every principal minor is nonnegative.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    Operator minor(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) minor(i, j) = a(idx[i], idx[j]);
    const Scalar det = determinant(minor);
    if (!det.is_real() || sgn(det.real()) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- DensityOperator

DensityOperator::DensityOperator(Operator op) : op_(std::move(op)) {
  if (!op_.is_hermitian()) throw Error("density operator is not Hermitian");
  if (!(op_.trace() == Scalar(1))) {
    throw Error("density operator trace is " + to_string(op_.trace()) + ", expected 1");
  }
  if (!is_positive_semidefinite(op_)) throw Error("density operator is not positive semi-definite");
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return DensityOperator(Scalar(Rational(1, dim)) * Operator::identity(dim), Trusted{});
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  return DensityOperator(projector_from_ray(psi), Trusted{});
}

// ---------------------------------------------------------------- RationalUnitary

RationalUnitary::RationalUnitary(Operator op) : op_(std::move(op)) {
  if (!(op_ * op_.adjoint() == Operator::identity(op_.dim()))) {
    throw Error("operator is not unitary (U U^dagger != I)");
  }
}

RationalUnitary RationalUnitary::identity(std::size_t dim) {
  return RationalUnitary(Operator::identity(dim));
}

RationalUnitary RationalUnitary::permutation(std::span<const std::size_t> perm) {
  Operator op(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size()) throw Error("permutation entry out of range");
    op(perm[k], k) = Scalar(1);
  }
  return RationalUnitary(std::move(op));
}

RationalUnitary RationalUnitary::givens(std::size_t dim, std::size_t i, std::size_t j,
                                        const Scalar& c, const Scalar& s) {
  if (i >= dim || j >= dim || i == j) throw Error("givens rotation needs two distinct coordinates");
  Operator op = Operator::identity(dim);
  op(i, i) = c;
  op(i, j) = -s.conj();
  op(j, i) = s;
  op(j, j) = c.conj();
  return RationalUnitary(std::move(op));
}

RationalUnitary RationalUnitary::phases(std::span<const Scalar> diagonal) {
  Operator op(diagonal.size());
  for (std::size_t k = 0; k < diagonal.size(); ++k) op(k, k) = diagonal[k];
  return RationalUnitary(std::move(op));
}

RationalUnitary operator*(const RationalUnitary& a, const RationalUnitary& b) {
  return RationalUnitary(a.op_ * b.op_);
}

// ---------------------------------------------------------------- Born rule and friends

std::size_t state_dim(const State& state) {
  return std::visit([](const auto& s) { return s.dim(); }, state);
}

Scalar inner_product(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) dim_mismatch("inner product", u.dim(), v.dim());
  Scalar acc;
  for (std::size_t k = 0; k < u.dim(); ++k) acc += u[k].conj() * v[k];
  return acc;
}

Operator projector_from_ray(const Vector& v) {
  if (v.is_zero()) throw Error("cannot build a projector from the zero vector");
  const Scalar norm = inner_product(v, v);
  Operator p(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) p(i, j) = v[i] * v[j].conj() / norm;
  return p;
}

Rational born_probability(const DensityOperator& rho, const Vector& v) {
  if (rho.dim() != v.dim()) dim_mismatch("born probability", rho.dim(), v.dim());
  if (v.is_zero()) throw Error("born probability of the zero ray");
  const Operator& m = rho.op();
  Scalar acc;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar row;
    for (std::size_t j = 0; j < v.dim(); ++j) row += m(i, j) * v[j];
    acc += v[i].conj() * row;
  }
  // <v|rho|v> is real for Hermitian rho.
  return Rational(acc.real() / inner_product(v, v).real());
}

Rational born_probability(const Vector& psi, const Vector& v) {
  if (psi.dim() != v.dim()) dim_mismatch("born probability", psi.dim(), v.dim());
  if (psi.is_zero()) throw Error("born probability of the zero state vector");
  if (v.is_zero()) throw Error("born probability of the zero ray");
  const Rational overlap = inner_product(psi, v).norm();
  return Rational(overlap / (inner_product(psi, psi).real() * inner_product(v, v).real()));
}

Rational born_probability(const State& state, const Vector& v) {
  return std::visit([&](const auto& s) { return born_probability(s, v); }, state);
}

bool commutes(const Operator& p, const Operator& q) {
  if (p.dim() != q.dim()) dim_mismatch("commutator", p.dim(), q.dim());
  return p * q == q * p;
}

DensityOperator evolve(const DensityOperator& rho, const RationalUnitary& u) {
  if (rho.dim() != u.dim()) dim_mismatch("evolve", rho.dim(), u.dim());
  return DensityOperator(u.op() * rho.op() * u.op().adjoint());
}

State evolve(const State& state, const RationalUnitary& u) {
  if (const auto* psi = std::get_if<Vector>(&state)) return apply(u, *psi);
  return evolve(std::get<DensityOperator>(state), u);
}

Operator conjugate(const Operator& p, const RationalUnitary& u) {
  if (p.dim() != u.dim()) dim_mismatch("conjugate", p.dim(), u.dim());
  return u.op() * p * u.op().adjoint();
}

Vector apply(const RationalUnitary& u, const Vector& v) { return u.op() * v; }

// ---------------------------------------------------------------- canonical rays

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;
  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Nearest integer to p / q for q > 0, ties rounded up.
mpz_class round_div(const mpz_class& p, const mpz_class& q) {
  mpz_class out;
  const mpz_class num = 2 * p + q;
  const mpz_class den = 2 * q;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

// Euclidean quotient in Z[i]: the Gaussian integer nearest to a / b.
GaussInt nearest_quotient(const GaussInt& a, const GaussInt& b) {
  const GaussInt num = mul(a, {b.re, -b.im});
  const mpz_class n = b.norm();
  return {round_div(num.re, n), round_div(num.im, n)};
}

GaussInt gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = sub(a, mul(nearest_quotient(a, b), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const GaussInt num = mul(a, {b.re, -b.im});
  const mpz_class n = b.norm();
  return {num.re / n, num.im / n};
}

// Multiplies by the unit that moves z into the quadrant re > 0, im >= 0.
GaussInt unit_for_quadrant(const GaussInt& z) {
  const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& u : units) {
    const GaussInt w = mul(z, u);
    if (w.re > 0 && w.im >= 0) return u;
  }
  return {1, 0};
}

}  // namespace

Vector canonical_ray(const Vector& v) {
  if (v.is_zero()) throw Error("the zero vector is not a ray");

  mpz_class common = 1;
  for (const auto& s : v.entries()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), s.real().get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), s.imag().get_den_mpz_t());
  }

  std::vector<GaussInt> z;
  z.reserve(v.dim());
  for (const auto& s : v.entries()) {
    const Rational re = s.real() * common;
    const Rational im = s.imag() * common;
    z.push_back({re.get_num(), im.get_num()});
  }

  GaussInt g{0, 0};
  for (const auto& e : z)
    if (!e.is_zero()) g = g.is_zero() ? e : gcd(g, e);
  for (auto& e : z) e = exact_div(e, g);

  const auto first = std::find_if(z.begin(), z.end(), [](const GaussInt& e) { return !e.is_zero(); });
  const GaussInt u = unit_for_quadrant(*first);
  std::vector<Scalar> out;
  out.reserve(z.size());
  for (const auto& e : z) {
    const GaussInt w = mul(e, u);
    out.emplace_back(Rational(w.re), Rational(w.im));
  }
  return Vector(std::move(out));
}

// ---------------------------------------------------------------- exact solve

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) dim_mismatch("linear solve", rows, b.size());
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  for (auto& row : a)
    if (row.size() != cols) throw Error("linear solve: ragged coefficient matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    const Rational p = a[r][col];
    for (std::size_t j = col; j < cols; ++j) a[r][j] /= p;
    b[r] /= p;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || sgn(a[k][col]) == 0) continue;
      const Rational f = a[k][col];
      for (std::size_t j = col; j < cols; ++j) a[k][j] -= f * a[r][j];
      b[k] -= f * b[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  LinearSolution out{LinearSolution::Status::unique, r, {}};
  for (std::size_t k = r; k < rows; ++k) {
    if (sgn(b[k]) != 0) {
      out.status = LinearSolution::Status::inconsistent;
      return out;
    }
  }
  if (r < cols) {
    out.status = LinearSolution::Status::underdetermined;
    return out;
  }
  out.x.assign(cols, Rational(0));
  for (std::size_t k = 0; k < r; ++k) out.x[pivot_cols[k]] = b[k];
  return out;
}

}  // namespace kslogos
