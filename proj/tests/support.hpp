// Test-only generators and oracles. Nothing here calls the solver or the
// clique enumerator it is used to check.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kslogos/frame.hpp"
#include "kslogos/linalg.hpp"
#include "kslogos/valuation.hpp"

namespace kstest {

using namespace kslogos;

inline std::string data_path(const std::string& file) { return std::string(KSLOGOS_DATA_DIR) + "/" + file; }

// The 18 rays of the Cabello construction, typed in independently of data/.
inline Frame cabello18() {
  const std::vector<std::vector<long>> v = {
      {0, 0, 1, 0},  {1, 1, 0, 0},   {1, -1, 0, 0}, {0, 1, 0, 0},  {1, 0, 1, 0},  {1, 0, -1, 0},
      {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1},  {1, 1, 1, 1},  {0, 1, 0, -1}, {1, 0, 0, 1},
      {1, 0, 0, -1}, {0, 1, -1, 0},  {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}, {0, 0, 0, 1}};
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < v.size(); ++k) {
    std::vector<Scalar> e;
    for (long x : v[k]) e.emplace_back(x);
    rays.push_back({static_cast<int>(k + 1), "v" + std::to_string(k + 1), Vector(std::move(e))});
  }
  return Frame(4, std::move(rays));
}

inline Frame basis_frame(std::size_t dim, int first_id = 1) {
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < dim; ++k) rays.push_back({first_id + static_cast<int>(k), std::nullopt, Vector::basis(dim, k)});
  return Frame(dim, std::move(rays));
}

inline Vector ints(std::initializer_list<long> xs) { return Vector::from_ints(xs); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long range = 5, long max_den = 4) {
    return Rational(integer(-range, range)) / Rational(integer(1, max_den));
  }

  Scalar scalar(bool complex, long range = 5) {
    return complex ? Scalar(rational(range), rational(range)) : Scalar(rational(range));
  }

  Vector nonzero_vector(std::size_t dim, bool complex, long range = 5) {
    for (;;) {
      std::vector<Scalar> e;
      for (std::size_t k = 0; k < dim; ++k) e.push_back(scalar(complex, range));
      Vector v(std::move(e));
      if (!v.is_zero()) return v;
    }
  }

  /// A A^dagger / Tr(A A^dagger) for a random Gaussian-rational A.
  DensityOperator density(std::size_t dim, bool complex = true) {
    for (;;) {
      Operator a(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) a(i, j) = scalar(complex, 3);
      const Operator m = a * a.adjoint();
      const Scalar tr = m.trace();
      if (tr.is_zero()) continue;
      return DensityOperator(Scalar(Rational(1) / tr.real()) * m);
    }
  }

  /// Products of rational rotations built from Pythagorean triples, complex
  /// rotations, unit phases and permutations.
  RationalUnitary unitary(std::size_t dim, int factors = 4) {
    static const long triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}};
    RationalUnitary u = RationalUnitary::identity(dim);
    if (dim < 2) return u;
    for (int f = 0; f < factors; ++f) {
      const std::size_t i = index(dim);
      std::size_t j = index(dim - 1);
      if (j >= i) ++j;
      const auto& t = triples[index(4)];
      Scalar c(Rational(t[0], t[2]));
      Scalar s(Rational(t[1], t[2]));
      if (coin()) s = s * Scalar::i();
      if (coin()) c = -c;
      switch (integer(0, 2)) {
        case 0: u = u * RationalUnitary::givens(dim, i, j, c, s); break;
        case 1: {
          std::vector<Scalar> ph;
          const Scalar units[] = {Scalar(1), Scalar::i(), Scalar(-1), -Scalar::i()};
          for (std::size_t k = 0; k < dim; ++k) ph.push_back(units[index(4)]);
          u = u * RationalUnitary::phases(ph);
          break;
        }
        default: {
          std::vector<std::size_t> perm(dim);
          for (std::size_t k = 0; k < dim; ++k) perm[k] = k;
          std::shuffle(perm.begin(), perm.end(), gen_);
          u = u * RationalUnitary::permutation(perm);
        }
      }
    }
    return u;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// All canonical rays with entries in {-r..r} in dimension dim.
inline std::vector<Vector> ray_pool(std::size_t dim, long r) {
  std::vector<Vector> out;
  std::vector<long> digits(dim, -r);
  for (;;) {
    std::vector<Scalar> e;
    for (long d : digits) e.emplace_back(d);
    Vector v(std::move(e));
    if (!v.is_zero() && canonical_ray(v) == v) out.push_back(v);
    std::size_t k = 0;
    while (k < dim && digits[k] == r) digits[k++] = -r;
    if (k == dim) break;
    ++digits[k];
  }
  return out;
}

/// Every orthonormal basis (as sorted index tuples) inside a ray pool, by
/// plain nested enumeration.
inline std::vector<std::vector<std::size_t>> pool_bases(const std::vector<Vector>& pool, std::size_t dim) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == dim) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < pool.size(); ++k) {
      bool ok = true;
      for (std::size_t c : cur) ok = ok && inner_product(pool[c], pool[k]).is_zero();
      if (!ok) continue;
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Exhaustive ASA search over all 2^n assignments.
inline bool brute_force_asa_exists(const std::vector<int>& ids, const std::vector<Context>& bases,
                                   const std::map<int, bool>& fixed = {}) {
  const std::size_t n = ids.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::map<int, bool> values;
    for (std::size_t k = 0; k < n; ++k) values[ids[k]] = (mask >> k) & 1u;
    bool ok = true;
    for (const auto& [id, v] : fixed) ok = ok && values.at(id) == v;
    for (const auto& b : bases) {
      int ones = 0;
      for (int id : b.members) ones += values.at(id) ? 1 : 0;
      ok = ok && ones == 1;
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

/// All cliques of a graph by subset enumeration, keeping the maximal ones.
inline std::vector<std::vector<int>> naive_maximal_cliques(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> cliques;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && !g.adjacent(i, j)) ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t c : cliques) {
    bool maximal = true;
    for (std::uint64_t d : cliques)
      if (d != c && (d & c) == c) maximal = false;
    if (!maximal) continue;
    std::vector<int> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (c >> i & 1u) ids.push_back(g.id(i));
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph random_graph(Rng& rng, std::size_t n, int edge_percent) {
  std::vector<int> ids;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < n; ++k) ids.push_back(static_cast<int>(3 * k + 2));  // non-contiguous ids
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.integer(0, 99) < edge_percent) edges.emplace_back(ids[i], ids[j]);
  std::shuffle(ids.begin(), ids.end(), rng.engine());
  return Graph(ids, edges);
}

/// Random frame with at most max_rays rays and at most max_bases declared
/// bases drawn from small-integer ray pools.
struct RandomFrame {
  Frame frame;
  std::vector<Context> bases;
};

inline RandomFrame random_frame(Rng& rng, std::size_t max_rays, std::size_t max_bases) {
  static const std::vector<Vector> pool2 = ray_pool(2, 3);
  static const std::vector<Vector> pool3 = ray_pool(3, 2);
  static const std::vector<Vector> pool4 = ray_pool(4, 1);
  static const auto bases2 = pool_bases(pool2, 2);
  static const auto bases3 = pool_bases(pool3, 3);
  static const auto bases4 = pool_bases(pool4, 4);

  const std::size_t dim = 2 + rng.index(3);
  const auto& pool = dim == 2 ? pool2 : dim == 3 ? pool3 : pool4;
  const auto& bases = dim == 2 ? bases2 : dim == 3 ? bases3 : bases4;

  // Grow a family of bases that overlap often enough to constrain each other.
  std::vector<std::vector<std::size_t>> chosen;
  std::vector<std::size_t> used;
  const std::size_t want = 1 + rng.index(max_bases);
  for (int attempt = 0; attempt < 200 && chosen.size() < want; ++attempt) {
    const auto& b = bases[rng.index(bases.size())];
    if (std::find(chosen.begin(), chosen.end(), b) != chosen.end()) continue;
    std::vector<std::size_t> merged = used;
    for (std::size_t k : b)
      if (std::find(merged.begin(), merged.end(), k) == merged.end()) merged.push_back(k);
    if (merged.size() > max_rays) continue;
    if (!chosen.empty() && merged.size() == used.size() + dim && rng.integer(0, 3) != 0) continue;
    chosen.push_back(b);
    used = std::move(merged);
  }

  // Occasionally add a loose ray outside every basis.
  if (used.size() < max_rays && rng.coin()) {
    const std::size_t extra = rng.index(pool.size());
    if (std::find(used.begin(), used.end(), extra) == used.end()) used.push_back(extra);
  }

  std::vector<Ray> rays;
  std::map<std::size_t, int> id_of;
  for (std::size_t k = 0; k < used.size(); ++k) {
    id_of[used[k]] = static_cast<int>(k + 1);
    rays.push_back({static_cast<int>(k + 1), std::nullopt, pool[used[k]]});
  }
  std::vector<std::vector<int>> declared;
  std::vector<Context> ctx;
  for (const auto& b : chosen) {
    std::vector<int> ids;
    for (std::size_t k : b) ids.push_back(id_of.at(k));
    std::sort(ids.begin(), ids.end());
    declared.push_back(ids);
    ctx.push_back(Context{ids, true, true});
  }
  return {Frame(dim, std::move(rays), declared), std::move(ctx)};
}

}  // namespace kstest
