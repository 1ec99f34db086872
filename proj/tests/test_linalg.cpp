#include <doctest.h>

#include "kslogos/error.hpp"
#include "kslogos/linalg.hpp"
#include "support.hpp"

using namespace kslogos;
using kstest::ints;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("inner_product") {
  CHECK(inner_product(ints({0, 0, 1, 0}), ints({1, 1, 0, 0})) == Scalar(0));
  CHECK(inner_product(ints({1, 0}), ints({1, 0})) == Scalar(1));
  CHECK(inner_product(ints({1, 1, 1, 1}), ints({1, 1, 0, 0})) == Scalar(2));
  // Conjugate-linear in the first argument.
  const Vector u(std::vector<Scalar>{Scalar::i(), Scalar(0)});
  const Vector v(std::vector<Scalar>{Scalar(1), Scalar(0)});
  CHECK(inner_product(u, v) == -Scalar::i());
  CHECK(inner_product(v, u) == Scalar::i());

  try {
    inner_product(ints({1, 0}), ints({1, 0, 0}));
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find('2') != std::string::npos);
    CHECK(msg.find('3') != std::string::npos);
  }
}

TEST_CASE("projector_from_ray") {
  CHECK(projector_from_ray(ints({1, 0})) == Operator::from_rows({{1, 0}, {0, 0}}));
  CHECK(projector_from_ray(ints({1, 1})) ==
        Operator::from_rows({{Scalar(q(1, 2)), Scalar(q(1, 2))}, {Scalar(q(1, 2)), Scalar(q(1, 2))}}));
  const Operator p = projector_from_ray(ints({0, 0, 1, 0}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(p(i, j) == Scalar(i == 2 && j == 2 ? 1 : 0));
  CHECK_THROWS_AS(projector_from_ray(ints({0, 0})), Error);
}

TEST_CASE("projectors are idempotent Hermitian with unit trace") {
  kstest::Rng rng(3);
  for (int k = 0; k < 60; ++k) {
    const Vector v = rng.nonzero_vector(1 + rng.index(4), rng.coin());
    const Operator p = projector_from_ray(v);
    CHECK(p * p == p);
    CHECK(p.is_hermitian());
    CHECK(p.trace() == Scalar(1));
  }
}

TEST_CASE("born_probability") {
  CHECK(born_probability(ints({1, 0, 0, 0}), ints({0, 0, 1, 0})) == 0);
  CHECK(born_probability(ints({1, 1, 1, 1}), ints({1, 1, 0, 0})) == q(1, 2));
  const auto mixed = DensityOperator::maximally_mixed(4);
  CHECK(born_probability(mixed, ints({1, -1, 1, -1})) == q(1, 4));
  CHECK(born_probability(mixed, ints({0, 3, 0, 0})) == q(1, 4));
  CHECK_THROWS_AS(born_probability(ints({0, 0}), ints({1, 0})), Error);
  CHECK_THROWS_AS(born_probability(ints({1, 0}), ints({1, 0, 0})), Error);
}

TEST_CASE("pure state and its density operator agree") {
  kstest::Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + rng.index(4);
    const Vector psi = rng.nonzero_vector(d, true);
    const Vector v = rng.nonzero_vector(d, true);
    const Rational p = born_probability(psi, v);
    CHECK(p == born_probability(DensityOperator::pure(psi), v));
    CHECK(sgn(p) >= 0);
    CHECK(p <= 1);
  }
}

TEST_CASE("born values over an orthonormal family sum to one") {
  kstest::Rng rng(13);
  const std::vector<Vector> family = {ints({1, 1, 0, 0}), ints({1, -1, 0, 0}), ints({0, 0, 1, 1}),
                                      ints({0, 0, 1, -1})};
  for (int k = 0; k < 40; ++k) {
    const State state = rng.coin() ? State(rng.nonzero_vector(4, true)) : State(rng.density(4));
    Rational sum = 0;
    for (const auto& v : family) {
      const Rational p = born_probability(state, v);
      CHECK(sgn(p) >= 0);
      CHECK(p <= 1);
      sum += p;
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("commutes") {
  const Operator p10 = projector_from_ray(ints({1, 0}));
  CHECK(commutes(p10, projector_from_ray(ints({0, 1}))));
  CHECK_FALSE(commutes(p10, projector_from_ray(ints({1, 1}))));
  CHECK(commutes(p10, p10));
  CHECK_THROWS_AS(commutes(p10, Operator::identity(3)), Error);
}

TEST_CASE("distinct rank-1 projectors commute iff their rays are orthogonal") {
  kstest::Rng rng(17);
  int orthogonal = 0;
  for (int k = 0; k < 400; ++k) {
    const std::size_t d = 2 + rng.index(3);
    std::vector<Scalar> a;
    std::vector<Scalar> b;
    for (std::size_t j = 0; j < d; ++j) {
      a.emplace_back(rng.integer(-1, 1));
      b.emplace_back(rng.integer(-1, 1));
    }
    const Vector u(a);
    const Vector v(b);
    if (u.is_zero() || v.is_zero() || canonical_ray(u) == canonical_ray(v)) continue;
    const bool orth = inner_product(u, v).is_zero();
    orthogonal += orth ? 1 : 0;
    CHECK(commutes(projector_from_ray(u), projector_from_ray(v)) == orth);
  }
  CHECK(orthogonal > 20);
}

TEST_CASE("density operator validation") {
  CHECK_NOTHROW(DensityOperator(Operator::from_rows({{Scalar(q(1, 2)), 0}, {0, Scalar(q(1, 2))}})));
  CHECK_THROWS_AS(DensityOperator(Operator::from_rows({{1, 1}, {0, 0}})), Error);          // not Hermitian
  CHECK_THROWS_AS(DensityOperator(Operator::from_rows({{1, 0}, {0, 1}})), Error);          // trace 2
  CHECK_THROWS_AS(DensityOperator(Operator::from_rows({{2, 0}, {0, -1}})), Error);         // not PSD
  CHECK_THROWS_AS(DensityOperator(Operator::from_rows({{Scalar(q(1, 2)), 1}, {1, Scalar(q(1, 2))}})), Error);
  CHECK_THROWS_AS(is_positive_semidefinite(Operator::identity(9)), Error);
}

TEST_CASE("principal-minor PSD test against Gram matrices") {
  kstest::Rng rng(19);
  for (int k = 0; k < 30; ++k) {
    const DensityOperator rho = rng.density(2 + rng.index(3));
    CHECK(is_positive_semidefinite(rho.op()));
    // Shift the spectrum down by 1: now it has a negative eigenvalue.
    const Operator shifted = rho.op() + Scalar(-1) * Operator::identity(rho.dim());
    CHECK_FALSE(is_positive_semidefinite(shifted));
  }
}

TEST_CASE("evolve and conjugate") {
  const std::size_t swap12[] = {1, 0, 2, 3};
  const auto perm = RationalUnitary::permutation(swap12);
  CHECK(evolve(DensityOperator::pure(ints({1, 0, 0, 0})), perm) == DensityOperator::pure(ints({0, 1, 0, 0})));

  const auto rho = DensityOperator::pure(ints({1, 2}));
  CHECK(evolve(rho, RationalUnitary::identity(2)) == rho);

  const RationalUnitary rot(Operator::from_rows({{Scalar(q(3, 5)), Scalar(q(4, 5))}, {Scalar(q(-4, 5)), Scalar(q(3, 5))}}));
  CHECK(evolve(DensityOperator::pure(ints({1, 0})), rot) == DensityOperator::pure(ints({3, -4})));
  CHECK(conjugate(projector_from_ray(ints({1, 0})), rot) == projector_from_ray(ints({3, -4})));

  CHECK_THROWS_AS(RationalUnitary(Operator::from_rows({{1, 1}, {0, 1}})), Error);
  CHECK_THROWS_AS(evolve(rho, RationalUnitary::identity(3)), Error);
}

TEST_CASE("Born rule is invariant under joint evolution") {
  kstest::Rng rng(23);
  for (int k = 0; k < 40; ++k) {
    const std::size_t d = 2 + rng.index(3);
    const auto u = rng.unitary(d);
    const auto rho = rng.density(d);
    const Operator p = projector_from_ray(rng.nonzero_vector(d, true));
    const Operator lhs = evolve(rho, u).op() * conjugate(p, u);
    CHECK(lhs.trace() == (rho.op() * p).trace());
    CHECK(evolve(rho, u).op().trace() == Scalar(1));
  }
}

TEST_CASE("canonical_ray") {
  CHECK(canonical_ray(ints({2, 0})) == ints({1, 0}));
  CHECK(canonical_ray(ints({-1, 1, 1, 1})) == ints({1, -1, -1, -1}));
  CHECK(canonical_ray(Vector(std::vector<Scalar>{Scalar(q(1, 2)), Scalar(q(-1, 3))})) == ints({3, -2}));
  // (i, -1) = i (1, i)
  CHECK(canonical_ray(Vector(std::vector<Scalar>{Scalar::i(), Scalar(-1)})) ==
        Vector(std::vector<Scalar>{Scalar(1), Scalar::i()}));
  // (1+i, 2) = (1+i)(1, 1-i)
  CHECK(canonical_ray(Vector(std::vector<Scalar>{Scalar(q(1), q(1)), Scalar(2)})) ==
        Vector(std::vector<Scalar>{Scalar(1), Scalar(q(1), q(-1))}));
  CHECK_THROWS_AS(canonical_ray(ints({0, 0})), Error);
}

TEST_CASE("canonical_ray identifies exactly the complex multiples") {
  kstest::Rng rng(29);
  for (int k = 0; k < 150; ++k) {
    const std::size_t d = 1 + rng.index(4);
    const Vector v = rng.nonzero_vector(d, true);
    Scalar lambda;
    while (lambda.is_zero()) lambda = rng.scalar(true, 7);
    std::vector<Scalar> scaled;
    for (const auto& s : v.entries()) scaled.push_back(lambda * s);
    const Vector c = canonical_ray(v);
    CHECK(c == canonical_ray(Vector(scaled)));
    CHECK(canonical_ray(c) == c);
    // Same ray: projectors agree.
    CHECK(projector_from_ray(c) == projector_from_ray(v));
  }
}

TEST_CASE("rank and determinant") {
  const std::vector<Vector> vs = {ints({1, 0, 0}), ints({0, 1, 0}), ints({1, 1, 0})};
  CHECK(rank(vs) == 2);
  CHECK(determinant(Operator::from_rows({{1, 2}, {3, 4}})) == Scalar(-2));
  CHECK(determinant(Operator::from_rows({{0, 1}, {1, 0}})) == Scalar(-1));
}

TEST_CASE("solve_exact") {
  using S = LinearSolution::Status;
  const auto unique = solve_exact({{q(1), q(1)}, {q(1), q(-1)}}, {q(3), q(1)});
  REQUIRE(unique.status == S::unique);
  CHECK(unique.x == std::vector<Rational>{q(2), q(1)});
  CHECK(solve_exact({{q(1), q(1)}}, {q(1)}).status == S::underdetermined);
  CHECK(solve_exact({{q(1)}, {q(2)}}, {q(1), q(3)}).status == S::inconsistent);
}
