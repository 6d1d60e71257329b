#include "doctest.h"
#include "thickrep/linalg.hpp"

using namespace thickrep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F5 = FieldSpec::prime(5);

Vector vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.emplace_back(f, x);
  return v;
}

}  // namespace

TEST_CASE("rref examples") {
  auto a = rref(Matrix::from_ints(Q, {{0, 1}, {1, 0}}));
  CHECK(a.rank == 2);
  CHECK(a.matrix == Matrix::identity(Q, 2));
  auto b = rref(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  CHECK(b.rank == 1);
  CHECK(b.matrix == Matrix::from_ints(Q, {{1, 2}, {0, 0}}));
  auto c = rref(Matrix::from_ints(F2, {{1, 1}, {1, 1}}));
  CHECK(c.rank == 1);
  CHECK(c.matrix == Matrix::from_ints(F2, {{1, 1}, {0, 0}}));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(Q, 3)).dim() == 0);
  CHECK(kernel(Matrix(Q, 2, 3)) == Subspace::full(Q, 3));
  const Subspace k = kernel(Matrix::from_ints(F2, {{1, 1}}));
  CHECK(k == Subspace::span(F2, 2, {vec(F2, {1, 1})}));
}

TEST_CASE("subspace algebra examples") {
  const Subspace e1 = Subspace::span(Q, 2, {vec(Q, {1, 0})});
  const Subspace e2 = Subspace::span(Q, 2, {vec(Q, {0, 1})});
  const Subspace d = Subspace::span(Q, 2, {vec(Q, {1, 1})});
  CHECK(direct_sum_is_ambient(e1, e2));
  CHECK(subspace_intersect(d, e2).dim() == 0);
  CHECK(subspace_sum(d, e2) == Subspace::full(Q, 2));
  CHECK_FALSE(direct_sum_is_ambient(e1, e1));
  CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(Q, 3)), Error);
  CHECK(Subspace::full(Q, 2).contains(d));
  CHECK_FALSE(e1.contains(d));
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(Matrix::from_ints(F2, {{0, 1}, {1, 1}})) == Poly(F2, {1, 1, 1}));
  const Poly expect = Poly(Q, {-1, 1}) * Poly(Q, {-2, 1}) * Poly(Q, {-3, 1});
  CHECK(charpoly(Matrix::from_ints(Q, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})) == expect);
  CHECK(charpoly(Matrix::from_ints(Q, {{0, 7}, {1, 0}})) == Poly(Q, {-7, 0, 1}));
  CHECK_THROWS_AS(charpoly(Matrix(Q, 2, 3)), Error);
}

TEST_CASE("rref idempotent, rank-nullity, dimension formula") {
  Rng rng(3);
  for (const FieldSpec& f : {Q, F2, F5, FieldSpec::extension(2, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = draw_between(rng, 1, 5), c = draw_between(rng, 1, 6);
      Matrix m = random_matrix(f, r, c, rng);
      if (trial % 3 == 0) m = random_matrix(f, r, 2, rng) * random_matrix(f, 2, c, rng);
      const RrefResult a = rref(m);
      CHECK(rref(a.matrix).matrix == a.matrix);
      CHECK(kernel(m).dim() + a.rank == c);
      const Subspace ker = kernel(m);
      for (const Vector& v : ker.basis_vectors()) CHECK(is_zero_vector(m.apply(v)));

      const std::size_t n = 5;
      const Subspace s1 = Subspace::row_space(random_matrix(f, draw_between(rng, 1, 4), n, rng));
      const Subspace s2 = Subspace::row_space(random_matrix(f, draw_between(rng, 1, 4), n, rng));
      const Subspace sum = subspace_sum(s1, s2), meet = subspace_intersect(s1, s2);
      CHECK(s1.dim() + s2.dim() == sum.dim() + meet.dim());
      CHECK(s1.contains(meet));
      CHECK(s2.contains(meet));
      CHECK(sum.contains(s1));
    }
  }
}

TEST_CASE("charpoly is a similarity invariant") {
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldSpec f = trial % 2 ? Q : FieldSpec::prime(7);
    const std::size_t n = draw_between(rng, 1, 6);
    const Matrix m = random_matrix(f, n, n, rng);
    const Matrix p = random_invertible(f, n, rng);
    CHECK(charpoly(inverse(p) * m * p) == charpoly(m));
    // Constant term is (-1)^n det.
    Scalar c0 = charpoly(m).coeff(0);
    if (n % 2) c0 = -c0;
    CHECK(c0 == determinant(m));
  }
}

TEST_CASE("charpoly in characteristic 2 needs no division") {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = random_matrix(F2, 4, 4, rng);
    const Poly cp = charpoly(m);
    // Cayley-Hamilton.
    Matrix acc(F2, 4, 4), power = Matrix::identity(F2, 4);
    for (int i = 0; i <= cp.degree(); ++i) {
      acc = acc + power.scaled(cp.coeff(i));
      power = power * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("inverse and solve") {
  const Matrix m = Matrix::from_ints(Q, {{2, 1}, {1, 1}});
  CHECK(m * inverse(m) == Matrix::identity(Q, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), Error);
  Vector x;
  REQUIRE(solve(m, vec(Q, {3, 2}), x));
  CHECK(x == vec(Q, {1, 1}));
  CHECK_FALSE(solve(Matrix::from_ints(Q, {{1, 1}, {1, 1}}), vec(Q, {1, 2}), x));
}

TEST_CASE("echelon basis") {
  EchelonBasis e(F5, 3);
  CHECK(e.add(vec(F5, {1, 2, 3})));
  CHECK_FALSE(e.add(vec(F5, {2, 4, 6})));
  CHECK(e.add(vec(F5, {0, 1, 0})));
  CHECK(e.contains(vec(F5, {1, 0, 3})));
  CHECK_FALSE(e.contains(vec(F5, {0, 0, 1})));
  CHECK(e.subspace() == Subspace::span(F5, 3, {vec(F5, {1, 0, 3}), vec(F5, {0, 1, 0})}));
}

TEST_CASE("transform and canonical order") {
  const Matrix swap = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  const Subspace e1 = Subspace::span(Q, 2, {vec(Q, {1, 0})});
  CHECK(transform(swap, e1) == Subspace::span(Q, 2, {vec(Q, {0, 1})}));
  CHECK(canonical_less(Subspace::span(Q, 2, {vec(Q, {0, 1})}), e1));
  CHECK(canonical_less(e1, Subspace::full(Q, 2)));
}
