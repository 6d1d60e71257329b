#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "thickrep/constructions.hpp"

using namespace thickrep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);
const FieldSpec F13 = FieldSpec::prime(13);

Scalar s(const FieldSpec& f, long long x) { return Scalar(f, x); }

Vector ints(const FieldSpec& f, std::vector<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(Scalar(f, x));
  return v;
}

}  // namespace

TEST_CASE("companion pair") {
  const CompanionPair cp = companion_pair(Q, 4, s(Q, 2), s(Q, 3));
  CHECK(burnside_dim(cp.rep) == 16);
  CHECK(cp.irreducible == Tri::Yes);
  CHECK_FALSE(cp.roots_present);
  REQUIRE(cp.windows.size() == 3);
  const Subspace& w2 = cp.windows[1];
  CHECK(w2.dim() == 4);
  CHECK(is_invariant(exterior_rep(cp.rep, 2), w2));
  CHECK(w2.contains(wedge_of_vectors(Q, 4, {unit_vector(Q, 4, 0), unit_vector(Q, 4, 1)}).coords()));
  CHECK(realizable_search(w2, 4, 2).status == Realizability::Realizable);
  CHECK_THROWS_AS(companion_pair(Q, 3, s(Q, 2), s(Q, 2)), Error);
  CHECK_THROWS_AS(companion_pair(Q, 3, s(Q, 0), s(Q, 2)), Error);

  for (std::size_t n : {3u, 5u}) {
    const CompanionPair c = companion_pair(F13, n, s(F13, 2), s(F13, 5));
    for (std::size_t m = 1; m < n; ++m) {
      CHECK(c.windows[m - 1].dim() == n);
      CHECK(realizable_search(c.windows[m - 1], n, m).status == Realizability::Realizable);
    }
  }
  // 1 and 12 have three cube roots in F13.
  CHECK(companion_pair(F13, 3, s(F13, 1), s(F13, 12)).roots_present);
}

TEST_CASE("block representation over F13") {
  const BlockRepSpec spec = default_block_spec(F13, 2, 2);
  CHECK(spec.alphas == ints(F13, {1, 4}));
  const BlockRep br = block_rep(spec);
  CHECK(br.betas == ints(F13, {3, 9}));
  CHECK(br.irreducible == Tri::Yes);
  CHECK(burnside_dim(br.rep) == 16);
  CHECK(br.attempts <= 32);
  CHECK(br.w.dim() == 2);
  CHECK(br.y.dim() == 4);
  CHECK(br.coefficients_nonzero);
  CHECK(br.coefficients.size() == 4);
  const WedgeVector e12 = wedge_of_vectors(F13, 4, {unit_vector(F13, 4, 0), unit_vector(F13, 4, 1)});
  const WedgeVector e34 = wedge_of_vectors(F13, 4, {unit_vector(F13, 4, 2), unit_vector(F13, 4, 3)});
  CHECK(br.w == Subspace::span(F13, 6, {e12.coords(), e34.coords()}));

  const ThicknessReport rpt = is_m_thick_criterion(br.rep, 2);
  CHECK(rpt.verdict == Verdict::NotThick);
  REQUIRE(rpt.invariant_pair);
  CHECK(rpt.invariant_pair->w1.dim() == 2);
  CHECK(recheck_certificate(br.rep, rpt).ok);
  CHECK(realizable_search(perp(br.w, 4, 2), 4, 2).status == Realizability::Realizable);
  CHECK(is_m_thick_definition(br.rep, 2).verdict == Verdict::NotThick);
  CHECK(is_m_thick_definition(br.rep, 1).verdict == Verdict::Thick);
}

TEST_CASE("block representation shapes") {
  CHECK(suggest_prime(2, 2) == 13);
  CHECK(suggest_prime(2, 3) == 13);
  CHECK(suggest_prime(3, 2) == 13);
  for (auto [ell, m] : {std::pair<std::size_t, std::size_t>{2, 3}, {3, 2}}) {
    const FieldSpec f = FieldSpec::prime(static_cast<std::uint32_t>(suggest_prime(ell, m)));
    const BlockRep br = block_rep(default_block_spec(f, ell, m), true, 5);
    CHECK(br.irreducible == Tri::Yes);
    CHECK(br.w.dim() == ell);
    CHECK(br.y.dim() == static_cast<std::size_t>(std::pow(m, ell)));
    CHECK(br.coefficients_nonzero);
    const std::size_t n = ell * m;
    // W realizes the lower bound n/m on the r-number.
    CHECK(br.w.dim() == r_number_bounds(n, m).lower);
    CHECK(realizable_search(br.w, n, m).status == Realizability::Realizable);
    // Y and its perp are too large to scan; check the decomposable vectors directly.
    std::vector<Vector> across, first_block;
    for (std::size_t t = 0; t < ell; ++t) across.push_back(unit_vector(f, n, t * m));
    for (std::size_t i = 0; i < n - ell; ++i) first_block.push_back(unit_vector(f, n, i));
    CHECK(br.y.contains(wedge_of_vectors(f, n, across).coords()));
    CHECK(perp(br.y, n, ell).contains(wedge_of_vectors(f, n, first_block).coords()));
  }
  const BlockRep loose = block_rep(default_block_spec(F13, 2, 2), false, 3);
  CHECK(is_invariant(exterior_rep(loose.rep, 2), loose.w));

  BlockRepSpec bad = default_block_spec(F13, 2, 2);
  bad.alphas = ints(F13, {1, 1});
  CHECK_THROWS_AS(block_rep(bad), Error);
  bad.alphas = ints(F13, {1, 2});  // 2 is not a square mod 13
  CHECK_THROWS_AS(block_rep(bad), Error);
  BlockRepSpec char_divides = default_block_spec(FieldSpec::prime(5), 2, 2);
  char_divides.field = FieldSpec::prime(2);
  char_divides.alphas = ints(char_divides.field, {1, 1});
  CHECK_THROWS_AS(block_rep(char_divides), Error);
  CHECK_THROWS_AS(default_block_spec(F5, 2, 3), Error);
}

TEST_CASE("block eigenvectors") {
  const auto small = block_eigenvectors({Matrix::from_ints(F5, {{1}}), Matrix::from_ints(F5, {{4}})});
  REQUIRE(small.size() == 2);
  CHECK(small[0].first == s(F5, 2));
  CHECK(small[0].second == ints(F5, {2, 1}));
  CHECK(small[1].first == s(F5, 3));
  CHECK(small[1].second == ints(F5, {3, 1}));

  const auto pairs = block_eigenvectors({Matrix::identity(F5, 2), Matrix::from_ints(F5, {{1, 0}, {0, 4}})});
  REQUIRE(pairs.size() == 4);
  Vector eigenvalues;
  std::vector<Vector> vs;
  for (const auto& [xi, w] : pairs) {
    eigenvalues.push_back(xi);
    vs.push_back(w);
  }
  std::sort(eigenvalues.begin(), eigenvalues.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  CHECK(eigenvalues == ints(F5, {1, 2, 3, 4}));
  CHECK(rank(Matrix::from_rows(F5, vs)) == 4);
  // 2 has no square root in F5.
  CHECK_THROWS_AS(block_eigenvectors({Matrix::from_ints(F5, {{1}}), Matrix::from_ints(F5, {{2}})}), Error);
}

TEST_CASE("generic diagonalizable matrix") {
  const Vector e1 = ints(Q, {1, 0});
  const Diagonalizable d = generic_diagonalizable(e1, {});
  REQUIRE(d.basis.size() == 2);
  CHECK(d.betas[0] != d.betas[1]);
  Vector sum = zero_vector(Q, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(d.f.apply(d.basis[i]) == Vector{d.betas[i] * d.basis[i][0], d.betas[i] * d.basis[i][1]});
    sum[0] += d.basis[i][0];
    sum[1] += d.basis[i][1];
  }
  CHECK(sum == e1);
  const Representation r = make_representation(Q, RepMode::Group, {d.f});
  CHECK(spin(r, {e1}).is_full());

  const Diagonalizable small = generic_diagonalizable(ints(F5, {1, 1}), ints(F5, {1, 2}));
  CHECK(small.betas == ints(F5, {3, 4}));
  CHECK_THROWS_AS(generic_diagonalizable(ints(F5, {1, 1, 1}), ints(F5, {1, 2})), Error);
  CHECK_THROWS_AS(generic_diagonalizable(ints(F5, {0, 0}), {}), Error);

  // Invariant subspaces of a diagonalizable map with distinct eigenvalues are
  // exactly the coordinate subspaces of its eigenbasis.
  const FieldSpec F7 = FieldSpec::prime(7);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Diagonalizable g = generic_diagonalizable(ints(F7, {1, 2, 3}), {}, seed);
    const auto subs = all_submodules(make_representation(F7, RepMode::Group, {g.f}), 100000);
    CHECK(subs.size() == 8);
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<Vector> picked;
      for (std::size_t i = 0; i < 3; ++i)
        if (mask >> i & 1) picked.push_back(g.basis[i]);
      CHECK(std::find(subs.begin(), subs.end(), Subspace::span(F7, 3, picked)) != subs.end());
    }
  }
}

TEST_CASE("e1 wedge subspace meets every translate") {
  const FieldSpec F2 = FieldSpec::prime(2);
  const Subspace w = e1_wedge_subspace(F2, 4);
  CHECK(w.dim() == 3);
  for (const Vector& b : w.basis_vectors()) CHECK(is_decomposable(WedgeVector(F2, 4, 2, b)).decomposable);
  CHECK_THROWS_AS(e1_wedge_subspace(F2, 3), Error);

  Matrix shift(F2, 4, 4);
  shift(0, 3) = Scalar::one(F2);
  for (std::size_t i = 1; i < 4; ++i) shift(i, i - 1) = Scalar::one(F2);
  Matrix elem = Matrix::identity(F2, 4);
  elem(0, 1) = Scalar::one(F2);
  const Representation gl4 = make_representation(F2, RepMode::Group, {shift, elem});
  const auto group = group_closure(gl4, 100000);
  CHECK(group.size() == 20160);
  std::size_t disjoint = 0;
  for (const Matrix& g : group)
    if (!subspace_intersect(transform(compound(g, 2), w), w).dim()) ++disjoint;
  CHECK(disjoint == 0);
}

TEST_CASE("Lie generators") {
  CHECK(lie_generators(Q, LieFamily::sl, 2).size() == 3);
  CHECK(lie_generators(Q, LieFamily::gl, 3).size() == 9);
  const auto sp = lie_generators(Q, LieFamily::sp, 2);
  CHECK(sp.size() == 10);
  const Matrix j = lie_form(Q, LieFamily::sp, 2);
  for (const Matrix& x : sp) CHECK((x.transpose() * j + j * x).is_zero());
  CHECK(rank(Matrix::from_rows(Q, [&] {
          std::vector<Vector> rows;
          for (const Matrix& x : sp) {
            Vector v;
            for (std::size_t a = 0; a < 4; ++a)
              for (std::size_t b = 0; b < 4; ++b) v.push_back(x(a, b));
            rows.push_back(v);
          }
          return rows;
        }())) == 10);
  for (std::size_t n : {4u, 5u}) {
    const auto so = lie_generators(Q, LieFamily::so_split, n);
    CHECK(so.size() == n * (n - 1) / 2);
    const Matrix q = lie_form(Q, LieFamily::so_split, n);
    for (const Matrix& x : so) CHECK((x.transpose() * q + q * x).is_zero());
  }
  CHECK(parse_lie_family("sp") == LieFamily::sp);
  CHECK_THROWS_AS(parse_lie_family("e8"), Error);
  CHECK_THROWS_AS(lie_form(Q, LieFamily::gl, 2), Error);
}

TEST_CASE("Lie examples: denseness and decompositions") {
  const Representation so5 = make_representation(Q, RepMode::Lie, lie_generators(Q, LieFamily::so_split, 5));
  CHECK(burnside_dim(exterior_rep(so5, 2)) == 100);
  CHECK(is_m_dense(so5, 2, true) == Tri::Yes);

  const Representation sp4 = make_representation(Q, RepMode::Lie, lie_generators(Q, LieFamily::sp, 2));
  CHECK(is_m_dense(sp4, 2, false) == Tri::No);
  CHECK(is_m_dense(sp4, 1, true) == Tri::Yes);
  const Representation e2 = exterior_rep(sp4, 2);
  CHECK(commutant(e2).dim == 2);
  const auto iso = isotypic_decomposition(e2);
  REQUIRE(iso);
  REQUIRE(iso->size() == 2);
  CHECK((*iso)[0].dim() == 1);
  CHECK((*iso)[1].dim() == 5);
  // The trivial summand is spanned by the form e1^e3 + e2^e4.
  const WedgeVector omega = wedge_of_vectors(Q, 4, {unit_vector(Q, 4, 0), unit_vector(Q, 4, 2)}) +
                            wedge_of_vectors(Q, 4, {unit_vector(Q, 4, 1), unit_vector(Q, 4, 3)});
  CHECK((*iso)[0].contains(omega.coords()));
}
