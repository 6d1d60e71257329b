#include "doctest.h"

#include "thickrep/constructions.hpp"
#include "thickrep/symplectic.hpp"

using namespace thickrep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

WedgeVector wedge_units(const FieldSpec& f, std::size_t n, std::vector<std::size_t> idx) {
  std::vector<Vector> vs;
  for (std::size_t i : idx) vs.push_back(unit_vector(f, n, i));
  return wedge_of_vectors(f, n, vs);
}

Subspace units(const FieldSpec& f, std::size_t n, std::vector<std::size_t> idx) {
  std::vector<Vector> vs;
  for (std::size_t i : idx) vs.push_back(unit_vector(f, n, i));
  return Subspace::span(f, n, vs);
}

}  // namespace

TEST_CASE("contraction examples") {
  const SymplecticSpace sp = SymplecticSpace::standard(Q, 2);
  const Matrix f2 = contraction_matrix(sp, 2);
  CHECK(f2.rows() == 1);
  CHECK(f2.cols() == 6);
  CHECK(f2.apply(wedge_units(Q, 4, {0, 2}).coords())[0] == Scalar::one(Q));
  CHECK(f2.apply(wedge_units(Q, 4, {0, 1}).coords())[0].is_zero());
  CHECK(rank(f2) == 1);
  const Subspace k2 = ker_fm(sp, 2);
  CHECK(k2.dim() == 5);
  CHECK(k2.contains(wedge_units(Q, 4, {0, 1}).coords()));
  const WedgeVector omega = wedge_units(Q, 4, {0, 2}) + wedge_units(Q, 4, {1, 3});
  CHECK(f2.apply(omega.coords())[0] == Scalar(Q, 2));
  CHECK_FALSE(k2.contains(omega.coords()));
  CHECK_THROWS_AS(contraction_matrix(sp, 1), Error);
  CHECK_THROWS_AS(ker_fm(sp, 3), Error);
}

TEST_CASE("contraction is equivariant and kernels have the expected size") {
  for (std::size_t n : {2u, 3u}) {
    const SymplecticSpace sp = SymplecticSpace::standard(Q, n);
    const auto gens = lie_generators(Q, LieFamily::sp, n);
    for (std::size_t m = 2; m <= 2 * n; ++m) {
      const Matrix fm = contraction_matrix(sp, m);
      for (const Matrix& x : gens) {
        const Matrix lower = m == 2 ? Matrix(Q, 1, 1) : lie_derivation(x, m - 2);
        CHECK(fm * lie_derivation(x, m) == lower * fm);
      }
      if (m <= n) {
        const Subspace k = ker_fm(sp, m);
        CHECK(k.dim() == binomial(2 * n, m) - binomial(2 * n, m - 2));
        const Representation r = make_representation(Q, RepMode::Lie, gens);
        CHECK(is_invariant(exterior_rep(r, m), k));
        // Isotropic e_1..e_m wedges into the kernel.
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i) idx.push_back(i);
        CHECK(k.contains(wedge_units(Q, 2 * n, idx).coords()));
      }
    }
  }
}

TEST_CASE("normal basis examples") {
  const SymplecticSpace sp = SymplecticSpace::standard(Q, 2);
  const NormalBasis zero = symplectic_normal_basis(sp, Subspace(Q, 4));
  CHECK(zero.k == 0);
  CHECK(zero.l == 2);
  const NormalBasis full = symplectic_normal_basis(sp, Subspace::full(Q, 4));
  CHECK(full.k == 2);
  CHECK(full.l == 0);
  const NormalBasis e13 = symplectic_normal_basis(sp, units(Q, 4, {0, 2}));
  CHECK(e13.k == 1);
  CHECK(e13.l == 1);
  const NormalBasis lag = symplectic_normal_basis(sp, units(Q, 4, {0, 1}));
  CHECK(lag.k == 0);
  CHECK(lag.l == 0);
}

TEST_CASE("Lagrangian complements and isotropic transversals") {
  const SymplecticSpace sp = SymplecticSpace::standard(Q, 2);
  const Subspace l0 = units(Q, 4, {0, 1});
  const Subspace l = lagrangian_complement(sp, l0);
  CHECK(l.dim() == 2);
  CHECK(sp.is_isotropic(l));
  CHECK(subspace_sum(l, l0).is_full());
  CHECK(lagrangian_complement(sp, Subspace::full(Q, 4)).dim() == 2);
  CHECK_THROWS_AS(lagrangian_complement(sp, units(Q, 4, {0})), Error);

  const Subspace u = isotropic_transversal(sp, units(Q, 4, {0, 1, 2}), 1);
  CHECK(u.dim() == 1);
  CHECK(subspace_intersect(u, units(Q, 4, {0, 1, 2})).is_zero());
  const Subspace ul = isotropic_transversal(sp, l0, 2);
  CHECK(ul.dim() == 2);
  CHECK(sp.is_isotropic(ul));
  CHECK(isotropic_transversal(sp, Subspace::full(Q, 4), 0).is_zero());
  CHECK_THROWS_AS(isotropic_transversal(sp, l0, 1), Error);

  // Random subspaces of every admissible dimension; validation runs inside.
  for (const FieldSpec& f : {Q, F3, F5}) {
    Rng rng(17);
    for (std::size_t n : {2u, 3u}) {
      const SymplecticSpace s = SymplecticSpace::standard(f, n);
      for (std::size_t trial = 0; trial < 30; ++trial) {
        const std::size_t dim = trial % (2 * n + 1);
        const Subspace w = Subspace::row_space(random_matrix(f, dim, 2 * n, rng, 2));
        const NormalBasis nb = symplectic_normal_basis(s, w);
        CHECK(w.dim() == n - nb.l + nb.k);
        if (2 * n - w.dim() <= n) {
          const Subspace lag = lagrangian_complement(s, w);
          CHECK(subspace_sum(lag, w).is_full());
          const Subspace iso = isotropic_transversal(s, w, 2 * n - w.dim());
          CHECK(s.is_isotropic(iso));
        }
      }
    }
  }
}

TEST_CASE("the perp of Ker f_m has no decomposable vectors") {
  const SymplecticSpace sp = SymplecticSpace::standard(Q, 2);
  const KerPerpReport q = ker_perp_realizability_check(sp, 2, 50, 1);
  const WedgeVector omega = wedge_units(Q, 4, {0, 2}) + wedge_units(Q, 4, {1, 3});
  CHECK(q.ker_perp == Subspace::span(Q, 6, {omega.coords()}));
  CHECK(!is_decomposable(omega).decomposable);
  CHECK(q.pairings_all_nonzero);
  CHECK(q.perp_realizability == Realizability::NotRealizable);

  const KerPerpReport f5 = ker_perp_realizability_check(SymplecticSpace::standard(F5, 2), 2, 200, 2);
  CHECK(f5.trials_passed == 200);
  CHECK(f5.perp_realizability == Realizability::NotRealizable);
  CHECK(f5.perp_scan_exhaustive);

  const KerPerpReport f3 = ker_perp_realizability_check(SymplecticSpace::standard(F3, 3), 3, 40, 3);
  CHECK(f3.ker_perp.dim() == 6);
  CHECK(f3.pairings_all_nonzero);
  CHECK(f3.perp_realizability == Realizability::NotRealizable);
  CHECK_THROWS_AS(ker_perp_realizability_check(sp, 1, 10), Error);
}

TEST_CASE("perp of Ker f_2 is the sum of the other isotypic summands") {
  for (std::size_t n : {2u, 3u}) {
    const SymplecticSpace sp = SymplecticSpace::standard(Q, n);
    const Representation r = make_representation(Q, RepMode::Lie, lie_generators(Q, LieFamily::sp, n));
    const Subspace k = ker_fm(sp, 2);
    const auto iso = isotypic_decomposition(exterior_rep(r, 2 * n - 2));
    REQUIRE(iso);
    CHECK(iso->size() == 2);
    Subspace others(Q, binomial(2 * n, 2));
    for (const Subspace& s : *iso)
      if (s.dim() != k.dim()) others = subspace_sum(others, s);
    CHECK(perp(k, 2 * n, 2) == others);
  }
}

TEST_CASE("standard sp4 representation is 2-thick but not 2-dense") {
  const Representation r = make_representation(Q, RepMode::Lie, lie_generators(Q, LieFamily::sp, 2));
  const ThicknessReport rpt = is_m_thick_criterion(r, 2);
  CHECK(rpt.verdict == Verdict::Thick);
  CHECK(rpt.mode == RepMode::Lie);
  CHECK(is_m_dense(r, 2, false) == Tri::No);
  CHECK(is_m_thick_criterion(r, 1).verdict == Verdict::Thick);
}
