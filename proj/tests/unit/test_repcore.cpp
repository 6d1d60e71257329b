#include "doctest.h"

#include <algorithm>

#include "thickrep/repcore.hpp"

using namespace thickrep;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

Representation rep(const FieldSpec& f, std::vector<std::vector<std::vector<long long>>> gens,
                   RepMode mode = RepMode::Group) {
  std::vector<Matrix> ms;
  for (const auto& g : gens) ms.push_back(Matrix::from_ints(f, g));
  return make_representation(f, mode, ms);
}

Representation random_rep(const FieldSpec& f, std::size_t n, std::size_t gens, Rng& rng) {
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < gens; ++i) ms.push_back(random_invertible(f, n, rng));
  return make_representation(f, RepMode::Group, ms, "random");
}

Vector ints(const FieldSpec& f, std::vector<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(Scalar(f, x));
  return v;
}

}  // namespace

TEST_CASE("exterior_rep") {
  const Representation r = rep(Q, {{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}});
  CHECK(exterior_rep(r, 1).generators[0] == r.generators[0]);
  CHECK(exterior_rep(r, 2).generators[0] == Matrix::from_ints(Q, {{2, 0, 0}, {0, 3, 0}, {0, 0, 6}}));
  const Representation lie = rep(Q, {{{1, 2}, {3, 5}}}, RepMode::Lie);
  CHECK(exterior_rep(lie, 2).generators[0] == Matrix::from_ints(Q, {{6}}));
  CHECK_THROWS_AS(exterior_rep(r, 4), Error);
}

TEST_CASE("spin and invariance") {
  const Representation swap2 = rep(F2, {{{0, 1}, {1, 0}}});
  CHECK(spin(swap2, {ints(F2, {1, 0})}).is_full());
  const Subspace fixed = spin(swap2, {ints(F2, {1, 1})});
  CHECK(fixed.dim() == 1);
  CHECK(fixed.contains(ints(F2, {1, 1})));
  CHECK(spin(swap2, {ints(F2, {0, 0})}).is_zero());
  CHECK_THROWS_AS(spin(swap2, {ints(F2, {1})}), Error);

  const Representation swapq = rep(Q, {{{0, 1}, {1, 0}}});
  CHECK(is_invariant(swapq, Subspace(Q, 2)));
  CHECK(is_invariant(swapq, Subspace::full(Q, 2)));
  CHECK_FALSE(is_invariant(swapq, Subspace::span(Q, 2, {ints(Q, {1, 0})})));
  CHECK(is_invariant(swapq, Subspace::span(Q, 2, {ints(Q, {1, 1})})));
  CHECK_THROWS_AS(is_invariant(swapq, Subspace(Q, 3)), Error);
}

TEST_CASE("burnside and commutant") {
  CHECK(burnside_dim(rep(Q, {{{0, -1}, {1, 0}}})) == 2);
  CHECK(burnside_dim(rep(Q, {{{0, -1}, {1, 0}}, {{1, 1}, {1, 0}}})) == 4);
  CHECK(burnside_dim(make_representation(Q, RepMode::Group, {Matrix::identity(Q, 3)})) == 1);

  CHECK(commutant(make_representation(Q, RepMode::Group, {Matrix::identity(Q, 2)})).dim == 4);
  CHECK(commutant(rep(Q, {{{0, -1}, {1, 0}}, {{1, 1}, {1, 0}}})).dim == 1);
  const Commutant rot = commutant(rep(Q, {{{0, -1}, {1, 0}}}));
  CHECK(rot.dim == 2);
  for (const Matrix& c : rot.basis) CHECK(c * Matrix::from_ints(Q, {{0, -1}, {1, 0}}) == Matrix::from_ints(Q, {{0, -1}, {1, 0}}) * c);
}

TEST_CASE("isotypic decomposition") {
  const auto split = isotypic_decomposition(rep(Q, {{{1, 0}, {0, 2}}}));
  REQUIRE(split);
  REQUIRE(split->size() == 2);
  CHECK((*split)[0].dim() == 1);
  CHECK((*split)[1].dim() == 1);
  const auto irr = isotypic_decomposition(rep(Q, {{{0, -1}, {1, 0}}, {{1, 1}, {1, 0}}}));
  REQUIRE(irr);
  CHECK(irr->size() == 1);
  // Eigenvalues +-i are not rational.
  CHECK_FALSE(isotypic_decomposition(rep(Q, {{{0, -1}, {1, 0}}})));
}

TEST_CASE("all_submodules examples") {
  const auto swap = all_submodules(rep(F2, {{{0, 1}, {1, 0}}}), 1000);
  REQUIRE(swap.size() == 3);
  CHECK(swap[0].is_zero());
  CHECK(swap[1] == Subspace::span(F2, 2, {ints(F2, {1, 1})}));
  CHECK(swap[2].is_full());
  CHECK(all_submodules(make_representation(F2, RepMode::Group, {Matrix::identity(F2, 2)}), 1000).size() == 5);
  CHECK(all_submodules(rep(F2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}}), 1000).size() == 2);
  CHECK_THROWS_AS(all_submodules(rep(Q, {{{1, 0}, {0, 1}}}), 1000), Error);
  CHECK_THROWS_AS(all_submodules(make_representation(F3, RepMode::Group, {Matrix::identity(F3, 8)}), 1000), Error);
}

TEST_CASE("all_submodules lattice is invariant and closed") {
  Rng rng(11);
  for (const FieldSpec& f : {F2, F3, FieldSpec::extension(2, 2)}) {
    for (int trial = 0; trial < 6; ++trial) {
      // Sparse generators give larger lattices.
      std::vector<Matrix> gens{Matrix::identity(f, 4)};
      gens[0](0, 1) = random_scalar(f, rng);
      gens[0](2, 3) = random_scalar(f, rng);
      if (trial % 2) gens.push_back(Matrix::diagonal(f, {Scalar::one(f), Scalar::one(f), Scalar::one(f), Scalar::one(f)}));
      const Representation r = make_representation(f, RepMode::Group, gens);
      const auto subs = all_submodules(r, 100000);
      CHECK(std::is_sorted(subs.begin(), subs.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); }));
      auto present = [&](const Subspace& s) { return std::find(subs.begin(), subs.end(), s) != subs.end(); };
      for (const Subspace& a : subs) {
        CHECK(is_invariant(r, a));
        for (const Subspace& b : subs) {
          CHECK(present(subspace_sum(a, b)));
          CHECK(present(subspace_intersect(a, b)));
        }
      }
    }
  }
}

TEST_CASE("gaussian binomials and grassmannians") {
  CHECK(gaussian_binomial(2, 2, 1) == 3);
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 4, 2) == 130);
  CHECK(grassmannian(F2, 4, 2).size() == 35);
  CHECK(grassmannian(F3, 3, 1).size() == 13);
  CHECK(grassmannian(FieldSpec::extension(2, 2), 3, 2).size() == 21);
  const auto gr = grassmannian(F2, 3, 2);
  CHECK(std::is_sorted(gr.begin(), gr.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); }));
  CHECK(std::adjacent_find(gr.begin(), gr.end()) == gr.end());
}

TEST_CASE("denseness") {
  const Representation gl2 = rep(F2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}});
  CHECK(is_m_dense(gl2, 0, false) == Tri::Yes);
  CHECK(is_m_dense(gl2, 2, true) == Tri::Yes);
  CHECK(is_m_dense(gl2, 1, false) == Tri::Yes);
  CHECK(is_m_dense(gl2, 1, true) == Tri::Yes);
  CHECK(is_m_dense(rep(F2, {{{1, 1}, {0, 1}}}), 1, false) == Tri::No);
  CHECK(is_m_dense(rep(Q, {{{1, 0}, {0, 2}}}), 1, false) == Tri::No);
  CHECK_THROWS_AS(is_m_dense(gl2, 3, false), Error);
}

TEST_CASE("definition decider examples") {
  const Representation gl2 = rep(F2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}});
  CHECK(is_m_thick_definition(gl2, 1).verdict == Verdict::Thick);
  CHECK(is_m_thick_definition(gl2, 0).verdict == Verdict::Thick);
  const Representation upper = rep(F3, {{{1, 1}, {0, 1}}, {{2, 0}, {0, 1}}});
  const ThicknessReport rpt = is_m_thick_definition(upper, 1);
  CHECK(rpt.verdict == Verdict::NotThick);
  REQUIRE(rpt.subspace_pair);
  CHECK(recheck_certificate(upper, rpt).ok);
  CHECK_THROWS_AS(is_m_thick_definition(rep(Q, {{{1, 0}, {0, 1}}}), 1), Error);

  Caps tiny;
  tiny.points = 2;
  const ThicknessReport capped = is_m_thick_definition(gl2, 1, tiny);
  CHECK(capped.verdict == Verdict::Unknown);
  CHECK(capped.log.back().rfind("CapExceeded", 0) == 0);
}

TEST_CASE("criterion decider examples") {
  const Representation gl2 = rep(F3, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}});
  CHECK(is_m_thick_criterion(gl2, 1).verdict == Verdict::Thick);
  const Representation upper = rep(F3, {{{1, 1}, {0, 1}}, {{2, 0}, {0, 1}}});
  const ThicknessReport rpt = is_m_thick_criterion(upper, 1);
  CHECK(rpt.verdict == Verdict::NotThick);
  REQUIRE(rpt.invariant_pair);
  CHECK(rpt.invariant_pair->w1.dim() == 1);
  CHECK(recheck_certificate(upper, rpt).ok);

  // Tampered certificate fails the recheck.
  ThicknessReport bad = rpt;
  bad.invariant_pair->w1 = Subspace::span(F3, 2, {ints(F3, {0, 1})});
  CHECK_FALSE(recheck_certificate(upper, bad).ok);

  // Over Q: a diagonal rep splits into lines, each realizable.
  const Representation diag = rep(Q, {{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}});
  CHECK(is_m_thick_criterion(diag, 1).verdict == Verdict::NotThick);
}

TEST_CASE("deciders agree, respect duality, and certificates recheck") {
  Rng rng(2024);
  int compared = 0;
  for (const FieldSpec& f : {F2, F3}) {
    for (std::size_t n : {2u, 3u, 4u}) {
      if (f == F3 && n == 4) continue;
      for (int trial = 0; trial < 8; ++trial) {
        const Representation r = random_rep(f, n, trial % 2 + 1, rng);
        std::vector<Verdict> def(n + 1), crit(n + 1);
        for (std::size_t m = 0; m <= n; ++m) {
          const ThicknessReport d = is_m_thick_definition(r, m);
          const ThicknessReport c = is_m_thick_criterion(r, m);
          REQUIRE(d.verdict != Verdict::Unknown);
          REQUIRE(c.verdict != Verdict::Unknown);
          CHECK(d.verdict == c.verdict);
          if (d.verdict == Verdict::NotThick) CHECK(recheck_certificate(r, d).ok);
          if (c.verdict == Verdict::NotThick) CHECK(recheck_certificate(r, c).ok);
          def[m] = d.verdict;
          crit[m] = c.verdict;
          ++compared;
        }
        for (std::size_t m = 0; m <= n; ++m) {
          CHECK(def[m] == def[n - m]);
          CHECK(crit[m] == crit[n - m]);
          if (is_m_dense(r, m, false) == Tri::Yes) CHECK(def[m] == Verdict::Thick);
          if (def[m] == Verdict::Thick && m > 0 && m < n) CHECK(is_m_dense(r, 1, false) == Tri::Yes);
        }
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("pullback along generator subsets") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Representation r = random_rep(F2, 4, 2, rng);
    Representation sub = r;
    sub.generators.pop_back();
    for (std::size_t m = 1; m < 4; ++m) {
      if (is_m_thick_definition(r, m).verdict == Verdict::NotThick)
        CHECK(is_m_thick_definition(sub, m).verdict == Verdict::NotThick);
    }
  }
}

TEST_CASE("thickness over a larger field implies thickness over the smaller") {
  Rng rng(99);
  const FieldSpec F4 = FieldSpec::extension(2, 2);
  int thick_big = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Representation r = random_rep(F2, 3, trial % 2 + 1, rng);
    const Representation big = extend_scalars(r, F4);
    for (std::size_t m = 1; m < 3; ++m) {
      if (is_m_thick_definition(big, m).verdict == Verdict::Thick) {
        ++thick_big;
        CHECK(is_m_thick_definition(r, m).verdict == Verdict::Thick);
      }
    }
  }
  MESSAGE("thick over F4: " << thick_big);
  CHECK_THROWS_AS(extend_scalars(rep(Q, {{{1}}}), F4), Error);
}

TEST_CASE("r-number bounds") {
  const auto b62 = r_number_bounds(6, 2);
  CHECK(b62.exact == 3u);
  CHECK(r_number_bounds(5, 2).exact == 4u);
  CHECK(r_number_bounds(5, 3).exact == 4u);
  const auto b73 = r_number_bounds(7, 3);
  CHECK(b73.lower == 3);
  CHECK(b73.upper == 7);
  CHECK_FALSE(b73.exact);
  CHECK(r_number_bounds(4, 0).exact == 1u);
  CHECK(r_number_bounds(7, 1).exact == 7u);
  CHECK(r_number_bounds(8, 5).lower == 3);
  CHECK_THROWS_AS(r_number_bounds(3, 4), Error);
}

TEST_CASE("caps parsing and group closure") {
  const Caps c = Caps::from_string("group=7,pairs=9");
  CHECK(c.group == 7);
  CHECK(c.points == Caps{}.points);
  CHECK(c.pairs == 9);
  CHECK_THROWS_AS(Caps::from_string("group"), Error);
  CHECK_THROWS_AS(Caps::from_string("foo=1"), Error);
  CHECK_THROWS_AS(Caps::from_string("points=1x"), Error);

  const Representation gl2 = rep(F2, {{{1, 1}, {0, 1}}, {{0, 1}, {1, 0}}});
  CHECK(group_closure(gl2, 100).size() == 6);
  CHECK_THROWS_AS(group_closure(gl2, 3), Error);
}
