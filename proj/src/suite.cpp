#include "thickrep/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "thickrep/characters.hpp"
#include "thickrep/constructions.hpp"
#include "thickrep/symplectic.hpp"

namespace thickrep {

std::string to_string(ItemStatus s) {
  switch (s) {
    case ItemStatus::Verified: return "Verified";
    case ItemStatus::Refuted: return "Refuted";
    case ItemStatus::Skipped: return "Skipped";
    case ItemStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

const std::vector<SuiteItemInfo>& suite_items() {
  static const std::vector<SuiteItemInfo> items{
      {1, "s5-exterior-squares", "characters"},
      {2, "gl2-identities", "characters"},
      {3, "partition-coefficients", "characters"},
      {4, "plethysm-counts", "plethysm"},
      {5, "gl4f2-e1-wedge", "thickness"},
      {6, "block-rep-f13", "constructions"},
      {7, "r-number-witnesses", "constructions"},
      {8, "criterion-vs-definition", "thickness"},
      {9, "implications-duality", "thickness"},
      {10, "symplectic", "symplectic"},
      {11, "orthogonal-lie", "lie"},
      {12, "building-blocks", "constructions"},
  };
  return items;
}

bool item_selected(const SuiteItemInfo& info, const std::string& filter) {
  if (filter.empty()) return true;
  std::stringstream ss(filter);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == info.name || token == info.group || token == std::to_string(info.id)) return true;
  }
  return false;
}

namespace {

struct Ctx {
  SuiteItemResult& result;
  const SuiteOptions& options;
  bool unknown = false;

  void expect(bool ok, const std::string& what) {
    if (!ok) result.failures.push_back(what);
  }
  void note(const std::string& line) { result.details.push_back(line); }

  void certificate(const Representation& r, const ThicknessReport& rpt) {
    if (options.certificate_dir.empty()) return;
    std::filesystem::create_directories(options.certificate_dir);
    const std::string path =
        (std::filesystem::path(options.certificate_dir) / ("item_" + std::to_string(result.info.id) + ".json"))
            .string();
    std::ofstream out(path);
    out << dump(report_to_json(r, rpt));
    if (!out) throw Error(Errc::ParseError, "cannot write " + path);
    result.certificate_path = path;
  }
};

WedgeVector unit_wedge(const FieldSpec& f, std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (std::size_t i : idx) vs.push_back(unit_vector(f, n, i));
  return wedge_of_vectors(f, n, vs);
}

// ---------------------------------------------------------------------------

void s5_exterior_squares(Ctx& c) {
  using Decomp = std::vector<std::pair<Partition, long long>>;
  const Decomp expected{{{3, 1, 1}, 1}, {{2, 1, 1, 1}, 1}};
  for (const Partition& lambda : {Partition{3, 2}, Partition{2, 2, 1}}) {
    const Decomp d = decompose(exterior_square_char(sym_char(lambda)));
    c.expect(d == expected, "exterior square of " + to_string(lambda) + " decomposes differently");
  }
  c.expect(sym_char({3, 1, 1}).degree() == 6, "degree of (3,1,1) is not 6");
  c.expect(sym_char({2, 1, 1, 1}).degree() == 4, "degree of (2,1,1,1) is not 4");
  c.note("both squares = (3,1,1) + (2,1,1,1), degrees 6 + 4");
}

void gl2_identities(Ctx& c) {
  std::size_t held = 0;
  for (int a = 0; a <= 8; ++a)
    for (int b = -3; b <= 3; ++b) {
      const bool ok = gl2_wedge_identity(a, b);
      c.expect(ok, "identity fails at a=" + std::to_string(a) + " b=" + std::to_string(b));
      held += ok;
    }
  c.note(std::to_string(held) + "/63 identities hold");
}

void partition_coefficients(Ctx& c) {
  c.expect(distinct_parts_coeffs(3) == std::vector<std::uint64_t>{1, 1, 1, 2, 1, 1, 1}, "n=3 coefficients differ");
  for (int n = 3; n <= 12; ++n) {
    const auto a = distinct_parts_coeffs(n);
    const std::size_t top = static_cast<std::size_t>(n * (n + 1) / 2);
    c.expect(a.size() == top + 1, "wrong length at n=" + std::to_string(n));
    for (std::size_t i = 0; i < a.size(); ++i) {
      c.expect(a[i] >= 1, "zero coefficient at n=" + std::to_string(n) + " i=" + std::to_string(i));
      if (i >= 3 && i + 3 <= top)
        c.expect(a[i] >= 2, "coefficient below 2 at n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  c.note("bounds hold for n = 3..12");
}

void plethysm_counts(Ctx& c) {
  std::size_t checked = 0;
  for (int n = 1; n <= 4; ++n) {
    const auto sym = distinct_parts_coeffs(n);
    for (int m = 0; m <= 6; ++m) {
      const std::uint64_t want = m < static_cast<int>(sym.size()) ? sym[m] : 0;
      c.expect(plethysm_component_count(PlethysmKind::sym2, n, m) == want,
               "sym2 count differs at n=" + std::to_string(n) + " m=" + std::to_string(m));
      ++checked;
      if (n < 2) continue;
      const auto alt = distinct_parts_coeffs(n - 1);
      const std::uint64_t want_alt = m < static_cast<int>(alt.size()) ? alt[m] : 0;
      c.expect(plethysm_component_count(PlethysmKind::wedge2, n, m) == want_alt,
               "wedge2 count differs at n=" + std::to_string(n) + " m=" + std::to_string(m));
      ++checked;
    }
  }
  c.note(std::to_string(checked) + " counts compared");
}

Representation gl4_f2() {
  const FieldSpec f = FieldSpec::prime(2);
  Matrix shift(f, 4, 4);
  shift(0, 3) = Scalar::one(f);
  for (std::size_t i = 1; i < 4; ++i) shift(i, i - 1) = Scalar::one(f);
  Matrix elem = Matrix::identity(f, 4);
  elem(0, 1) = Scalar::one(f);
  return make_representation(f, RepMode::Group, {shift, elem}, "GL4(F2) standard");
}

void gl4f2_e1_wedge(Ctx& c) {
  const FieldSpec f = FieldSpec::prime(2);
  const Representation gl4 = gl4_f2();
  const auto group = group_closure(gl4, std::max<std::uint64_t>(c.options.caps.group, 20160));
  c.expect(group.size() == 20160, "group closure has " + std::to_string(group.size()) + " elements");
  const Subspace w = e1_wedge_subspace(f, 4);
  std::size_t disjoint = 0;
  for (const Matrix& g : group)
    if (subspace_intersect(transform(compound(g, 2), w), w).is_zero()) ++disjoint;
  c.expect(disjoint == 0, std::to_string(disjoint) + " elements move W off itself");
  c.note("every one of " + std::to_string(group.size()) + " translates meets W");

  Representation wedge2 = exterior_rep(gl4, 2);
  wedge2.label = "second exterior power of GL4(F2)";
  ThicknessReport cert;
  cert.m = 3;
  cert.verdict = Verdict::NotThick;
  cert.method = "definition";
  cert.subspace_pair = SubspacePairCertificate{w, w};
  cert.log.push_back("V1 = V2 = e1 ^ k^4; every translate of V1 meets V2");
  const RecheckResult rc = recheck_certificate(wedge2, cert);
  c.expect(rc.ok, "certificate does not re-verify");
  c.certificate(wedge2, cert);

  const ThicknessReport def = is_m_thick_definition(wedge2, 3, c.options.caps);
  if (def.verdict == Verdict::Unknown)
    c.note("definition decider: Unknown within caps");
  else
    c.expect(def.verdict == Verdict::NotThick, "definition decider says 3-thick");
}

void block_rep_f13(Ctx& c) {
  const FieldSpec f = FieldSpec::prime(13);
  const BlockRep br = block_rep(default_block_spec(f, 2, 2), true, c.options.seed);
  c.expect(burnside_dim(br.rep) == 16, "block representation is not absolutely irreducible");
  const Subspace w1 = Subspace::span(f, 6, {unit_wedge(f, 4, {0, 1}).coords(), unit_wedge(f, 4, {2, 3}).coords()});
  const ThicknessReport rpt = is_m_thick_criterion(br.rep, 2, c.options.caps, c.options.seed);
  if (rpt.verdict == Verdict::Unknown) {
    c.unknown = true;
    c.note("criterion: Unknown within caps");
    return;
  }
  c.expect(rpt.verdict == Verdict::NotThick, "criterion does not refute 2-thickness");
  c.expect(rpt.invariant_pair && rpt.invariant_pair->w1 == w1, "certificate W1 is not span{e1^e2, e3^e4}");
  c.expect(recheck_certificate(br.rep, rpt).ok, "certificate does not re-verify");
  Representation labelled = br.rep;
  labelled.label = "block representation l=2 m=2 over F13";
  c.certificate(labelled, rpt);
  c.note("Burnside dim 16; W1 = span{e1^e2, e3^e4}");

  const ThicknessReport def = is_m_thick_definition(br.rep, 2, c.options.caps);
  if (def.verdict == Verdict::Unknown)
    c.note("definition decider: Unknown within caps");
  else {
    c.expect(def.verdict == Verdict::NotThick, "definition decider disagrees");
    c.note("definition decider agrees");
  }
}

void r_number_witnesses(Ctx& c) {
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t n : {4u, 5u, 6u}) {
    const CompanionPair cp = companion_pair(q, n, Scalar(q, 2), Scalar(q, 3));
    for (std::size_t m = 1; m < n; ++m) {
      const Subspace& w = cp.windows[m - 1];
      const std::string at = " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
      c.expect(w.dim() == n, "window has wrong dimension" + at);
      c.expect(is_invariant(exterior_rep(cp.rep, m), w), "window is not invariant" + at);
      c.expect(realizable_search(w, n, m).status == Realizability::Realizable, "window is not realizable" + at);
    }
  }
  c.note("companion windows for n = 4, 5, 6 are invariant, realizable, of dim n");

  const std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t>> exact{
      {{6, 2}, 3}, {{6, 3}, 2}, {{5, 2}, 4}};
  for (const auto& [nm, value] : exact) {
    const auto b = r_number_bounds(nm.first, nm.second);
    c.expect(b.exact && *b.exact == value, "r-number bound differs at (" + std::to_string(nm.first) + "," +
                                               std::to_string(nm.second) + ")");
  }
  for (std::size_t n : {4u, 5u, 6u})
    for (std::size_t m = 2; m < n; ++m) {
      if (n % m) continue;
      const std::size_t ell = n / m;
      const FieldSpec f = FieldSpec::prime(static_cast<std::uint32_t>(suggest_prime(ell, m)));
      const BlockRep br = block_rep(default_block_spec(f, ell, m), true, c.options.seed);
      const std::string at = " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
      c.expect(br.w.dim() == ell, "block witness has wrong dimension" + at);
      c.expect(r_number_bounds(n, m).exact == std::optional<std::uint64_t>(ell), "block witness misses exact value" + at);
      c.expect(is_invariant(exterior_rep(br.rep, m), br.w), "block witness is not invariant" + at);
      c.expect(realizable_search(br.w, n, m).status == Realizability::Realizable,
               "block witness is not realizable" + at);
      c.expect(br.irreducible == Tri::Yes, "block representation is not irreducible" + at);
      c.note("block witness of dim " + std::to_string(ell) + " over " + f.to_string() + at);
    }
}

std::vector<Representation> sample_reps(const FieldSpec& f, std::size_t count, std::uint64_t seed) {
  Rng rng(seed * 1000003 + f.order());
  std::vector<Representation> out;
  for (std::size_t i = 0; i < count; ++i) {
    Matrix a = random_invertible(f, 4, rng);
    Matrix b = random_invertible(f, 4, rng);
    out.push_back(make_representation(f, RepMode::Group, {a, b}, "sample " + std::to_string(i)));
  }
  return out;
}

constexpr std::size_t kSamplesPerField = 100;

void criterion_vs_definition(Ctx& c) {
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3)}) {
    std::size_t agree = 0, not_thick = 0;
    const auto reps = sample_reps(f, kSamplesPerField, c.options.seed);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t m = 0; m <= 4; ++m) {
        const Verdict crit = is_m_thick_criterion(reps[i], m, c.options.caps, c.options.seed).verdict;
        const Verdict def = is_m_thick_definition(reps[i], m, c.options.caps).verdict;
        if (crit == Verdict::Unknown || def == Verdict::Unknown) {
          c.unknown = true;
          continue;
        }
        c.expect(crit == def, "verdicts differ on " + f.to_string() + " sample " + std::to_string(i) +
                                  " m=" + std::to_string(m));
        agree += crit == def;
        not_thick += def == Verdict::NotThick;
      }
    c.note(f.to_string() + ": " + std::to_string(agree) + " agreeing verdicts over " + std::to_string(reps.size()) +
           " reps (" + std::to_string(not_thick) + " NotThick)");
  }
}

void implications_duality(Ctx& c) {
  std::size_t violations = 0;
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3)}) {
    const auto reps = sample_reps(f, kSamplesPerField, c.options.seed);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const std::string at = f.to_string() + " sample " + std::to_string(i);
      std::vector<Verdict> def(5), crit(5);
      std::vector<Tri> dense(5);
      for (std::size_t m = 0; m <= 4; ++m) {
        def[m] = is_m_thick_definition(reps[i], m, c.options.caps).verdict;
        crit[m] = is_m_thick_criterion(reps[i], m, c.options.caps, c.options.seed).verdict;
        dense[m] = is_m_dense(reps[i], m, false, c.options.caps);
      }
      if (std::count(def.begin(), def.end(), Verdict::Unknown) ||
          std::count(dense.begin(), dense.end(), Tri::Unknown)) {
        c.unknown = true;
        continue;
      }
      const bool irreducible = dense[1] == Tri::Yes;
      auto fail = [&](bool bad, const std::string& what) {
        if (!bad) return;
        ++violations;
        c.expect(false, what + " on " + at);
      };
      for (std::size_t m = 0; m <= 4; ++m) {
        fail(dense[m] == Tri::Yes && def[m] != Verdict::Thick, "dense but not thick at m=" + std::to_string(m));
        fail(m > 0 && m < 4 && def[m] == Verdict::Thick && !irreducible,
             "thick but reducible at m=" + std::to_string(m));
        fail(def[m] != def[4 - m], "definition verdicts not symmetric at m=" + std::to_string(m));
        fail(crit[m] != Verdict::Unknown && crit[4 - m] != Verdict::Unknown && crit[m] != crit[4 - m],
             "criterion verdicts not symmetric at m=" + std::to_string(m));
      }
    }
  }
  c.note(std::to_string(violations) + " violations over " + std::to_string(2 * kSamplesPerField) + " reps");
}

void symplectic_suite(Ctx& c) {
  const FieldSpec q = FieldSpec::rationals();
  for (std::size_t n : {2u, 3u}) {
    const SymplecticSpace sp = SymplecticSpace::standard(q, n);
    const auto gens = lie_generators(q, LieFamily::sp, n);
    for (std::size_t m = 2; m <= 2 * n; ++m) {
      const std::string at = " (2n=" + std::to_string(2 * n) + ", m=" + std::to_string(m) + ")";
      const Matrix fm = contraction_matrix(sp, m);
      for (const Matrix& x : gens) {
        const Matrix lower = m == 2 ? Matrix(q, 1, 1) : lie_derivation(x, m - 2);
        c.expect(fm * lie_derivation(x, m) == lower * fm, "contraction not equivariant" + at);
      }
      if (m <= n)
        c.expect(ker_fm(sp, m).dim() == binomial(2 * n, m) - binomial(2 * n, m - 2), "kernel dimension wrong" + at);
    }
  }
  c.note("kernel dimensions and equivariance exact for 2n = 4, 6");

  const FieldSpec f5 = FieldSpec::prime(5);
  Rng rng(c.options.seed + 5);
  for (std::size_t n : {2u, 3u}) {
    const SymplecticSpace sp = SymplecticSpace::standard(f5, n);
    std::size_t validated = 0;
    while (validated < 200) {
      const std::size_t d = n + static_cast<std::size_t>(draw_below(rng, n + 1));
      const Subspace w = Subspace::row_space(random_matrix(f5, d, 2 * n, rng));
      if (w.dim() < n) continue;
      const std::size_t codim = 2 * n - w.dim();
      const Subspace lag = lagrangian_complement(sp, w);
      const Subspace iso = isotropic_transversal(sp, w, codim);
      const bool ok = lag.dim() == n && sp.is_isotropic(lag) && subspace_sum(lag, w).is_full() &&
                      iso.dim() == codim && sp.is_isotropic(iso) && subspace_intersect(iso, w).is_zero();
      c.expect(ok, "constructions fail on a subspace of dim " + std::to_string(w.dim()));
      ++validated;
    }
    c.note("200 subspaces of F5^" + std::to_string(2 * n) + " validated");
  }

  for (const FieldSpec& f : {FieldSpec::prime(3), f5}) {
    const KerPerpReport kp = ker_perp_realizability_check(SymplecticSpace::standard(f, 2), 2, 200, c.options.seed);
    c.expect(kp.trials_passed == 200, "pairings nonzero in " + std::to_string(kp.trials_passed) + "/200 over " + f.to_string());
    c.expect(kp.perp_realizability == Realizability::NotRealizable && kp.perp_scan_exhaustive,
             "perp scan not exhaustive NotRealizable over " + f.to_string());
    c.note("(Ker f2)^perp over " + f.to_string() + ": 200/200 pairings, " + std::to_string(kp.points_examined) +
           " points scanned");
  }

  const Representation sp4 = make_representation(q, RepMode::Lie, lie_generators(q, LieFamily::sp, 2), "sp4");
  const auto iso = isotypic_decomposition(exterior_rep(sp4, 2), c.options.seed);
  std::vector<std::size_t> dims;
  if (iso)
    for (const Subspace& s : *iso) dims.push_back(s.dim());
  std::sort(dims.begin(), dims.end());
  c.expect(dims == std::vector<std::size_t>{1, 5}, "second power of sp4 does not split as 1 + 5");
  c.expect(is_m_thick_criterion(sp4, 2, c.options.caps, c.options.seed).verdict == Verdict::Thick,
           "sp4 is not 2-thick");
  c.expect(is_m_dense(sp4, 2, false, c.options.caps) == Tri::No, "sp4 is 2-dense");
  c.note("sp4: split 1 + 5, 2-thick, not 2-dense");
}

void orthogonal_lie(Ctx& c) {
  const FieldSpec q = FieldSpec::rationals();
  const Representation so5 =
      make_representation(q, RepMode::Lie, lie_generators(q, LieFamily::so_split, 5), "so5 split");
  c.expect(burnside_dim(exterior_rep(so5, 2)) == 100, "so5 second power is not absolutely irreducible");

  const Representation so4 =
      make_representation(q, RepMode::Lie, lie_generators(q, LieFamily::so_split, 4), "so4 split");
  const auto iso = isotypic_decomposition(exterior_rep(so4, 2), c.options.seed);
  c.expect(iso && iso->size() == 2, "so4 second power does not split in two");
  if (iso)
    for (const Subspace& s : *iso) {
      c.expect(s.dim() == 3, "so4 summand has dim " + std::to_string(s.dim()));
      c.expect(realizable_search(s, 4, 2).status == Realizability::Realizable, "so4 summand is not realizable");
    }
  const ThicknessReport rpt = is_m_thick_criterion(so4, 2, c.options.caps, c.options.seed);
  c.expect(rpt.verdict == Verdict::NotThick && rpt.invariant_pair.has_value(), "so4 not refuted at m=2");
  c.expect(recheck_certificate(so4, rpt).ok, "so4 certificate does not re-verify");
  if (rpt.invariant_pair) c.certificate(so4, rpt);
  c.note("so5: Burnside 100; so4: 3 + 3, both realizable");
}

void building_blocks(Ctx& c) {
  // Single diagonalizable generator with distinct eigenvalues.
  for (const FieldSpec& f : {FieldSpec::prime(5), FieldSpec::prime(7)})
    for (std::size_t n = 1; n <= 4; ++n) {
      Rng rng(c.options.seed * 31 + n + f.order());
      for (std::uint64_t trial = 0; trial < 3; ++trial) {
        Vector v = random_vector(f, n, rng);
        if (is_zero_vector(v)) v[0] = Scalar::one(f);
        const Diagonalizable d = generic_diagonalizable(v, {}, c.options.seed + trial);
        const auto subs = all_submodules(make_representation(f, RepMode::Group, {d.f}), c.options.caps.points);
        const std::string at = " (" + f.to_string() + ", n=" + std::to_string(n) + ")";
        c.expect(subs.size() == (std::size_t{1} << n), "lattice size " + std::to_string(subs.size()) + at);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<Vector> picked;
          for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) picked.push_back(d.basis[i]);
          c.expect(std::find(subs.begin(), subs.end(), Subspace::span(f, n, picked)) != subs.end(),
                   "coordinate subspace missing" + at);
        }
      }
    }
  c.note("single-generator lattices are the 2^n coordinate subspaces");

  // Generic last block: nonzero eigen-coefficients, eigenvalues off the alphas.
  for (const auto& [ell, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    const FieldSpec f = FieldSpec::prime(static_cast<std::uint32_t>(suggest_prime(ell, m)));
    const BlockRepSpec spec = default_block_spec(f, ell, m);
    const BlockRep br = block_rep(spec, true, c.options.seed);
    const std::string at = " (l=" + std::to_string(ell) + ", m=" + std::to_string(m) + ")";
    c.expect(br.coefficients_nonzero, "zero eigen-coefficient" + at);
    c.expect(br.betas.size() == m, "wrong number of eigenvalues" + at);
    for (std::size_t i = 0; i < br.betas.size(); ++i) {
      c.expect(rank(br.b_last - Matrix::identity(f, m).scaled(br.betas[i])) == m - 1, "beta is not a simple eigenvalue" + at);
      c.expect(std::find(spec.alphas.begin(), spec.alphas.end(), br.betas[i]) == spec.alphas.end(),
               "beta collides with an alpha" + at);
      for (std::size_t j = 0; j < i; ++j) c.expect(br.betas[i] != br.betas[j], "repeated beta" + at);
    }
    c.expect(br.irreducible == Tri::Yes, "block representation is reducible" + at);
  }
  c.note("generic last blocks verified for (l,m) = (2,2), (2,3), (3,2)");

  // Eigenpairs of block-cyclic matrices.
  const FieldSpec f13 = FieldSpec::prime(13);
  for (std::size_t ell = 2; ell <= 3; ++ell)
    for (std::size_t m = 1; m <= 3; ++m) {
      Rng rng(c.options.seed * 977 + ell * 10 + m);
      const Vector alphas = ell_th_powers(f13, ell, m);
      std::vector<Matrix> blocks;
      Matrix prod = Matrix::identity(f13, m);
      for (std::size_t t = 0; t + 1 < ell; ++t) {
        blocks.push_back(random_invertible(f13, m, rng));
        prod = blocks.back() * prod;
      }
      const Matrix p = random_invertible(f13, m, rng);
      const Matrix target = p * Matrix::diagonal(f13, alphas) * inverse(p);
      blocks.push_back(target * inverse(prod));
      const Matrix a = block_cyclic(blocks);
      const auto pairs = block_eigenvectors(blocks);
      const std::string at = " (l=" + std::to_string(ell) + ", m=" + std::to_string(m) + ")";
      c.expect(pairs.size() == ell * m, "wrong number of eigenpairs" + at);
      std::vector<Vector> vs;
      for (const auto& [xi, w] : pairs) {
        Vector scaled = w;
        for (Scalar& s : scaled) s *= xi;
        c.expect(a.apply(w) == scaled, "eigenpair fails" + at);
        c.expect(std::find(alphas.begin(), alphas.end(), xi.pow(ell)) != alphas.end(), "xi^l is not an alpha" + at);
        vs.push_back(w);
      }
      c.expect(rank(Matrix::from_rows(f13, vs, ell * m)) == ell * m, "eigenvectors dependent" + at);
    }
  c.note("block-cyclic eigenpairs verified for l in {2,3}, m in {1,2,3}");
}

const std::vector<std::function<void(Ctx&)>>& item_bodies() {
  static const std::vector<std::function<void(Ctx&)>> bodies{
      s5_exterior_squares, gl2_identities,     partition_coefficients, plethysm_counts,
      gl4f2_e1_wedge,      block_rep_f13,      r_number_witnesses,     criterion_vs_definition,
      implications_duality, symplectic_suite, orthogonal_lie,         building_blocks,
  };
  return bodies;
}

}  // namespace

SuiteItemResult run_suite_item(int id, const SuiteOptions& options) {
  const auto& items = suite_items();
  if (id < 1 || id > static_cast<int>(items.size())) throw Error(Errc::PreconditionFailed, "no such suite item");
  SuiteItemResult result;
  result.info = items[id - 1];
  Ctx ctx{result, options};
  const auto start = std::chrono::steady_clock::now();
  try {
    item_bodies()[id - 1](ctx);
    result.status = !result.failures.empty() ? ItemStatus::Refuted
                    : ctx.unknown            ? ItemStatus::Unknown
                                             : ItemStatus::Verified;
  } catch (const Error& e) {
    if (e.code() == Errc::CapExceeded) {
      result.status = ItemStatus::Skipped;
      result.details.push_back(std::string("skipped: ") + e.what());
    } else {
      result.status = ItemStatus::Refuted;
      result.failures.push_back(e.what());
    }
  }
  result.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SuiteReport run_suite(const SuiteOptions& options) {
  std::vector<int> ids;
  for (const SuiteItemInfo& info : suite_items())
    if (item_selected(info, options.filter)) ids.push_back(info.id);

  std::vector<SuiteItemResult> results(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) results[i] = run_suite_item(ids[i], options);
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(ids.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  SuiteReport report;
  report.items = std::move(results);
  for (const SuiteItemResult& r : report.items)
    if (r.status != ItemStatus::Skipped && r.status != ItemStatus::Verified) {
      report.overall = r.status == ItemStatus::Refuted || report.overall == ItemStatus::Refuted ? ItemStatus::Refuted
                                                                                                : ItemStatus::Unknown;
    }
  return report;
}

Json suite_to_json(const SuiteReport& report) {
  Json items = Json::array();
  for (const SuiteItemResult& r : report.items) {
    Json cert = r.certificate_path.empty() ? Json(nullptr) : Json(r.certificate_path);
    items.push_back(Json{{"id", r.info.id},
                         {"name", r.info.name},
                         {"group", r.info.group},
                         {"status", to_string(r.status)},
                         {"runtime_ms", static_cast<std::int64_t>(r.runtime_ms + 0.5)},
                         {"certificate", cert},
                         {"details", r.details},
                         {"failures", r.failures}});
  }
  return Json{{"items", items}, {"overall", to_string(report.overall)}};
}

}  // namespace thickrep
