#include "thickrep/symplectic.hpp"

#include "thickrep/constructions.hpp"

namespace thickrep {

SymplecticSpace SymplecticSpace::standard(const FieldSpec& f, std::size_t n) {
  if (n < 1) throw Error(Errc::BadN, "half-dimension must be positive");
  return SymplecticSpace{f, n, lie_form(f, LieFamily::sp, n)};
}

Scalar SymplecticSpace::form(const Vector& u, const Vector& v) const {
  Scalar s = Scalar::zero(field);
  for (std::size_t i = 0; i < n; ++i) s += u[i] * v[n + i] - u[n + i] * v[i];
  return s;
}

Subspace SymplecticSpace::orthogonal(const Subspace& s) const {
  if (s.is_zero()) return Subspace::full(field, dim());
  return kernel(s.basis() * j);
}

bool SymplecticSpace::is_isotropic(const Subspace& s) const {
  const auto b = s.basis_vectors();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c)
      if (!form(b[a], b[c]).is_zero()) return false;
  return true;
}

Matrix contraction_matrix(const SymplecticSpace& sp, std::size_t m) {
  const std::size_t d = sp.dim();
  if (m < 2 || m > d) throw Error(Errc::BadM, "contraction needs 2 <= m <= 2n");
  Matrix out(sp.field, binomial(d, m - 2), binomial(d, m));
  const auto subsets = colex_subsets(d, m);
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const IndexSet& s = subsets[col];
    // Only pairs s_i < s_j with s_j = s_i + n pair nontrivially, with w = 1.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (s[j] != s[i] + sp.n) continue;
        IndexSet rest;
        for (std::size_t t = 0; t < m; ++t)
          if (t != i && t != j) rest.push_back(s[t]);
        // Positions are 1-based in the sign (-1)^{i+j-1}.
        const bool negative = ((i + 1) + (j + 1) - 1) % 2 == 1;
        Scalar& entry = out(colex_rank(rest), col);
        entry += negative ? -Scalar::one(sp.field) : Scalar::one(sp.field);
      }
  }
  return out;
}

Subspace ker_fm(const SymplecticSpace& sp, std::size_t m) {
  if (m < 2 || m > sp.n) throw Error(Errc::BadM, "ker f_m needs 2 <= m <= n");
  return kernel(contraction_matrix(sp, m));
}

namespace {

// Symplectic Gram-Schmidt on a nondegenerate subspace given by spanning vectors.
std::vector<std::pair<Vector, Vector>> darboux_pairs(const SymplecticSpace& sp, std::vector<Vector> pool) {
  std::vector<std::pair<Vector, Vector>> pairs;
  while (!pool.empty()) {
    Vector x = pool.back();
    pool.pop_back();
    if (is_zero_vector(x)) continue;
    std::size_t partner = pool.size();
    for (std::size_t t = 0; t < pool.size(); ++t)
      if (!sp.form(x, pool[t]).is_zero()) {
        partner = t;
        break;
      }
    if (partner == pool.size()) throw Error(Errc::PreconditionFailed, "subspace is degenerate");
    Vector y = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    const Scalar inv = Scalar::one(sp.field) / sp.form(x, y);
    for (Scalar& e : y) e = e * inv;
    for (Vector& z : pool) {
      // z <- z - w(z, y) x + w(z, x) y kills both pairings.
      const Scalar zy = sp.form(z, y), zx = sp.form(z, x);
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = z[i] - zy * x[i] + zx * y[i];
    }
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

// Basis vectors of `inside` completing the basis of `sub` (a subspace of it).
std::vector<Vector> complement_within(const Subspace& inside, const Subspace& sub) {
  EchelonBasis eb(inside.field(), inside.ambient_dim());
  for (const Vector& v : sub.basis_vectors()) eb.add(v);
  std::vector<Vector> out;
  for (const Vector& v : inside.basis_vectors())
    if (eb.add(v)) out.push_back(v);
  return out;
}

void validate_normal_basis(const SymplecticSpace& sp, const Subspace& w, const NormalBasis& nb) {
  const std::size_t n = sp.n;
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      const Scalar expect = (b == a + n) ? Scalar::one(sp.field) : Scalar::zero(sp.field);
      if (sp.form(nb.basis[a], nb.basis[b]) != expect)
        throw Error(Errc::PreconditionFailed, "normal basis fails the form check");
    }
  std::vector<Vector> listed;
  for (std::size_t i = 0; i < n - nb.l; ++i) listed.push_back(nb.basis[i]);
  for (std::size_t i = 0; i < nb.k; ++i) listed.push_back(nb.basis[n + i]);
  if (Subspace::span(sp.field, 2 * n, listed) != w)
    throw Error(Errc::PreconditionFailed, "normal basis does not span W in the expected shape");
}

}  // namespace

NormalBasis symplectic_normal_basis(const SymplecticSpace& sp, const Subspace& w) {
  const FieldSpec& f = sp.field;
  const std::size_t n = sp.n, d = sp.dim();
  if (w.ambient_dim() != d) throw Error(Errc::AmbientMismatch, "subspace ambient differs from 2n");
  const Subspace radical = subspace_intersect(w, sp.orthogonal(w));
  const auto xy = darboux_pairs(sp, complement_within(w, radical));
  const std::size_t k = xy.size();

  // Partners p_a of the radical basis r_a inside the complement of the x, y pairs.
  std::vector<Vector> xy_flat;
  for (const auto& [x, y] : xy) {
    xy_flat.push_back(x);
    xy_flat.push_back(y);
  }
  const Subspace e = sp.orthogonal(Subspace::span(f, d, xy_flat));
  const std::vector<Vector> r = radical.basis_vectors();
  const std::vector<Vector> e_basis = e.basis_vectors();
  std::vector<Vector> p;
  if (!r.empty()) {
    // Solve w(r_b, sum_c t_c e_c) = delta_ab for the coefficients t.
    Matrix sys(f, r.size(), e_basis.size());
    for (std::size_t b = 0; b < r.size(); ++b)
      for (std::size_t c = 0; c < e_basis.size(); ++c) sys(b, c) = sp.form(r[b], e_basis[c]);
    for (std::size_t a = 0; a < r.size(); ++a) {
      Vector t;
      if (!solve(sys, unit_vector(f, r.size(), a), t)) throw Error(Errc::PreconditionFailed, "no radical partner");
      Vector v = zero_vector(f, d);
      for (std::size_t c = 0; c < e_basis.size(); ++c)
        for (std::size_t i = 0; i < d; ++i) v[i] += t[c] * e_basis[c][i];
      p.push_back(std::move(v));
    }
    // p_a += sum_{b > a} -w(p_a, p_b) r_b makes the partners mutually isotropic.
    const std::vector<Vector> p0 = p;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        const Scalar c = -sp.form(p0[a], p0[b]);
        for (std::size_t i = 0; i < d; ++i) p[a][i] += c * r[b][i];
      }
  }

  std::vector<Vector> used = xy_flat;
  used.insert(used.end(), r.begin(), r.end());
  used.insert(used.end(), p.begin(), p.end());
  const Subspace rest = sp.orthogonal(Subspace::span(f, d, used));
  const auto uu = darboux_pairs(sp, rest.basis_vectors());
  const std::size_t l = uu.size();

  NormalBasis nb;
  nb.k = k;
  nb.l = l;
  nb.basis.resize(d);
  for (std::size_t i = 0; i < k; ++i) {
    nb.basis[i] = xy[i].first;
    nb.basis[n + i] = xy[i].second;
  }
  for (std::size_t a = 0; a < r.size(); ++a) {
    nb.basis[k + a] = r[a];
    nb.basis[n + k + a] = p[a];
  }
  for (std::size_t j = 0; j < l; ++j) {
    nb.basis[n - l + j] = uu[j].first;
    nb.basis[2 * n - l + j] = uu[j].second;
  }
  validate_normal_basis(sp, w, nb);
  return nb;
}

Subspace lagrangian_complement(const SymplecticSpace& sp, const Subspace& w) {
  const std::size_t n = sp.n, d = sp.dim();
  if (w.ambient_dim() != d) throw Error(Errc::AmbientMismatch, "subspace ambient differs from 2n");
  if (d - w.dim() > n) throw Error(Errc::CodimTooLarge, "codimension exceeds n");
  const NormalBasis nb = symplectic_normal_basis(sp, w);
  const std::size_t k = nb.k, l = nb.l;  // codim <= n forces l <= k
  const auto& v = nb.basis;
  auto plus = [](const Vector& a, const Vector& b) {
    Vector s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
  };
  std::vector<Vector> gens;
  for (std::size_t i = n + k; i < 2 * n - l; ++i) gens.push_back(v[i]);
  for (std::size_t j = 0; j < l; ++j) {
    gens.push_back(plus(v[n - l + j], v[n + j]));
    gens.push_back(plus(v[2 * n - l + j], v[j]));
  }
  for (std::size_t i = n + l; i < n + k; ++i) gens.push_back(v[i]);
  const Subspace lag = Subspace::span(sp.field, d, gens);
  if (lag.dim() != n || !sp.is_isotropic(lag) || !subspace_sum(lag, w).is_full())
    throw Error(Errc::PreconditionFailed, "Lagrangian complement failed validation");
  return lag;
}

Subspace isotropic_transversal(const SymplecticSpace& sp, const Subspace& w, std::size_t i) {
  const std::size_t d = sp.dim();
  if (w.ambient_dim() != d) throw Error(Errc::AmbientMismatch, "subspace ambient differs from 2n");
  if (d - w.dim() != i || i > sp.n) throw Error(Errc::CodimMismatch, "need codim W = i <= n");
  const Subspace lag = lagrangian_complement(sp, w);
  const Subspace u = Subspace::span(sp.field, d, complement_within(lag, subspace_intersect(lag, w)));
  if (u.dim() != i || !sp.is_isotropic(u) || !subspace_intersect(u, w).is_zero())
    throw Error(Errc::PreconditionFailed, "isotropic transversal failed validation");
  return u;
}

KerPerpReport ker_perp_realizability_check(const SymplecticSpace& sp, std::size_t m, std::size_t trials,
                                           std::uint64_t seed, const RealizabilityBudget& budget) {
  if (m < 2 || m > sp.n) throw Error(Errc::BadM, "need 1 < m <= n");
  const FieldSpec& f = sp.field;
  const std::size_t d = sp.dim();
  const Subspace ker = ker_fm(sp, m);
  KerPerpReport rep;
  rep.m = m;
  rep.ker_perp = perp(ker, d, m);
  rep.trials = trials;

  // Any W of codim m has an isotropic transversal U; wedge(U) lies in Ker f_m
  // and pairs nontrivially with wedge(W), so wedge(W) cannot lie in the perp.
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Subspace w;
    do {
      w = Subspace::row_space(random_matrix(f, d - m, d, rng));
    } while (w.dim() != d - m);
    const Subspace u = isotropic_transversal(sp, w, m);
    const WedgeVector ww = wedge_of_vectors(f, d, w.basis_vectors());
    const WedgeVector wu = wedge_of_vectors(f, d, u.basis_vectors());
    if (ker.contains(wu.coords()) && !wedge_product(ww, wu).is_zero()) ++rep.trials_passed;
  }
  rep.pairings_all_nonzero = rep.trials_passed == trials;

  const RealizabilityResult scan = realizable_search(rep.ker_perp, d, d - m, budget);
  rep.perp_realizability = scan.status;
  rep.perp_scan_exhaustive = scan.exhaustive;
  rep.points_examined = scan.points_examined;
  return rep;
}

}  // namespace thickrep
