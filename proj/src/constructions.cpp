#include "thickrep/constructions.hpp"

#include <algorithm>

namespace thickrep {

namespace {

Scalar element(const FieldSpec& f, std::uint64_t i) {
  return f.is_finite() ? Scalar::from_code(f, i) : Scalar(f, static_cast<long long>(i));
}

bool contains(const Vector& xs, const Scalar& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

void sort_canonical(Vector& xs) {
  std::sort(xs.begin(), xs.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
}

Subspace span_of_wedges(const FieldSpec& f, std::size_t n, const std::vector<std::vector<std::size_t>>& index_lists) {
  std::vector<Vector> vs;
  for (const auto& idx : index_lists) {
    std::vector<Vector> factors;
    for (std::size_t i : idx) factors.push_back(unit_vector(f, n, i));
    vs.push_back(wedge_of_vectors(f, n, factors).coords());
  }
  const std::size_t dim = index_lists.empty() ? 1 : binomial(n, index_lists.front().size());
  return Subspace::span(f, dim, vs);
}

Tri irreducibility(const Representation& r) {
  if (burnside_dim(r) == r.dim * r.dim) return Tri::Yes;
  if (r.field.is_finite()) {
    try {
      return all_submodules(r, Caps::from_env().points).size() == 2 ? Tri::Yes : Tri::No;
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
    }
  }
  return Tri::Unknown;
}

void require_invariant(const Representation& r, std::size_t m, const Subspace& w, const char* what) {
  if (!is_invariant(exterior_rep(r, m), w))
    throw Error(Errc::PreconditionFailed, std::string(what) + " is not invariant");
}

}  // namespace

CompanionPair companion_pair(const FieldSpec& f, std::size_t n, const Scalar& a, const Scalar& b) {
  if (n < 2) throw Error(Errc::BadN, "companion pair needs n >= 2");
  if (a.is_zero() || b.is_zero() || a == b)
    throw Error(Errc::PreconditionFailed, "a and b must be distinct and nonzero");
  auto shift = [&](const Scalar& corner) {
    Matrix g(f, n, n);
    g(0, n - 1) = corner;
    for (std::size_t i = 1; i < n; ++i) g(i, i - 1) = Scalar::one(f);
    return g;
  };
  CompanionPair out;
  out.rep = make_representation(f, RepMode::Group, {shift(a), shift(b)}, "companion(" + std::to_string(n) + ")");
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<std::vector<std::size_t>> windows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < m; ++t) idx.push_back((i + t) % n);
      windows.push_back(idx);
    }
    Subspace w = span_of_wedges(f, n, windows);
    require_invariant(out.rep, m, w, "window subspace");
    out.windows.push_back(std::move(w));
  }
  out.roots_present = nth_roots(a, n).size() == n && nth_roots(b, n).size() == n;
  out.irreducible = irreducibility(out.rep);
  return out;
}

Matrix block_cyclic(const std::vector<Matrix>& blocks) {
  if (blocks.size() < 2) throw Error(Errc::PreconditionFailed, "need at least two blocks");
  const FieldSpec& f = blocks[0].field();
  const std::size_t m = blocks[0].rows(), ell = blocks.size(), n = ell * m;
  Matrix x(f, n, n);
  for (std::size_t t = 0; t < ell; ++t) {
    const Matrix& blk = blocks[t];
    if (!blk.is_square() || blk.rows() != m) throw Error(Errc::DimensionMismatch, "blocks differ in size");
    // Block t maps block row t+1 from block column t; the last wraps to the top right.
    const std::size_t row0 = ((t + 1) % ell) * m, col0 = t * m;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) x(row0 + i, col0 + j) = blk(i, j);
  }
  return x;
}

Vector ell_th_powers(const FieldSpec& f, std::size_t ell, std::size_t count, const Vector& exclude) {
  Vector out;
  const std::uint64_t limit = f.is_finite() ? f.order() : 1000;
  for (std::uint64_t c = 1; c < limit && out.size() < count; ++c) {
    const Scalar x = element(f, c);
    if (x.is_zero()) continue;
    const Scalar p = x.pow(ell);
    if (contains(out, p) || contains(exclude, p)) continue;
    if (nth_roots(p, ell).size() == ell) out.push_back(p);
  }
  if (out.size() < count)
    throw Error(Errc::FieldTooSmall, f.to_string() + " lacks " + std::to_string(count) + " suitable " +
                                         std::to_string(ell) + "-th powers");
  sort_canonical(out);
  return out;
}

BlockRepSpec default_block_spec(const FieldSpec& f, std::size_t ell, std::size_t m) {
  BlockRepSpec spec;
  spec.field = f;
  spec.ell = ell;
  spec.m = m;
  spec.alphas = ell_th_powers(f, ell, m);
  return spec;
}

std::uint64_t suggest_prime(std::size_t ell, std::size_t m) {
  const std::uint64_t step = ell * m;
  for (std::uint64_t p = step + 1;; p += step)
    if (is_prime(p) && (p - 1) / ell >= 2 * m) return p;
}

namespace {

void check_block_spec(const BlockRepSpec& spec) {
  const FieldSpec& f = spec.field;
  if (spec.ell < 2 || spec.m < 2) throw Error(Errc::PreconditionFailed, "ell and m must both be at least 2");
  if (f.is_finite() && spec.ell % f.characteristic() == 0)
    throw Error(Errc::PreconditionFailed, "the characteristic divides ell");
  if (spec.alphas.size() != spec.m) throw Error(Errc::PreconditionFailed, "need exactly m alphas");
  for (std::size_t i = 0; i < spec.m; ++i) {
    if (!(spec.alphas[i].field() == f)) throw Error(Errc::FieldMismatch, "alpha over the wrong field");
    if (spec.alphas[i].is_zero()) throw Error(Errc::PreconditionFailed, "alphas must be nonzero");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.alphas[i] == spec.alphas[j]) throw Error(Errc::PreconditionFailed, "alphas must be distinct");
    if (nth_roots(spec.alphas[i], spec.ell).size() != spec.ell)
      throw Error(Errc::PreconditionFailed, "alpha " + spec.alphas[i].to_string() + " lacks ell distinct roots");
  }
  if (spec.b_last && (!(spec.b_last->field() == f) || spec.b_last->rows() != spec.m || !spec.b_last->is_square()))
    throw Error(Errc::DimensionMismatch, "b_last must be m x m over the spec field");
}

Matrix random_invertible_with_dense_inverse(const FieldSpec& f, std::size_t m, Rng& rng) {
  for (;;) {
    const Matrix p = random_invertible(f, m, rng);
    const Matrix inv = inverse(p);
    bool dense = true;
    for (std::size_t i = 0; i < m && dense; ++i)
      for (std::size_t j = 0; j < m && dense; ++j) dense = !inv(i, j).is_zero();
    if (dense) return p;
  }
}

}  // namespace

BlockRep block_rep(const BlockRepSpec& spec, bool b_rest_identity, std::uint64_t seed, std::size_t max_attempts) {
  check_block_spec(spec);
  const FieldSpec& f = spec.field;
  const std::size_t ell = spec.ell, m = spec.m, n = ell * m;

  std::vector<Matrix> a_blocks(ell, Matrix::identity(f, m));
  a_blocks[ell - 1] = Matrix::diagonal(f, spec.alphas);
  const Matrix a = block_cyclic(a_blocks);

  BlockRep out;
  if (!spec.b_last) out.betas = ell_th_powers(f, ell, m, spec.alphas);
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, max_attempts); ++attempt) {
    Rng rng(seed + attempt);
    out.attempts = attempt + 1;
    Matrix eig_basis;
    if (spec.b_last) {
      out.b_last = *spec.b_last;
    } else {
      eig_basis = random_invertible_with_dense_inverse(f, m, rng);
      out.b_last = eig_basis * Matrix::diagonal(f, out.betas) * inverse(eig_basis);
    }
    std::vector<Matrix> b_blocks(ell, Matrix::identity(f, m));
    if (!b_rest_identity)
      for (std::size_t t = 0; t + 1 < ell; ++t) b_blocks[t] = random_invertible(f, m, rng);
    b_blocks[ell - 1] = out.b_last;
    out.rep = make_representation(f, RepMode::Group, {a, block_cyclic(b_blocks)},
                                  "block(" + std::to_string(ell) + "," + std::to_string(m) + ")");
    out.irreducible = burnside_dim(out.rep) == n * n ? Tri::Yes : Tri::Unknown;
    if (out.irreducible == Tri::Yes || spec.b_last) break;
  }
  if (out.irreducible != Tri::Yes) out.irreducible = irreducibility(out.rep);

  // W: one wedge per diagonal block; Y: one index from each block.
  std::vector<std::vector<std::size_t>> w_idx;
  for (std::size_t t = 0; t < ell; ++t) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) idx.push_back(t * m + i);
    w_idx.push_back(idx);
  }
  out.w = span_of_wedges(f, n, w_idx);
  std::vector<std::vector<std::size_t>> y_idx{{}};
  for (std::size_t t = 0; t < ell; ++t) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& partial : y_idx)
      for (std::size_t i = 0; i < m; ++i) {
        auto grown = partial;
        grown.push_back(t * m + i);
        next.push_back(grown);
      }
    y_idx = std::move(next);
  }
  out.y = span_of_wedges(f, n, y_idx);
  require_invariant(out.rep, m, out.w, "W");
  require_invariant(out.rep, ell, out.y, "Y");

  // Each A-eigenvector in the B-eigenbasis; the Vandermonde argument makes
  // every coefficient nonzero when the B-eigenvalues avoid the alphas.
  if (b_rest_identity) {
    try {
      std::vector<Matrix> bb(ell, Matrix::identity(f, m));
      bb[ell - 1] = out.b_last;
      const auto a_pairs = block_eigenvectors(a_blocks);
      const auto b_pairs = block_eigenvectors(bb);
      std::vector<Vector> cols;
      for (const auto& pr : b_pairs) cols.push_back(pr.second);
      const Matrix basis = Matrix::from_columns(f, cols, n);
      out.coefficients_nonzero = true;
      for (const auto& pr : a_pairs) {
        Vector c;
        if (!solve(basis, pr.second, c)) throw Error(Errc::Singular, "B-eigenvectors are not a basis");
        for (const Scalar& x : c) out.coefficients_nonzero = out.coefficients_nonzero && !x.is_zero();
        out.coefficients.push_back(std::move(c));
      }
    } catch (const Error& e) {
      if (e.code() != Errc::PreconditionFailed) throw;
    }
  }
  return out;
}

std::vector<std::pair<Scalar, Vector>> block_eigenvectors(const std::vector<Matrix>& blocks) {
  const Matrix x = block_cyclic(blocks);
  const FieldSpec& f = x.field();
  const std::size_t ell = blocks.size(), m = blocks[0].rows();
  Matrix c = Matrix::identity(f, m);
  for (const Matrix& b : blocks) c = b * c;
  const auto alphas = poly_roots(charpoly(c));
  if (alphas.size() != m) throw Error(Errc::PreconditionFailed, "C needs m distinct eigenvalues in the field");
  std::vector<std::pair<Scalar, Vector>> out;
  for (const auto& [alpha, mult] : alphas) {
    const Subspace eig = kernel(c - Matrix::identity(f, m).scaled(alpha));
    const Vector v = eig.basis_vectors().front();
    std::vector<Scalar> xis = nth_roots(alpha, ell);
    if (xis.size() != ell) throw Error(Errc::PreconditionFailed, "an eigenvalue of C lacks ell distinct roots");
    sort_canonical(xis);
    for (const Scalar& xi : xis) {
      Vector w;
      Vector part = v;
      for (std::size_t t = 0; t < ell; ++t) {
        const Scalar s = xi.pow(ell - 1 - t);
        for (const Scalar& e : part) w.push_back(s * e);
        if (t + 1 < ell) part = blocks[t].apply(part);
      }
      Vector xw = x.apply(w);
      for (std::size_t i = 0; i < w.size(); ++i)
        if (xw[i] != xi * w[i]) throw Error(Errc::PreconditionFailed, "eigenvector check failed");
      out.emplace_back(xi, std::move(w));
    }
  }
  return out;
}

Diagonalizable generic_diagonalizable(const Vector& v, const Vector& avoid, std::uint64_t seed) {
  if (v.empty() || is_zero_vector(v)) throw Error(Errc::ZeroInput, "v must be nonzero");
  const FieldSpec& f = v[0].field();
  const std::size_t n = v.size();
  Diagonalizable out;
  const std::uint64_t limit = f.is_finite() ? f.order() : n + avoid.size() + 2;
  for (std::uint64_t c = 1; c < limit && out.betas.size() < n; ++c) {
    const Scalar b = element(f, c);
    if (!b.is_zero() && !contains(avoid, b) && !contains(out.betas, b)) out.betas.push_back(b);
  }
  if (out.betas.size() < n) throw Error(Errc::FieldTooSmall, "not enough nonzero eigenvalues outside the avoided set");

  // Complete v to a basis {v, u_1, ..., u_{n-1}}, then v_n = v - sum u_i.
  Rng rng(seed);
  EchelonBasis eb(f, n);
  eb.add(v);
  std::vector<Vector> us;
  while (us.size() + 1 < n) {
    Vector u = random_vector(f, n, rng);
    if (eb.add(u)) us.push_back(std::move(u));
  }
  Vector last = v;
  for (const Vector& u : us)
    for (std::size_t i = 0; i < n; ++i) last[i] -= u[i];
  out.basis = us;
  out.basis.push_back(last);
  const Matrix p = Matrix::from_columns(f, out.basis, n);
  out.f = p * Matrix::diagonal(f, out.betas) * inverse(p);
  return out;
}

Subspace e1_wedge_subspace(const FieldSpec& f, std::size_t n) {
  if (n < 4) throw Error(Errc::BadN, "n must be at least 4");
  std::vector<std::vector<std::size_t>> idx;
  for (std::size_t j = 1; j < n; ++j) idx.push_back({0, j});
  return span_of_wedges(f, n, idx);
}

std::string to_string(LieFamily family) {
  switch (family) {
    case LieFamily::gl: return "gl";
    case LieFamily::sl: return "sl";
    case LieFamily::so_split: return "so_split";
    case LieFamily::sp: return "sp";
  }
  return "gl";
}

LieFamily parse_lie_family(const std::string& name) {
  for (LieFamily fam : {LieFamily::gl, LieFamily::sl, LieFamily::so_split, LieFamily::sp})
    if (to_string(fam) == name) return fam;
  if (name == "so") return LieFamily::so_split;
  throw Error(Errc::BadFamily, "unknown Lie family '" + name + "'");
}

Matrix lie_form(const FieldSpec& f, LieFamily family, std::size_t n) {
  if (family == LieFamily::sp) {
    Matrix j(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      j(i, n + i) = Scalar::one(f);
      j(n + i, i) = -Scalar::one(f);
    }
    return j;
  }
  if (family == LieFamily::so_split) {
    Matrix q(f, n, n);
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) q(i, h + i) = q(h + i, i) = Scalar::one(f);
    if (n % 2) q(n - 1, n - 1) = Scalar::one(f);
    return q;
  }
  throw Error(Errc::BadFamily, to_string(family) + " has no stored form");
}

std::vector<Matrix> lie_generators(const FieldSpec& f, LieFamily family, std::size_t n) {
  if (n < 1) throw Error(Errc::BadN, "n must be positive");
  auto unit = [&](std::size_t size, std::size_t i, std::size_t j) {
    Matrix e(f, size, size);
    e(i, j) = Scalar::one(f);
    return e;
  };
  std::vector<Matrix> out;
  switch (family) {
    case LieFamily::gl:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(unit(n, i, j));
      break;
    case LieFamily::sl:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back(unit(n, i, j));
      for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
      break;
    case LieFamily::sp: {
      // X^T J + J X = 0 iff J X is symmetric, so X = J^{-1} S = -J S.
      const Matrix neg_j = lie_form(f, family, n).scaled(-Scalar::one(f));
      for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = i; j < 2 * n; ++j)
          out.push_back(neg_j * (i == j ? unit(2 * n, i, i) : unit(2 * n, i, j) + unit(2 * n, j, i)));
      break;
    }
    case LieFamily::so_split: {
      // X^T Q + Q X = 0 iff Q X is antisymmetric.
      const Matrix q_inv = inverse(lie_form(f, family, n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(q_inv * (unit(n, i, j) - unit(n, j, i)));
      break;
    }
  }
  return out;
}

}  // namespace thickrep
