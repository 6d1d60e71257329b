#include "thickrep/repcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "modp.hpp"

namespace thickrep {

std::string to_string(RepMode mode) { return mode == RepMode::Group ? "group" : "lie"; }

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Thick: return "Thick";
    case Verdict::NotThick: return "NotThick";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

void Representation::validate() const {
  if (generators.empty()) throw Error(Errc::PreconditionFailed, "a representation needs at least one generator");
  for (const Matrix& g : generators) {
    if (!(g.field() == field)) throw Error(Errc::FieldMismatch, "generator over " + g.field().to_string());
    if (!g.is_square()) throw Error(Errc::NotSquare, "generator is not square");
    if (g.rows() != dim) throw Error(Errc::DimensionMismatch, "generator size differs from dim");
    if (mode == RepMode::Group && !is_invertible(g))
      throw Error(Errc::PreconditionFailed, "group generators must be invertible");
  }
}

Representation make_representation(const FieldSpec& f, RepMode mode, std::vector<Matrix> generators,
                                   std::string label) {
  Representation r;
  r.field = f;
  r.dim = generators.empty() ? 0 : generators[0].rows();
  r.mode = mode;
  r.generators = std::move(generators);
  r.label = std::move(label);
  r.validate();
  return r;
}

Caps Caps::from_string(const std::string& spec, Caps base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::ParseError, "caps entry '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "caps value in '" + item + "' is not an integer");
    }
    if (key == "group")
      base.group = value;
    else if (key == "points")
      base.points = value;
    else if (key == "pairs")
      base.pairs = value;
    else
      throw Error(Errc::ParseError, "unknown caps key '" + key + "'");
  }
  return base;
}

Caps Caps::from_string(const std::string& spec) { return from_string(spec, Caps{}); }

Caps Caps::from_env() {
  const char* env = std::getenv("THICKREP_CAPS");
  return env ? from_string(env) : Caps{};
}

Representation exterior_rep(const Representation& r, std::size_t m) {
  if (m > r.dim) throw Error(Errc::BadM, "m exceeds the dimension");
  Representation out;
  out.field = r.field;
  out.dim = binomial(r.dim, m);
  out.mode = r.mode;
  out.label = "wedge^" + std::to_string(m) + "(" + r.label + ")";
  for (const Matrix& g : r.generators)
    out.generators.push_back(r.mode == RepMode::Group ? compound(g, m) : lie_derivation(g, m));
  return out;
}

Representation extend_scalars(const Representation& r, const FieldSpec& bigger) {
  if (!r.field.is_finite() || !bigger.is_finite() || r.field.characteristic() != bigger.characteristic() ||
      bigger.degree() % r.field.degree() != 0 || r.field.kind() != FieldKind::PrimeField)
    throw Error(Errc::WrongField, "scalars extend only from F_p into F_{p^k}");
  Representation out = r;
  out.field = bigger;
  out.label = r.label + " over " + bigger.to_string();
  for (Matrix& g : out.generators) {
    Matrix h(bigger, g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) h(i, j) = Scalar::from_code(bigger, g(i, j).code());
    g = std::move(h);
  }
  return out;
}

namespace {

// Coordinates of v in the canonical basis of w (the entries at the pivots).
Vector coordinates_in(const Subspace& w, const Vector& v) {
  Vector c;
  for (std::size_t p : w.pivots()) c.push_back(v[p]);
  return c;
}

}  // namespace

Representation restrict_to(const Representation& r, const Subspace& w) {
  if (w.ambient_dim() != r.dim) throw Error(Errc::AmbientMismatch, "subspace ambient differs from dim");
  Representation out;
  out.field = r.field;
  out.dim = w.dim();
  out.mode = r.mode;
  out.label = r.label + "|sub";
  const auto basis = w.basis_vectors();
  for (const Matrix& g : r.generators) {
    std::vector<Vector> cols;
    for (const Vector& b : basis) {
      const Vector image = g.apply(b);
      if (!w.contains(image)) throw Error(Errc::PreconditionFailed, "subspace is not invariant");
      cols.push_back(coordinates_in(w, image));
    }
    out.generators.push_back(cols.empty() ? Matrix(r.field, 0, 0) : Matrix::from_columns(r.field, cols, w.dim()));
  }
  return out;
}

Subspace spin(const Representation& r, const std::vector<Vector>& seeds) {
  EchelonBasis eb(r.field, r.dim);
  std::deque<Vector> queue;
  for (const Vector& s : seeds) {
    if (s.size() != r.dim) throw Error(Errc::DimensionMismatch, "seed length differs from dim");
    if (eb.add(s)) queue.push_back(s);
  }
  while (!queue.empty() && eb.dim() < r.dim) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (const Matrix& g : r.generators) {
      Vector w = g.apply(v);
      if (eb.add(w)) queue.push_back(std::move(w));
    }
  }
  return eb.subspace();
}

bool is_invariant(const Representation& r, const Subspace& w) {
  if (w.ambient_dim() != r.dim) throw Error(Errc::AmbientMismatch, "subspace ambient differs from dim");
  for (const Matrix& g : r.generators)
    for (const Vector& b : w.basis_vectors())
      if (!w.contains(g.apply(b))) return false;
  return true;
}

std::size_t burnside_dim(const Representation& r) {
  const std::size_t n = r.dim;
  auto flat = [n](const Matrix& a) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    return v;
  };
  EchelonBasis eb(r.field, n * n);
  std::deque<Matrix> queue;
  const Matrix id = Matrix::identity(r.field, n);
  if (eb.add(flat(id))) queue.push_back(id);
  while (!queue.empty() && eb.dim() < n * n) {
    const Matrix a = std::move(queue.front());
    queue.pop_front();
    for (const Matrix& g : r.generators) {
      Matrix p = a * g;
      if (eb.add(flat(p))) queue.push_back(std::move(p));
    }
  }
  return eb.dim();
}

// ---------------------------------------------------------------------------
// Submodule lattice over finite fields.

namespace {

using Key = std::vector<std::int64_t>;

// Canonical subspaces over a prime field as flattened RREF residues, ordered
// by (dim, entries) which matches canonical_less on Subspace.
struct KeyLess {
  std::size_t n;
  bool operator()(const Key& a, const Key& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct PrimeRep {
  std::size_t n;
  std::int64_t p;
  std::vector<std::vector<std::int64_t>> gens;  // row-major n x n

  explicit PrimeRep(const Representation& r) : n(r.dim), p(r.field.characteristic()) {
    for (const Matrix& g : r.generators) {
      std::vector<std::int64_t> a(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<std::int64_t>(g(i, j).code());
      gens.push_back(std::move(a));
    }
  }

  // Fully reduced echelon rows with pivots; returns true if v was new.
  bool add(std::vector<std::vector<std::int64_t>>& rows, std::vector<std::size_t>& pivots,
           std::vector<std::int64_t> v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::int64_t c = v[pivots[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = ((v[j] - c * rows[i][j]) % p + p) % p;
    }
    std::size_t piv = 0;
    while (piv < n && v[piv] == 0) ++piv;
    if (piv == n) return false;
    const std::int64_t s = modp::inv(v[piv], p);
    for (auto& x : v) x = x * s % p;
    for (auto& row : rows) {
      const std::int64_t c = row[piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] = ((row[j] - c * v[j]) % p + p) % p;
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  Key canonical(std::vector<std::vector<std::int64_t>> rows, std::vector<std::size_t> pivots) const {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    Key key;
    key.reserve(rows.size() * n);
    for (std::size_t i : order) key.insert(key.end(), rows[i].begin(), rows[i].end());
    return key;
  }

  Key spin(const std::vector<std::int64_t>& seed) const {
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::size_t> pivots;
    std::deque<std::vector<std::int64_t>> queue;
    if (add(rows, pivots, seed)) queue.push_back(seed);
    while (!queue.empty() && rows.size() < n) {
      const auto v = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        std::vector<std::int64_t> w(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          std::int64_t s = 0;
          for (std::size_t j = 0; j < n; ++j) s += g[i * n + j] * v[j];
          w[i] = s % p;
        }
        if (add(rows, pivots, w)) queue.push_back(std::move(w));
      }
    }
    return canonical(std::move(rows), std::move(pivots));
  }

  Key sum(const Key& a, const Key& b) const {
    std::vector<std::int64_t> m(a);
    m.insert(m.end(), b.begin(), b.end());
    const std::size_t rows = m.size() / n;
    const std::size_t rk = modp::rref(m, rows, n, p);
    m.resize(rk * n);
    return m;
  }

  Subspace to_subspace(const Key& key, const FieldSpec& f) const {
    const std::size_t d = key.size() / n;
    Matrix b(f, d, n);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = Scalar::from_code(f, static_cast<std::uint64_t>(key[i * n + j]));
    return Subspace::from_canonical(b);
  }
};

std::vector<Subspace> all_submodules_prime(const Representation& r, std::uint64_t cap) {
  const PrimeRep rep(r);
  const std::size_t n = r.dim;
  const std::int64_t p = rep.p;
  std::set<Key, KeyLess> cyclic{KeyLess{n}};
  std::vector<std::int64_t> v(n);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < n; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::fill(v.begin(), v.end(), 0);
      v[lead] = 1;
      std::uint64_t x = idx;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<std::int64_t>(x % static_cast<std::uint64_t>(p));
        x /= static_cast<std::uint64_t>(p);
      }
      cyclic.insert(rep.spin(v));
    }
  }
  // Every submodule is a sum of cyclic ones; close under adding cyclic generators.
  std::set<Key, KeyLess> lattice{KeyLess{n}};
  lattice.insert(Key{});
  std::deque<Key> frontier{Key{}};
  const std::vector<Key> cyc(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    const Key cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Key& c : cyc) {
      Key s = rep.sum(cur, c);
      if (lattice.insert(s).second) {
        if (lattice.size() > cap) throw Error(Errc::CapExceeded, "submodule lattice exceeds the cap");
        frontier.push_back(std::move(s));
      }
    }
  }
  std::vector<Subspace> out;
  out.reserve(lattice.size());
  for (const Key& k : lattice) out.push_back(rep.to_subspace(k, r.field));
  return out;
}

std::vector<Subspace> all_submodules_generic(const Representation& r, std::uint64_t cap) {
  const FieldSpec& f = r.field;
  const std::size_t n = r.dim;
  const std::uint64_t q = f.order();
  auto less = [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); };
  std::set<Subspace, decltype(less)> cyclic(less);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < n; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vector v = zero_vector(f, n);
      v[lead] = Scalar::one(f);
      std::uint64_t x = idx;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = Scalar::from_code(f, x % q);
        x /= q;
      }
      cyclic.insert(spin(r, {v}));
    }
  }
  std::set<Subspace, decltype(less)> lattice(less);
  lattice.insert(Subspace(f, n));
  std::deque<Subspace> frontier{Subspace(f, n)};
  while (!frontier.empty()) {
    const Subspace cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Subspace& c : cyclic) {
      Subspace s = subspace_sum(cur, c);
      if (lattice.insert(s).second) {
        if (lattice.size() > cap) throw Error(Errc::CapExceeded, "submodule lattice exceeds the cap");
        frontier.push_back(std::move(s));
      }
    }
  }
  return {lattice.begin(), lattice.end()};
}

}  // namespace

std::vector<Subspace> all_submodules(const Representation& r, std::uint64_t cap) {
  if (!r.field.is_finite()) throw Error(Errc::WrongField, "submodule enumeration needs a finite field");
  if (projective_point_count(r.field.order(), r.dim) > cap)
    throw Error(Errc::CapExceeded, "projective space has more points than the cap");
  if (r.field.kind() == FieldKind::PrimeField) return all_submodules_prime(r, cap);
  return all_submodules_generic(r, cap);
}

// ---------------------------------------------------------------------------

Commutant commutant(const Representation& r) {
  const FieldSpec& f = r.field;
  const std::size_t n = r.dim, vars = n * n;
  // Unknown M with variable index a*n + b for M[a][b]; (M g - g M)[i][j] = 0.
  Matrix eqs(f, 0, vars);
  for (const Matrix& g : r.generators) {
    Matrix block(f, vars, vars);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          if (!g(k, j).is_zero()) block(row, i * n + k) += g(k, j);
          if (!g(i, k).is_zero()) block(row, k * n + j) -= g(i, k);
        }
      }
    const RrefResult red = rref(Matrix::vstack(eqs, block));
    std::vector<std::size_t> keep(red.rank), all(vars);
    std::iota(keep.begin(), keep.end(), 0);
    std::iota(all.begin(), all.end(), 0);
    eqs = red.matrix.submatrix(keep, all);
  }
  const Subspace k = kernel(eqs);
  Commutant out;
  out.dim = k.dim();
  for (const Vector& v : k.basis_vectors()) {
    Matrix m(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = v[a * n + b];
    out.basis.push_back(std::move(m));
  }
  return out;
}

std::optional<std::vector<Subspace>> isotypic_decomposition(const Representation& r, std::uint64_t seed) {
  const FieldSpec& f = r.field;
  const std::size_t n = r.dim;
  const Commutant c = commutant(r);
  if (c.dim == 1) return std::vector<Subspace>{Subspace::full(f, n)};
  for (std::size_t i = 0; i < c.dim; ++i)
    for (std::size_t j = i + 1; j < c.dim; ++j)
      if (c.basis[i] * c.basis[j] != c.basis[j] * c.basis[i]) return std::nullopt;
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    Rng rng(seed + attempt);
    Matrix z(f, n, n);
    for (const Matrix& b : c.basis) z = z + b.scaled(random_scalar(f, rng, 5));
    // Diagonalizable with c.dim distinct eigenvalues iff the minimal polynomial
    // has that degree and splits into distinct linear factors.
    const Poly mp = minimal_polynomial(z);
    if (mp.degree() != static_cast<int>(c.dim)) continue;
    const auto roots = poly_roots(mp);
    if (roots.size() != c.dim) continue;
    std::vector<Subspace> spaces;
    std::size_t total = 0;
    for (const auto& [lambda, mult] : roots) {
      spaces.push_back(kernel(z - Matrix::identity(f, n).scaled(lambda)));
      total += spaces.back().dim();
    }
    if (total != n) continue;
    std::sort(spaces.begin(), spaces.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
    return spaces;
  }
  return std::nullopt;
}

Tri is_m_dense(const Representation& r, std::size_t m, bool absolute, const Caps& caps) {
  if (m > r.dim) throw Error(Errc::BadM, "m exceeds the dimension");
  if (m == 0 || m == r.dim) return Tri::Yes;
  const Representation e = exterior_rep(r, m);
  const std::size_t big = e.dim;
  const bool full_algebra = burnside_dim(e) == big * big;
  if (absolute || full_algebra) return full_algebra ? Tri::Yes : Tri::No;
  if (r.field.is_finite()) {
    try {
      return all_submodules(e, caps.points).size() == 2 ? Tri::Yes : Tri::No;
    } catch (const Error& err) {
      if (err.code() != Errc::CapExceeded) throw;
    }
  }
  const auto iso = isotypic_decomposition(e);
  if (iso && iso->size() >= 2) return Tri::No;
  return Tri::Unknown;
}

// ---------------------------------------------------------------------------
// Thickness.

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t m) {
  if (m > n) return 0;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // G(n, m) = G(n-1, m-1) + q^m G(n-1, m), saturating.
  std::vector<std::vector<std::uint64_t>> g(n + 1, std::vector<std::uint64_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) g[i][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= std::min(i, m); ++j) {
      std::uint64_t qj = 1;
      bool overflow = false;
      for (std::size_t t = 0; t < j; ++t) {
        if (qj > kMax / q) overflow = true;
        qj *= q;
      }
      std::uint64_t term = 0;
      if (overflow || (g[i - 1][j] != 0 && qj > kMax / g[i - 1][j]))
        term = g[i - 1][j] == 0 ? 0 : kMax;
      else
        term = qj * g[i - 1][j];
      g[i][j] = g[i - 1][j - 1] > kMax - term ? kMax : g[i - 1][j - 1] + term;
    }
  return g[n][m];
}

std::vector<Subspace> grassmannian(const FieldSpec& f, std::size_t n, std::size_t m) {
  if (!f.is_finite()) throw Error(Errc::WrongField, "Grassmannian enumeration needs a finite field");
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  const std::uint64_t q = f.order();
  std::vector<Subspace> out;
  // Pivot sets in lexicographic order; free entries sit right of each pivot, off pivot columns.
  std::vector<std::size_t> piv(m);
  std::iota(piv.begin(), piv.end(), 0);
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) free.emplace_back(i, j);
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < free.size(); ++t) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Matrix b(f, m, n);
      for (std::size_t i = 0; i < m; ++i) b(i, piv[i]) = Scalar::one(f);
      std::uint64_t x = idx;
      for (const auto& [i, j] : free) {
        b(i, j) = Scalar::from_code(f, x % q);
        x /= q;
      }
      out.push_back(Subspace::from_canonical(b));
    }
    // Next m-subset in lexicographic order.
    std::size_t i = m;
    while (i > 0 && piv[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < m; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

namespace {

std::vector<std::uint64_t> codes_of(const Subspace& s) {
  std::vector<std::uint64_t> k;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) k.push_back(s.basis()(i, j).code());
  return k;
}

std::string ordinal(std::size_t m) { return std::to_string(m) + (m == 1 ? "st" : m == 2 ? "nd" : m == 3 ? "rd" : "th"); }

// Complementarity test U + V = k^n (dims already add to n), fast for prime fields.
struct ComplementTester {
  FieldSpec f;
  std::size_t n;
  bool prime;
  std::vector<std::vector<std::int64_t>> left, right;

  ComplementTester(const std::vector<Subspace>& us, const std::vector<Subspace>& vs, std::size_t n_)
      : f(us.empty() ? vs.front().field() : us.front().field()), n(n_), prime(f.kind() == FieldKind::PrimeField) {
    if (!prime) return;
    auto pack = [](const Subspace& s) {
      std::vector<std::int64_t> a;
      for (std::uint64_t c : codes_of(s)) a.push_back(static_cast<std::int64_t>(c));
      return a;
    };
    for (const Subspace& s : us) left.push_back(pack(s));
    for (const Subspace& s : vs) right.push_back(pack(s));
  }

  bool complementary(std::size_t u, std::size_t v, const std::vector<Subspace>& us,
                     const std::vector<Subspace>& vs) const {
    if (!prime) return direct_sum_is_ambient(us[u], vs[v]);
    std::vector<std::int64_t> a(left[u]);
    a.insert(a.end(), right[v].begin(), right[v].end());
    return modp::rank(a, n, n, f.characteristic()) == n;
  }
};

ThicknessReport trivial_thick(const Representation& r, std::size_t m, const std::string& method) {
  ThicknessReport rep;
  rep.m = m;
  rep.mode = r.mode;
  rep.method = method;
  rep.verdict = Verdict::Thick;
  rep.log.push_back("m is 0 or n: every representation is thick here");
  return rep;
}

}  // namespace

ThicknessReport is_m_thick_definition(const Representation& r, std::size_t m, const Caps& caps) {
  if (m > r.dim) throw Error(Errc::BadM, "m exceeds the dimension");
  if (r.mode != RepMode::Group) throw Error(Errc::PreconditionFailed, "the definition decider needs Group mode");
  if (!r.field.is_finite()) throw Error(Errc::WrongField, "the definition decider needs a finite field");
  if (m == 0 || m == r.dim) return trivial_thick(r, m, "definition");
  ThicknessReport rep;
  rep.m = m;
  rep.mode = r.mode;
  rep.method = "definition";
  const std::size_t n = r.dim;
  const std::uint64_t q = r.field.order();
  const std::uint64_t n1 = gaussian_binomial(q, n, m), n2 = gaussian_binomial(q, n, n - m);
  if (n1 > caps.points || n2 > caps.points) {
    rep.log.push_back("CapExceeded: Grassmannian has " + std::to_string(std::max(n1, n2)) + " points, cap " +
                      std::to_string(caps.points));
    return rep;
  }
  const std::vector<Subspace> gr1 = grassmannian(r.field, n, m);
  const std::vector<Subspace> gr2 = n - m == m ? gr1 : grassmannian(r.field, n, n - m);
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t i = 0; i < gr1.size(); ++i) index.emplace(codes_of(gr1[i]), i);

  // Orbits of the group on m-subspaces: the generators act by permutations
  // (the group is finite), so orbits are the connected components.
  std::vector<std::size_t> parent(gr1.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Matrix& g : r.generators) {
    const Matrix gt = g.transpose();
    for (std::size_t i = 0; i < gr1.size(); ++i) {
      const Subspace image = Subspace::row_space(gr1[i].basis() * gt);
      const std::size_t j = index.at(codes_of(image));
      const std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t i = 0; i < gr1.size(); ++i) orbits[find(i)].push_back(i);
  rep.log.push_back(std::to_string(gr1.size()) + " subspaces of dim " + std::to_string(m) + " in " +
                    std::to_string(orbits.size()) + " orbits; " + std::to_string(gr2.size()) +
                    " subspaces of dim " + std::to_string(n - m));

  const ComplementTester tester(gr1, gr2, n);
  std::uint64_t pairs = 0;
  // The representative (smallest index) of each orbit is its canonical minimum.
  for (const auto& [root, members] : orbits) {
    for (std::size_t v = 0; v < gr2.size(); ++v) {
      bool hit = false;
      for (std::size_t u : members) {
        if (++pairs > caps.pairs) {
          rep.log.push_back("CapExceeded: more than " + std::to_string(caps.pairs) + " complement checks");
          return rep;
        }
        if (tester.complementary(u, v, gr1, gr2)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        rep.verdict = Verdict::NotThick;
        rep.subspace_pair = SubspacePairCertificate{gr1[root], gr2[v]};
        rep.log.push_back("no group element moves V1 (orbit size " + std::to_string(members.size()) +
                          ") to a complement of V2");
        return rep;
      }
    }
  }
  rep.verdict = Verdict::Thick;
  rep.log.push_back("every orbit meets a complement of every subspace (" + std::to_string(pairs) +
                    " complement checks)");
  return rep;
}

namespace {

struct PairScan {
  bool unknown = false;
  std::size_t examined = 0;
  std::size_t exact_rejections = 0;
};

// Scans candidate invariant W1 in order; fills a certificate on the first pair
// with both sides realizable.
PairScan scan_pairs(const std::vector<Subspace>& candidates, std::size_t n, std::size_t m,
                    const RealizabilityBudget& budget, ThicknessReport& rep) {
  PairScan scan;
  for (const Subspace& w1 : candidates) {
    if (w1.is_zero() || w1.is_full()) continue;
    ++scan.examined;
    const RealizabilityResult r1 = realizable_search(w1, n, m, budget);
    if (r1.status == Realizability::NotRealizable) {
      ++scan.exact_rejections;
      continue;
    }
    const Subspace w2 = perp(w1, n, m);
    const RealizabilityResult r2 = realizable_search(w2, n, n - m, budget);
    if (r1.status == Realizability::Realizable && r2.status == Realizability::Realizable) {
      rep.verdict = Verdict::NotThick;
      rep.invariant_pair = InvariantPairCertificate{m, w1, w2, r1.witness, r2.witness, r1.witness_vectors,
                                                    r2.witness_vectors};
      rep.log.push_back("invariant W1 of dim " + std::to_string(w1.dim()) + " and its perp of dim " +
                        std::to_string(w2.dim()) + " are both realizable");
      return scan;
    }
    if (r2.status == Realizability::NotRealizable) {
      ++scan.exact_rejections;
      continue;
    }
    scan.unknown = true;
  }
  return scan;
}

}  // namespace

ThicknessReport is_m_thick_criterion(const Representation& r, std::size_t m, const Caps& caps, std::uint64_t seed) {
  if (m > r.dim) throw Error(Errc::BadM, "m exceeds the dimension");
  if (m == 0 || m == r.dim) return trivial_thick(r, m, "criterion");
  ThicknessReport rep;
  rep.m = m;
  rep.mode = r.mode;
  rep.method = "criterion";
  if (r.mode == RepMode::Lie) rep.log.push_back("Lie mode: verdict from invariant subspaces of the algebra action");
  const std::size_t n = r.dim;
  const Representation e = exterior_rep(r, m);
  RealizabilityBudget budget;
  budget.max_points = caps.points;
  budget.seed = seed;

  if (r.field.is_finite()) {
    try {
      const std::vector<Subspace> subs = all_submodules(e, caps.points);
      rep.log.push_back(std::to_string(subs.size()) + " invariant subspaces in the " + ordinal(m) +
                        " exterior power");
      const PairScan scan = scan_pairs(subs, n, m, budget, rep);
      if (rep.verdict == Verdict::NotThick) return rep;
      rep.verdict = scan.unknown ? Verdict::Unknown : Verdict::Thick;
      rep.log.push_back(scan.unknown ? "some realizability scans exceeded the budget"
                                     : "no invariant subspace pairs realizably with its perp (" +
                                           std::to_string(scan.examined) + " checked)");
      return rep;
    } catch (const Error& err) {
      if (err.code() != Errc::CapExceeded) throw;
      rep.log.push_back(std::string("submodule enumeration skipped: ") + err.what());
    }
  }

  // Multiplicity-free split case: invariant subspaces are sums of the
  // isotypic summands, provided each summand is absolutely irreducible.
  const auto iso = isotypic_decomposition(e, seed);
  if (!iso) {
    rep.log.push_back("isotypic decomposition unavailable");
    return rep;
  }
  for (const Subspace& s : *iso) {
    if (burnside_dim(restrict_to(e, s)) != s.dim() * s.dim()) {
      rep.log.push_back("a summand of dim " + std::to_string(s.dim()) + " is not absolutely irreducible");
      return rep;
    }
  }
  if (iso->size() > 16) {
    rep.log.push_back("too many summands to enumerate their sums");
    return rep;
  }
  std::vector<Subspace> sums;
  for (std::uint64_t mask = 1; mask + 1 < (1ull << iso->size()); ++mask) {
    Subspace s(r.field, e.dim);
    for (std::size_t i = 0; i < iso->size(); ++i)
      if (mask >> i & 1) s = subspace_sum(s, (*iso)[i]);
    sums.push_back(std::move(s));
  }
  std::sort(sums.begin(), sums.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  std::string dims;
  for (const Subspace& s : *iso) dims += (dims.empty() ? "" : "+") + std::to_string(s.dim());
  rep.log.push_back("isotypic summands of dims " + dims);
  const PairScan scan = scan_pairs(sums, n, m, budget, rep);
  if (rep.verdict == Verdict::NotThick) return rep;
  if (!scan.unknown) {
    rep.verdict = Verdict::Thick;
    rep.log.push_back("every proper invariant subspace or its perp is exactly non-realizable");
  } else {
    rep.log.push_back("realizability search inconclusive over " + r.field.to_string());
  }
  return rep;
}

RecheckResult recheck_certificate(const Representation& r, const ThicknessReport& report) {
  RecheckResult out;
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.problems.push_back(why);
  };
  const std::size_t n = r.dim, m = report.m;
  if (report.verdict != Verdict::NotThick) return out;
  if (report.invariant_pair) {
    const InvariantPairCertificate& c = *report.invariant_pair;
    const Representation e1 = exterior_rep(r, m), e2 = exterior_rep(r, n - m);
    if (c.w1.ambient_dim() != e1.dim || c.w2.ambient_dim() != e2.dim) {
      fail("certificate subspaces have the wrong ambient dimension");
      return out;
    }
    if (!is_invariant(e1, c.w1)) fail("W1 is not invariant");
    if (!is_invariant(e2, c.w2)) fail("W2 is not invariant");
    if (perp(c.w1, n, m) != c.w2) fail("W2 is not the perp of W1");
    auto check_witness = [&](const Subspace& w, const WedgeVector& v, const std::vector<Vector>& vs, std::size_t k,
                             const char* name) {
      if (v.is_zero()) fail(std::string(name) + " witness is zero");
      if (vs.size() != k || !(wedge_of_vectors(r.field, n, vs) == v))
        fail(std::string(name) + " witness vectors do not wedge to the witness");
      if (!w.contains(v.coords())) fail(std::string(name) + " witness lies outside its subspace");
    };
    check_witness(c.w1, c.witness1, c.vectors1, m, "W1");
    check_witness(c.w2, c.witness2, c.vectors2, n - m, "W2");
    return out;
  }
  if (report.subspace_pair) {
    const SubspacePairCertificate& c = *report.subspace_pair;
    if (r.mode != RepMode::Group) fail("subspace-pair certificates need Group mode");
    if (c.v1.dim() != m || c.v2.dim() != n - m || c.v1.ambient_dim() != n || c.v2.ambient_dim() != n) {
      fail("certificate subspaces have the wrong dimensions");
      return out;
    }
    // g V1 + V2 = V iff wedge(g V1) ^ wedge(V2) != 0; wedge(g V1) runs through the
    // orbit of wedge(V1), whose span is the spin of that vector.
    const WedgeVector a = wedge_of_vectors(r.field, n, c.v1.basis_vectors());
    const WedgeVector b = wedge_of_vectors(r.field, n, c.v2.basis_vectors());
    const Subspace orbit_span = spin(exterior_rep(r, m), {a.coords()});
    for (const Vector& s : orbit_span.basis_vectors())
      if (!wedge_product(WedgeVector(r.field, n, m, s), b).is_zero()) {
        fail("some group element moves V1 to a complement of V2");
        break;
      }
    return out;
  }
  fail("NotThick report without a certificate");
  return out;
}

RNumberBounds r_number_bounds(std::uint64_t n, std::uint64_t m) {
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  RNumberBounds b;
  if (m == 0 || m == n) {
    b.exact = 1;
    return b;
  }
  const std::uint64_t k = n - m;
  b.lower = std::max((n - 1) / m + 1, (n - 1) / k + 1);
  b.upper = n;
  if (n % m == 0)
    b.exact = n / m;
  else if (n % k == 0)
    b.exact = n / k;
  else if (n == 5 && (m == 2 || m == 3))
    b.exact = 4;
  else if (m == 1 || k == 1)
    b.exact = n;
  return b;
}

std::vector<Matrix> group_closure(const Representation& r, std::uint64_t cap) {
  if (r.mode != RepMode::Group) throw Error(Errc::PreconditionFailed, "group closure needs Group mode");
  if (!r.field.is_finite()) throw Error(Errc::WrongField, "group closure needs a finite field");
  auto key = [](const Matrix& g) {
    std::vector<std::uint64_t> k;
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) k.push_back(g(i, j).code());
    return k;
  };
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Matrix> out;
  std::deque<Matrix> queue;
  const Matrix id = Matrix::identity(r.field, r.dim);
  seen.insert(key(id));
  out.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Matrix a = std::move(queue.front());
    queue.pop_front();
    for (const Matrix& g : r.generators) {
      Matrix p = a * g;
      if (seen.insert(key(p)).second) {
        if (out.size() >= cap) throw Error(Errc::CapExceeded, "group exceeds the cap");
        out.push_back(p);
        queue.push_back(std::move(p));
      }
    }
  }
  return out;
}

}  // namespace thickrep
