#include "thickrep/exterior.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "modp.hpp"

namespace thickrep {

std::size_t colex_rank(const IndexSet& s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binomial(s[i], i + 1);
  return r;
}

IndexSet colex_unrank(std::size_t rank, std::size_t m) {
  IndexSet s(m);
  for (std::size_t i = m; i-- > 0;) {
    std::size_t c = i;
    while (binomial(c + 1, i + 1) <= rank) ++c;
    s[i] = c;
    rank -= binomial(c, i + 1);
  }
  return s;
}

std::vector<IndexSet> colex_subsets(std::size_t n, std::size_t m) {
  const std::size_t count = binomial(n, m);
  std::vector<IndexSet> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.push_back(colex_unrank(r, m));
  return out;
}

WedgeVector::WedgeVector(FieldSpec f, std::size_t n, std::size_t m)
    : field_(f), n_(n), m_(m), coords_(zero_vector(f, binomial(n, m))) {
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
}

WedgeVector::WedgeVector(FieldSpec f, std::size_t n, std::size_t m, Vector coords)
    : field_(f), n_(n), m_(m), coords_(std::move(coords)) {
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  if (coords_.size() != binomial(n, m)) throw Error(Errc::DimensionMismatch, "coordinate count is not C(n,m)");
}

WedgeVector WedgeVector::basis(const FieldSpec& f, std::size_t n, const IndexSet& s) {
  WedgeVector w(f, n, s.size());
  w.coords_.at(colex_rank(s)) = Scalar::one(f);
  return w;
}

WedgeVector WedgeVector::operator+(const WedgeVector& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw Error(Errc::DimensionMismatch, "wedge degrees differ");
  WedgeVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += o.coords_[i];
  return out;
}

WedgeVector WedgeVector::scaled(const Scalar& c) const {
  WedgeVector out = *this;
  for (Scalar& x : out.coords_) x *= c;
  return out;
}

std::string WedgeVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t r = 0; r < coords_.size(); ++r) {
    if (coords_[r].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[r].to_string() << "*e";
    for (std::size_t i : colex_unrank(r, m_)) os << "_" << i + 1;
  }
  return first ? "0" : os.str();
}

WedgeVector wedge_of_vectors(const FieldSpec& f, std::size_t n, const std::vector<Vector>& vs) {
  const std::size_t m = vs.size();
  if (m > n) throw Error(Errc::DimensionMismatch, "more vectors than the ambient dimension");
  for (const Vector& v : vs)
    if (v.size() != n) throw Error(Errc::DimensionMismatch, "vector length differs from n");
  WedgeVector out(f, n, m);
  if (m == 0) {
    out[0] = Scalar::one(f);
    return out;
  }
  const Matrix cols = Matrix::from_columns(f, vs, n);
  std::vector<std::size_t> all(m);
  for (std::size_t j = 0; j < m; ++j) all[j] = j;
  const auto subsets = colex_subsets(n, m);
  for (std::size_t r = 0; r < subsets.size(); ++r) out[r] = determinant(cols.submatrix(subsets[r], all));
  return out;
}

Matrix compound(const Matrix& a, std::size_t m) {
  if (!a.is_square()) throw Error(Errc::NotSquare, "compound of a non-square matrix");
  const std::size_t n = a.rows();
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  const auto subsets = colex_subsets(n, m);
  Matrix out(a.field(), subsets.size(), subsets.size());
  if (m == 0) {
    out(0, 0) = Scalar::one(a.field());
    return out;
  }
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j) out(i, j) = determinant(a.submatrix(subsets[i], subsets[j]));
  return out;
}

Matrix lie_derivation(const Matrix& x, std::size_t m) {
  if (!x.is_square()) throw Error(Errc::NotSquare, "derivation of a non-square matrix");
  const std::size_t n = x.rows();
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  const FieldSpec& f = x.field();
  const auto subsets = colex_subsets(n, m);
  Matrix out(f, subsets.size(), subsets.size());
  // Column S holds the image of e_S: replace one factor e_s by X e_s = sum_j X[j][s] e_j.
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const IndexSet& s = subsets[col];
    for (std::size_t pos = 0; pos < m; ++pos) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = x(j, s[pos]);
        if (c.is_zero()) continue;
        if (j == s[pos]) {
          out(col, col) += c;
          continue;
        }
        if (std::find(s.begin(), s.end(), j) != s.end()) continue;
        IndexSet t = s;
        t[pos] = j;
        // Moving j from slot pos to its sorted slot crosses every element strictly between.
        const std::size_t lo = std::min(j, s[pos]), hi = std::max(j, s[pos]);
        std::size_t crossed = 0;
        for (std::size_t e : s)
          if (e > lo && e < hi) ++crossed;
        std::sort(t.begin(), t.end());
        const Scalar term = crossed % 2 ? -c : c;
        out(colex_rank(t), col) += term;
      }
    }
  }
  return out;
}

int merge_sign(const IndexSet& s, const IndexSet& t) {
  std::size_t inversions = 0;
  for (std::size_t a : s)
    for (std::size_t b : t) {
      if (a == b) return 0;
      if (a > b) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

WedgeVector wedge_product(const WedgeVector& x, const WedgeVector& y) {
  if (x.n() != y.n()) throw Error(Errc::DimensionMismatch, "wedge factors live in different ambients");
  if (x.m() + y.m() > x.n()) throw Error(Errc::DegreeOverflow, "degree exceeds n");
  const FieldSpec& f = x.field();
  WedgeVector out(f, x.n(), x.m() + y.m());
  const auto sx = colex_subsets(x.n(), x.m()), sy = colex_subsets(y.n(), y.m());
  for (std::size_t i = 0; i < sx.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < sy.size(); ++j) {
      if (y[j].is_zero()) continue;
      const int sign = merge_sign(sx[i], sy[j]);
      if (sign == 0) continue;
      IndexSet u = sx[i];
      u.insert(u.end(), sy[j].begin(), sy[j].end());
      std::sort(u.begin(), u.end());
      const Scalar term = x[i] * y[j];
      out[colex_rank(u)] += sign > 0 ? term : -term;
    }
  }
  return out;
}

Matrix pairing_matrix(const FieldSpec& f, std::size_t n, std::size_t m) {
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  const auto sx = colex_subsets(n, m);
  Matrix p(f, sx.size(), binomial(n, n - m));
  for (std::size_t i = 0; i < sx.size(); ++i) {
    IndexSet comp;
    for (std::size_t e = 0; e < n; ++e)
      if (!std::binary_search(sx[i].begin(), sx[i].end(), e)) comp.push_back(e);
    p(i, colex_rank(comp)) = Scalar(f, merge_sign(sx[i], comp));
  }
  return p;
}

Subspace perp(const Subspace& w, std::size_t n, std::size_t m) {
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  if (w.ambient_dim() != binomial(n, m)) throw Error(Errc::AmbientMismatch, "subspace is not inside the m-th power");
  const FieldSpec& f = w.field();
  if (w.is_zero()) return Subspace::full(f, binomial(n, n - m));
  return kernel(w.basis() * pairing_matrix(f, n, m));
}

namespace {

// Matrix of x -> x ^ v from k^n to the (m+1)-th power.
Matrix annihilator_map(const WedgeVector& v) {
  const std::size_t n = v.n(), m = v.m();
  const FieldSpec& f = v.field();
  if (m == n) return Matrix(f, 0, n);
  const auto subsets = colex_subsets(n, m);
  Matrix a(f, binomial(n, m + 1), n);
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const int sign = merge_sign({j}, subsets[r]);
      if (sign == 0) continue;
      IndexSet u = subsets[r];
      u.insert(std::upper_bound(u.begin(), u.end(), j), j);
      a(colex_rank(u), j) += sign > 0 ? v[r] : -v[r];
    }
  }
  return a;
}

}  // namespace

Decomposition is_decomposable(const WedgeVector& v) {
  Decomposition out;
  if (v.is_zero()) return out;
  const std::size_t n = v.n(), m = v.m();
  const FieldSpec& f = v.field();
  const Subspace ann = kernel(annihilator_map(v));
  if (ann.dim() != m) return out;
  out.decomposable = true;
  if (m == 0) return out;
  out.witness = ann.basis_vectors();
  const WedgeVector w = wedge_of_vectors(f, n, out.witness);
  std::size_t i = 0;
  while (v[i].is_zero()) ++i;
  const Scalar c = w[i] / v[i];
  for (Scalar& x : out.witness[0]) x /= c;
  return out;
}

std::string to_string(Realizability r) {
  switch (r) {
    case Realizability::Realizable: return "Realizable";
    case Realizability::NotRealizable: return "NotRealizable";
    case Realizability::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::uint64_t projective_point_count(std::uint64_t q, std::size_t d) {
  if (d == 0) return 0;
  // 1 + q + ... + q^{d-1}
  std::uint64_t total = 0, power = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < d; ++i) {
    if (total > kMax - power) return kMax;
    total += power;
    if (i + 1 < d) {
      if (power > kMax / q) return kMax;
      power *= q;
    }
  }
  return total;
}

namespace {

// Exhaustive projective scan over a prime field on raw residues. Points are
// visited with the leading nonzero coefficient equal to 1, leading position
// ascending, remaining coefficients in lexicographic residue order.
struct PrimeScanner {
  std::size_t n, m, d, big;
  std::int64_t p;
  std::vector<std::vector<std::int64_t>> basis;  // d rows of length C(n,m)
  // Precomputed incidence of x -> x ^ v: for each (subset r, j) the target row and sign.
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::size_t coord;
    int sign;
  };
  std::vector<Entry> entries;
  std::size_t out_rows;

  PrimeScanner(const Subspace& w, std::size_t n_, std::size_t m_)
      : n(n_), m(m_), d(w.dim()), big(w.ambient_dim()), p(w.field().characteristic()) {
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::int64_t> row(big);
      for (std::size_t j = 0; j < big; ++j) row[j] = static_cast<std::int64_t>(w.basis()(i, j).code());
      basis.push_back(std::move(row));
    }
    out_rows = m < n ? binomial(n, m + 1) : 0;
    const auto subsets = colex_subsets(n, m);
    for (std::size_t r = 0; r < subsets.size(); ++r)
      for (std::size_t j = 0; j < n && m < n; ++j) {
        const int sign = merge_sign({j}, subsets[r]);
        if (sign == 0) continue;
        IndexSet u = subsets[r];
        u.insert(std::upper_bound(u.begin(), u.end(), j), j);
        entries.push_back({colex_rank(u), j, r, sign});
      }
  }

  bool decomposable(const std::vector<std::int64_t>& v) const {
    if (m == n || m == 0) return true;
    std::vector<std::int64_t> a(out_rows * n, 0);
    for (const Entry& e : entries) {
      const std::int64_t x = v[e.coord];
      if (x == 0) continue;
      std::int64_t& slot = a[e.row * n + e.col];
      slot = (slot + (e.sign > 0 ? x : p - x)) % p;
    }
    return modp::rank(a, out_rows, n, p) == n - m;
  }
};

}  // namespace

RealizabilityResult realizable_search(const Subspace& w, std::size_t n, std::size_t m,
                                      const RealizabilityBudget& budget) {
  if (m > n) throw Error(Errc::BadM, "m exceeds n");
  if (w.ambient_dim() != binomial(n, m)) throw Error(Errc::AmbientMismatch, "subspace is not inside the m-th power");
  const FieldSpec& f = w.field();
  RealizabilityResult out;
  const std::size_t d = w.dim();
  auto found = [&](const Vector& coords) {
    const WedgeVector v(f, n, m, coords);
    const Decomposition dec = is_decomposable(v);
    if (!dec.decomposable) return false;
    out.status = Realizability::Realizable;
    out.witness = v;
    out.witness_vectors = dec.witness;
    return true;
  };
  auto combine = [&](const Vector& c) {
    Vector v = zero_vector(f, w.ambient_dim());
    for (std::size_t i = 0; i < d; ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * w.basis()(i, j);
    }
    return v;
  };
  if (d == 0) {
    out.status = Realizability::NotRealizable;
    out.exhaustive = true;
    return out;
  }

  if (f.is_finite()) {
    const std::uint64_t q = f.order();
    const std::uint64_t points = projective_point_count(q, d);
    if (points > budget.max_points) return out;
    out.exhaustive = true;
    if (f.kind() == FieldKind::PrimeField) {
      const PrimeScanner scan(w, n, m);
      const std::int64_t p = scan.p;
      std::vector<std::int64_t> coeff(d), v(scan.big);
      for (std::size_t lead = 0; lead < d; ++lead) {
        const std::size_t tail = d - 1 - lead;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < tail; ++i) count *= q;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
          std::fill(coeff.begin(), coeff.end(), 0);
          coeff[lead] = 1;
          std::uint64_t x = idx;
          for (std::size_t i = d; i-- > lead + 1;) {
            coeff[i] = static_cast<std::int64_t>(x % q);
            x /= q;
          }
          std::fill(v.begin(), v.end(), 0);
          for (std::size_t i = lead; i < d; ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < scan.big; ++j) v[j] = (v[j] + coeff[i] * scan.basis[i][j]) % p;
          }
          ++out.points_examined;
          if (scan.decomposable(v)) {
            Vector coords;
            for (std::int64_t c : v) coords.push_back(Scalar::from_code(f, static_cast<std::uint64_t>(c)));
            found(coords);
            return out;
          }
        }
      }
      out.status = Realizability::NotRealizable;
      return out;
    }
    for (std::size_t lead = 0; lead < d; ++lead) {
      const std::size_t tail = d - 1 - lead;
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < tail; ++i) count *= q;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vector c = zero_vector(f, d);
        c[lead] = Scalar::one(f);
        std::uint64_t x = idx;
        for (std::size_t i = d; i-- > lead + 1;) {
          c[i] = Scalar::from_code(f, x % q);
          x /= q;
        }
        ++out.points_examined;
        if (found(combine(c))) return out;
      }
    }
    out.status = Realizability::NotRealizable;
    return out;
  }

  // Over Q. A one-dimensional subspace has a single projective point, so the
  // answer is exact there.
  for (std::size_t i = 0; i < d; ++i) {
    ++out.points_examined;
    if (found(w.basis().row(i))) return out;
  }
  if (d == 1) {
    out.status = Realizability::NotRealizable;
    out.exhaustive = true;
    return out;
  }
  // Small integer combinations with positive leading coefficient.
  const long long b = budget.coeff_bound;
  const std::uint64_t width = static_cast<std::uint64_t>(2 * b + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d && total <= budget.max_points; ++i) total *= width;
  if (total <= budget.max_points) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vector c;
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        c.emplace_back(f, static_cast<long long>(x % width) - b);
        x /= width;
      }
      auto lead = std::find_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); });
      if (lead == c.end() || canonical_less(*lead, Scalar::zero(f))) continue;
      if (std::count_if(c.begin(), c.end(), [](const Scalar& s) { return !s.is_zero(); }) < 2) continue;
      ++out.points_examined;
      if (found(combine(c))) return out;
    }
  }
  Rng rng(budget.seed);
  for (std::uint64_t t = 0; t < budget.random_trials; ++t) {
    const Vector c = random_vector(f, d, rng, 4 * b + 1);
    if (is_zero_vector(c)) continue;
    ++out.points_examined;
    if (found(combine(c))) return out;
  }
  return out;
}

}  // namespace thickrep
