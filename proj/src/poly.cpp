#include "thickrep/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace thickrep {

Poly::Poly(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_)
    if (!(c.field() == field_)) throw Error(Errc::FieldMismatch, "coefficient field differs from polynomial field");
  trim();
}

Poly::Poly(FieldSpec f, std::initializer_list<long long> coeffs) : field_(f) {
  for (long long c : coeffs) coeffs_.emplace_back(f, c);
  trim();
}

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> cs(degree + 1, Scalar::zero(c.field()));
  cs[degree] = c;
  return Poly(c.field(), std::move(cs));
}

Poly Poly::x_minus(const Scalar& root) {
  return Poly(root.field(), std::vector<Scalar>{-root, Scalar::one(root.field())});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::leading() const {
  if (is_zero()) throw Error(Errc::ZeroInput, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Poly Poly::derivative() const {
  std::vector<Scalar> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * Scalar(field_, static_cast<long long>(i)));
  return Poly(field_, std::move(out));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::FieldMismatch, "polynomial fields differ");
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(-Scalar::one(b.field())); }

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::FieldMismatch, "polynomial fields differ");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(out));
}

Poly Poly::scaled(const Scalar& c) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const Scalar& x : coeffs_) out.push_back(x * c);
  return Poly(field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(Errc::FieldMismatch, "polynomial fields differ");
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(a.field_), a};
  std::vector<Scalar> rem = a.coeffs_;
  std::vector<Scalar> quot(a.coeffs_.size() - b.coeffs_.size() + 1, Scalar::zero(a.field_));
  const Scalar inv_lead = b.leading().inverse();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Scalar c = rem[k + db] * inv_lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
  }
  rem.resize(db);
  return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = coeffs_[i].is_one();
    if (i == 0 || !unit) os << coeffs_[i].to_string();
    if (i > 0) os << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return canonical_less(a.coeffs(), b.coeffs());
}

Poly one_poly(const FieldSpec& f) { return Poly(f, std::vector<Scalar>{Scalar::one(f)}); }

// Inverse Frobenius on a polynomial whose derivative vanishes: over F_p every
// coefficient is its own p-th root, so only the exponents shrink.
Poly pth_root(const Poly& f) {
  const std::size_t p = f.field().characteristic();
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(out));
}

// Squarefree decomposition in characteristic p: (g_i, i) with f = prod g_i^i.
std::vector<std::pair<Poly, int>> squarefree(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly one = one_poly(f.field());
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const int p = static_cast<int>(f.field().characteristic());
    for (auto& [g, e] : squarefree(pth_root(c))) out.emplace_back(g, e * p);
  }
  return out;
}

// Null space of a small dense matrix over F_p with int64 entries (rows x cols),
// returned as basis vectors of length cols.
std::vector<std::vector<std::int64_t>> nullspace_fp(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  auto inv = [p](std::int64_t x) {
    std::int64_t result = 1, e = p - 2;
    x %= p;
    while (e > 0) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::int64_t s = inv(a[r][c]);
    for (auto& x : a[r]) x = x * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t t = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - t * a[r][j]) % p + p) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Berlekamp splitting of a monic squarefree polynomial over F_p.
std::vector<Poly> berlekamp(const Poly& f) {
  const FieldSpec& fs = f.field();
  const std::int64_t p = fs.characteristic();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  if (d <= 1) return {f};
  // Row i of Q holds x^{ip} mod f; we need the kernel of (Q - I)^T acting on
  // coefficient vectors, i.e. polynomials g with g^p = g mod f.
  std::vector<std::vector<std::int64_t>> q(d, std::vector<std::int64_t>(d, 0));
  const Poly xp = [&] {
    Poly base = Poly::monomial(Scalar::one(fs), 1), acc = one_poly(fs);
    std::uint64_t e = static_cast<std::uint64_t>(p);
    while (e > 0) {
      if (e & 1) acc = (acc * base) % f;
      base = (base * base) % f;
      e >>= 1;
    }
    return acc;
  }();
  Poly cur = one_poly(fs);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) q[j][i] = static_cast<std::int64_t>(cur.coeff(j).code());
    q[i][i] = (q[i][i] - 1 + p) % p;
    cur = (cur * xp) % f;
  }
  // q[j][i] - delta = coefficient j of x^{ip}-x^i; g (coeff vector) is in the
  // Berlekamp subalgebra iff sum_i g_i (x^{ip} - x^i) = 0, i.e. q g = 0.
  const auto kernel = nullspace_fp(q, p);
  const std::size_t r = kernel.size();
  std::vector<Poly> factors{f};
  if (r == 1) return factors;
  for (const auto& kv : kernel) {
    std::vector<Scalar> cs;
    for (std::int64_t c : kv) cs.emplace_back(fs, c);
    const Poly g(fs, std::move(cs));
    if (g.degree() <= 0) continue;
    std::vector<Poly> next;
    for (const Poly& h : factors) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      Poly rest = h;
      for (std::int64_t s = 0; s < p && rest.degree() > 0; ++s) {
        const Poly t = g - Poly(fs, std::vector<Scalar>{Scalar(fs, s)});
        const Poly common = gcd(rest, t);
        if (common.degree() > 0 && common.degree() < rest.degree()) {
          next.push_back(common);
          rest = rest / common;
        }
      }
      if (rest.degree() > 0) next.push_back(rest.monic());
    }
    factors = std::move(next);
    if (factors.size() == r) break;
  }
  return factors;
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor_fp(const Poly& f) {
  if (f.field().kind() != FieldKind::PrimeField) throw Error(Errc::WrongField, "poly_factor_fp needs a prime field");
  if (f.degree() < 1) throw Error(Errc::PreconditionFailed, "degree must be at least 1");
  if (!f.is_monic()) throw Error(Errc::NotMonic, "input polynomial is not monic");
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [g, e] : squarefree(f)) {
    for (const Poly& h : berlekamp(g)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& pe) { return pe.first == h; });
      if (it == out.end())
        out.emplace_back(h, e);
      else
        it->second += e;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

namespace {

int multiplicity(Poly f, const Scalar& root) {
  const Poly lin = Poly::x_minus(root);
  int mult = 0;
  while (f.degree() > 0) {
    auto [q, r] = Poly::divmod(f, lin);
    if (!r.is_zero()) break;
    f = std::move(q);
    ++mult;
  }
  return mult;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<std::pair<Scalar, int>> poly_roots(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroInput, "roots of the zero polynomial");
  const FieldSpec& fs = f.field();
  std::vector<std::pair<Scalar, int>> out;
  if (f.degree() == 0) return out;
  if (fs.is_finite()) {
    for (const Scalar& x : field_elements(fs))
      if (f.eval(x).is_zero()) out.emplace_back(x, multiplicity(f, x));
    return out;
  }
  // Primitive integer form, then rational root test on candidates +-u/v with
  // u | constant term (after removing the zero root) and v | leading term.
  mpz_class lcm_den = 1;
  for (const Scalar& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const Scalar& c : f.coeffs()) ints.push_back(mpz_class(c.rational() * lcm_den));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  std::map<mpq_class, int> found;
  if (low > 0) found[mpq_class(0)] = static_cast<int>(low);
  const Poly reduced(fs, std::vector<Scalar>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(low), f.coeffs().end()));
  if (reduced.degree() > 0) {
    for (const mpz_class& u : positive_divisors(ints[low])) {
      for (const mpz_class& v : positive_divisors(ints.back())) {
        for (int sign : {1, -1}) {
          mpq_class cand(sign * u, v);
          cand.canonicalize();
          if (found.count(cand)) continue;
          const Scalar x = Scalar::from_rational(cand);
          if (reduced.eval(x).is_zero()) found[cand] = multiplicity(reduced, x);
        }
      }
    }
  }
  for (const auto& [q, mult] : found) out.emplace_back(Scalar::from_rational(q), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

}  // namespace thickrep
