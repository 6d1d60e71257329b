#include "thickrep/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

namespace thickrep {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotMonic: return "NotMonic";
    case Errc::WrongField: return "WrongField";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadM: return "BadM";
    case Errc::BadN: return "BadN";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::BadFamily: return "BadFamily";
    case Errc::CodimTooLarge: return "CodimTooLarge";
    case Errc::CodimMismatch: return "CodimMismatch";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::Singular: return "Singular";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// F_{p^k} tables. Elements are base-p digit codes of polynomials mod a
// primitive modulus; multiplication goes through exp/log tables.

struct GaloisTables {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // low degree first, monic, size k+1
  std::vector<std::uint64_t> exp;      // exp[i] = code of x^i, i < q-1
  std::vector<std::uint64_t> log;      // log[code], undefined at 0

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (p == 2) return a ^ b;
    std::uint64_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }
  std::uint64_t neg(std::uint64_t a) const {
    if (p == 2) return a;
    std::uint64_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp[(log[a] + log[b]) % (q - 1)];
  }
  std::uint64_t inv(std::uint64_t a) const { return exp[(q - 1 - log[a]) % (q - 1)]; }
};

namespace {

// Multiply the polynomial with digit vector `d` by x modulo the monic modulus.
std::vector<std::uint32_t> times_x(const std::vector<std::uint32_t>& d,
                                   const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = d.size();
  std::vector<std::uint32_t> out(k, 0);
  const std::uint32_t top = d[k - 1];
  for (std::size_t i = k - 1; i > 0; --i) out[i] = d[i - 1];
  out[0] = 0;
  for (std::size_t i = 0; i < k; ++i)
    out[i] = static_cast<std::uint32_t>((out[i] + (p - (std::uint64_t(top) * modulus[i]) % p)) % p);
  return out;
}

std::uint64_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

std::unique_ptr<GaloisTables> build_tables(std::uint32_t p, std::uint32_t k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > (1u << 20)) throw Error(Errc::ScaleExceeded, "extension field too large");
  // Smallest primitive monic modulus in code order of its lower coefficients.
  for (std::uint64_t lower = 0; lower < q; ++lower) {
    std::vector<std::uint32_t> modulus(k + 1, 0);
    std::uint64_t c = lower;
    for (std::uint32_t i = 0; i < k; ++i) {
      modulus[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    modulus[k] = 1;
    if (modulus[0] == 0) continue;
    auto t = std::make_unique<GaloisTables>();
    t->p = p;
    t->k = k;
    t->q = q;
    t->modulus = modulus;
    t->exp.assign(q - 1, 0);
    t->log.assign(q, 0);
    std::vector<bool> seen(q, false);
    std::vector<std::uint32_t> cur(k, 0);
    cur[0] = 1;
    bool primitive = true;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      const std::uint64_t code = encode(cur, p);
      if (code == 0 || seen[code]) {
        primitive = false;
        break;
      }
      seen[code] = true;
      t->exp[i] = code;
      t->log[code] = i;
      cur = times_x(cur, modulus, p);
    }
    if (primitive) return t;
  }
  throw Error(Errc::PreconditionFailed, "no primitive modulus found");
}

const GaloisTables* galois_tables(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisTables>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) slot = build_tables(p, k);
  return slot.get();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return t;
}

void require_same(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    throw Error(Errc::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error(Errc::PreconditionFailed, "p must be a prime below 2^31");
  FieldSpec f;
  f.kind_ = FieldKind::PrimeField;
  f.p_ = p;
  f.k_ = 1;
  return f;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return prime(p);
  if (!is_prime(p) || k == 0) throw Error(Errc::PreconditionFailed, "extension field needs prime p and k >= 1");
  FieldSpec f;
  f.kind_ = FieldKind::ExtensionField;
  f.p_ = p;
  f.k_ = k;
  f.tables_ = galois_tables(p, k);
  return f;
}

std::uint64_t FieldSpec::order() const noexcept {
  if (kind_ == FieldKind::Rationals) return 0;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k_; ++i) q *= p_;
  return q;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F" + std::to_string(p_);
    case FieldKind::ExtensionField: return "F" + std::to_string(p_) + "^" + std::to_string(k_);
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t reduce_mod(long long v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

Scalar::Scalar(const FieldSpec& f, long long v) : field_(f) {
  if (f.kind() == FieldKind::Rationals)
    value_ = mpq_class(mpz_class(static_cast<long>(v)));
  else
    value_ = reduce_mod(v, f.characteristic());  // integers land in the prime subfield
}

Scalar Scalar::from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  if (f.kind() == FieldKind::Rationals) {
    mpq_class q(num, den);
    q.canonicalize();
    return from_rational(q);
  }
  const mpz_class p = f.characteristic();
  mpz_class n = num % p, d = den % p;
  if (n < 0) n += p;
  if (d < 0) d += p;
  if (d == 0) throw Error(Errc::DivisionByZero, "denominator vanishes mod p");
  return Scalar(f, n.get_si()) / Scalar(f, d.get_si());
}

Scalar Scalar::from_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::from_code(const FieldSpec& f, std::uint64_t code) {
  if (!f.is_finite()) throw Error(Errc::WrongField, "codes exist only over finite fields");
  if (code >= f.order()) throw Error(Errc::ParseError, "code out of range");
  return Scalar(f, static_cast<std::int64_t>(code), Raw{});
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty()) throw Error(Errc::ParseError, "empty scalar");
  if (f.kind() == FieldKind::ExtensionField) {
    try {
      std::size_t used = 0;
      const unsigned long long code = std::stoull(t, &used);
      if (used != t.size()) throw Error(Errc::ParseError, "bad field code '" + t + "'");
      return from_code(f, code);
    } catch (const std::logic_error&) {
      throw Error(Errc::ParseError, "bad field code '" + t + "'");
    }
  }
  mpz_class num, den = 1;
  const auto slash = t.find('/');
  const bool ok = slash == std::string::npos
                      ? num.set_str(t, 10) == 0
                      : num.set_str(t.substr(0, slash), 10) == 0 && den.set_str(t.substr(slash + 1), 10) == 0;
  if (!ok) throw Error(Errc::ParseError, "bad scalar '" + t + "'");
  return from_fraction(f, num, den);
}

bool Scalar::is_zero() const noexcept {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::code() const {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return static_cast<std::uint64_t>(*r);
  throw Error(Errc::WrongField, "rational scalars have no code");
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(Errc::WrongField, "not a rational scalar");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(mpq_class(1) / std::get<mpq_class>(value_)));
    case FieldKind::PrimeField:
      return Scalar(field_, mod_inverse(std::get<std::int64_t>(value_), field_.characteristic()), Raw{});
    case FieldKind::ExtensionField:
      break;
  }
  return Scalar(field_, static_cast<std::int64_t>(field_.tables()->inv(code())), Raw{});
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (auto* r = std::get_if<std::int64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    case FieldKind::PrimeField: {
      std::int64_t s = std::get<std::int64_t>(a.value_) + std::get<std::int64_t>(b.value_);
      const std::int64_t p = a.field_.characteristic();
      if (s >= p) s -= p;
      return Scalar(a.field_, s, Scalar::Raw{});
    }
    case FieldKind::ExtensionField:
      break;
  }
  return Scalar(a.field_, static_cast<std::int64_t>(a.field_.tables()->add(a.code(), b.code())), Scalar::Raw{});
}

Scalar operator-(const Scalar& a) {
  switch (a.field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(-std::get<mpq_class>(a.value_)));
    case FieldKind::PrimeField: {
      const std::int64_t r = std::get<std::int64_t>(a.value_);
      return Scalar(a.field_, r == 0 ? 0 : static_cast<std::int64_t>(a.field_.characteristic()) - r,
                    Scalar::Raw{});
    }
    case FieldKind::ExtensionField:
      break;
  }
  return Scalar(a.field_, static_cast<std::int64_t>(a.field_.tables()->neg(a.code())), Scalar::Raw{});
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.kind() == FieldKind::Rationals)
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  switch (a.field_.kind()) {
    case FieldKind::Rationals:
      return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    case FieldKind::PrimeField:
      return Scalar(a.field_,
                    (std::get<std::int64_t>(a.value_) * std::get<std::int64_t>(b.value_)) %
                        static_cast<std::int64_t>(a.field_.characteristic()),
                    Scalar::Raw{});
    case FieldKind::ExtensionField:
      break;
  }
  return Scalar(a.field_, static_cast<std::int64_t>(a.field_.tables()->mul(a.code(), b.code())), Scalar::Raw{});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  if (a.field_.kind() == FieldKind::Rationals)
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) / std::get<mpq_class>(b.value_)));
  return a * b.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_.kind() != FieldKind::Rationals)
    return std::get<std::int64_t>(a.value_) < std::get<std::int64_t>(b.value_);
  const mpq_class& x = std::get<mpq_class>(a.value_);
  const mpq_class& y = std::get<mpq_class>(b.value_);
  const int c = cmp(x.get_num(), y.get_num());
  if (c != 0) return c < 0;
  return x.get_den() < y.get_den();
}

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool canonical_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
}

std::vector<Scalar> field_elements(const FieldSpec& f) {
  if (!f.is_finite()) throw Error(Errc::WrongField, "cannot enumerate Q");
  std::vector<Scalar> out;
  out.reserve(f.order());
  for (std::uint64_t c = 0; c < f.order(); ++c) out.push_back(Scalar::from_code(f, c));
  return out;
}

std::vector<Scalar> nth_roots(const Scalar& a, std::uint64_t n) {
  if (a.is_zero()) throw Error(Errc::ZeroInput, "nth_roots of zero");
  if (n == 0) throw Error(Errc::PreconditionFailed, "n must be positive");
  const FieldSpec& f = a.field();
  std::vector<Scalar> out;
  if (f.is_finite()) {
    for (const Scalar& x : field_elements(f))
      if (!x.is_zero() && x.pow(n) == a) out.push_back(x);
    return out;
  }
  // x^n = u/v has a rational solution iff |u| and v are perfect n-th powers
  // (and u > 0 when n is even).
  const mpq_class& q = a.rational();
  mpz_class u = q.get_num(), v = q.get_den();
  const bool negative = u < 0;
  if (negative && n % 2 == 0) return out;
  if (negative) u = -u;
  mpz_class ru, rv;
  if (mpz_root(ru.get_mpz_t(), u.get_mpz_t(), n) == 0) return out;
  if (mpz_root(rv.get_mpz_t(), v.get_mpz_t(), n) == 0) return out;
  const Scalar r = Scalar::from_fraction(f, negative ? mpz_class(-ru) : ru, rv);
  if (n % 2 == 0) out.push_back(-r);
  out.push_back(r);
  std::sort(out.begin(), out.end(), [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
  return out;
}

}  // namespace thickrep
