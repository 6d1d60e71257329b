#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "thickrep/errors.hpp"

namespace thickrep {

enum class FieldKind : std::uint8_t { Rationals, PrimeField, ExtensionField };

struct GaloisTables;

/// The base field of every computation: Q, F_p, or (for extension-of-scalars
/// experiments) F_{p^k}. Finite-field elements are stored as integer codes in
/// [0, q); for F_{p^k} the code is the base-p digit string of the polynomial
/// representative, so F_p embeds into F_{p^k} as the codes 0..p-1.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec extension(std::uint32_t p, std::uint32_t k);

  FieldKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != FieldKind::Rationals; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  /// Number of elements; 0 for Q.
  std::uint64_t order() const noexcept;

  std::string to_string() const;

  bool operator==(const FieldSpec& o) const noexcept {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_;
  }

  const GaloisTables* tables() const noexcept { return tables_; }

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
  std::uint32_t k_ = 1;
  const GaloisTables* tables_ = nullptr;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(const FieldSpec& f, long long v);

  static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  static Scalar from_fraction(const FieldSpec& f, const mpz_class& num, const mpz_class& den);
  static Scalar from_rational(const mpq_class& q);
  /// Finite fields only: the element with the given code in [0, q).
  static Scalar from_code(const FieldSpec& f, std::uint64_t code);
  /// "3/2", "-4", "7"; over F_{p^k} the string is the element code.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Finite fields: code in [0, q). Rationals: throws WrongField.
  std::uint64_t code() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical order: codes ascending over finite fields; over Q by
  /// (numerator, denominator) of the reduced fraction. Used for tie-breaking.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  struct Raw {};
  Scalar(const FieldSpec& f, std::int64_t code, Raw) : field_(f), value_(code) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  FieldSpec field_;
  std::variant<std::int64_t, mpq_class> value_{std::in_place_type<mpq_class>};
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);
bool canonical_less(const Vector& a, const Vector& b);

/// All elements of a finite field in code order.
std::vector<Scalar> field_elements(const FieldSpec& f);

/// All x in the field with x^n = a, sorted canonically. Over Q only rational roots.
std::vector<Scalar> nth_roots(const Scalar& a, std::uint64_t n);

}  // namespace thickrep
